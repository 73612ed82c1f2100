#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "teamform/expert_graph.hpp"

namespace teamform {

/// A task is an ordered list of distinct skill tokens. Order matters only for
/// deterministic tie-breaking inside the solvers; the cost metrics themselves
/// are permutation-invariant.
using Task = std::vector<std::string>;

/// Throws std::invalid_argument unless tokens are distinct, non-empty and
/// lexically valid skill tokens.
void validate_task(const Task& t);

/// Result of a team-formation run: an optional leader plus a skill → expert
/// assignment over a subset of the task. Experts may cover several skills.
struct Team {
  std::optional<ExpertId> leader;
  std::map<std::string, ExpertId> assignment;
  /// Experts that were added by a fallback step rather than found through the
  /// neighborhood search (sorted, unique). Used for the starred grid marks
  /// and the random-expert fraction in benchmark reports.
  std::vector<ExpertId> fallback_experts;

  /// Sorted unique ids: everyone in the assignment plus the leader.
  std::vector<ExpertId> members() const;
  /// Fraction of `t` covered by the assignment (1.0 for an empty task).
  double coverage(const Task& t) const;
  /// True when every assigned expert actually holds the skill it covers.
  bool assignment_valid(const ExpertGraph& g) const;
};

/// Cost summary of one team against one task.
struct CostReport {
  std::size_t cardinality = 0;
  double diameter = 0.0;
  double sum_distance = 0.0;
  double leader_distance = 0.0;
  double covered = 0.0;
};

/// Largest weighted shortest-path distance between any two members; 0 for a
/// singleton; kUnreachable when the team spans components.
/// Pre: at least one member (leader counts) — else std::invalid_argument.
double diameter(const ExpertGraph& g, const Team& team);

/// Sum over unordered task-skill pairs {s_i, s_j} of the weighted distance
/// between the experts assigned to them; pairs covered by one expert add 0.
/// Pre: the assignment covers every skill of `t` — else ContractViolation.
double sum_distance(const ExpertGraph& g, const Team& team, const Task& t);

/// Sum of weighted distances from the leader to every other member;
/// kUnreachable if any member cannot be reached.
/// Pre: the team has a leader — else ContractViolation.
double leader_distance(const ExpertGraph& g, const Team& team);

/// Bundles all metrics, tolerating partial coverage: the pair sum runs over
/// assigned skills only, leader distance is 0 for leaderless teams, and
/// `covered` reports the assigned fraction instead of failing.
CostReport evaluate(const ExpertGraph& g, const Team& team, const Task& t);

/// CSV layout shared by the CLI and the benchmark harness.
std::string cost_csv_header();
std::string cost_csv_row(const std::string& algorithm, std::size_t k, const CostReport& report,
                         double wall_ms, std::size_t random_experts);

}  // namespace teamform
