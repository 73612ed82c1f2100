#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "teamform/types.hpp"

namespace teamform {

/// Materialized view of one node: dense id, display name, sorted skill tokens.
struct Expert {
  ExpertId id = kInvalidExpert;
  std::string name;
  std::vector<std::string> skills;
};

/// Named subset of a graph's experts. `parent` is empty for top-level
/// communities; when set, members must be contained in the parent's members.
struct Community {
  std::string name;
  std::string parent;  // empty = none
  std::vector<ExpertId> members;  // sorted ascending, unique
};

struct Neighbor {
  ExpertId to;
  double weight;
};

/// Immutable weighted undirected collaboration graph.
///
/// Nodes carry a display name and a set of skill tokens; skills are interned
/// per graph so algorithms can work with dense SkillIds and bitmasks. Edge
/// weights are collaboration distances (smaller = closer); parallel edges and
/// self-loops are rejected at build time. The structure is safe for
/// concurrent reads once built.
class ExpertGraph {
 public:
  ExpertGraph() = default;

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return names_.empty(); }

  const std::string& name(ExpertId v) const { return names_.at(v); }

  /// Neighbors sorted by ascending node id.
  std::span<const Neighbor> neighbors(ExpertId v) const {
    check_id(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(ExpertId v) const {
    check_id(v);
    return offsets_[v + 1] - offsets_[v];
  }
  /// 2|E| / |V|; 0 for the empty graph.
  double average_degree() const {
    return names_.empty() ? 0.0 : 2.0 * static_cast<double>(edge_count_) / static_cast<double>(names_.size());
  }

  // --- skills --------------------------------------------------------------

  std::size_t skill_count() const { return skill_names_.size(); }
  const std::string& skill_name(SkillId s) const { return skill_names_.at(s); }
  /// Sorted, de-duplicated union of every expert's skill tokens.
  const std::vector<std::string>& skill_universe() const { return skill_names_; }
  /// kInvalidSkill when the token is not present in this graph.
  SkillId find_skill(const std::string& token) const;

  /// Skill ids held by `v`, sorted ascending.
  std::span<const SkillId> expert_skill_ids(ExpertId v) const {
    check_id(v);
    return {skill_ids_.data() + skill_offsets_[v], skill_offsets_[v + 1] - skill_offsets_[v]};
  }
  std::vector<std::string> expert_skills(ExpertId v) const;
  bool expert_has_skill(ExpertId v, SkillId s) const;

  /// Experts holding skill `s`, sorted by ascending id.
  std::span<const ExpertId> skill_support(SkillId s) const {
    if (s >= skill_names_.size()) throw std::invalid_argument("unknown skill id");
    return {support_.data() + support_offsets_[s], support_offsets_[s + 1] - support_offsets_[s]};
  }
  /// Empty span when the token is unknown to this graph.
  std::span<const ExpertId> skill_support(const std::string& token) const;

  Expert expert(ExpertId v) const { return Expert{v, name(v), expert_skills(v)}; }

  /// Re-indexed copy restricted to `members` (sorted unique ids); edges are
  /// kept only when both endpoints are members. Second result maps each new
  /// dense id back to the id it had in this graph.
  std::pair<ExpertGraph, std::vector<ExpertId>> induced_subgraph(
      const std::vector<ExpertId>& members) const;

  void check_id(ExpertId v) const {
    if (v >= names_.size()) throw std::invalid_argument("expert id out of range: " + std::to_string(v));
  }

 private:
  friend class ExpertGraphBuilder;

  std::vector<std::string> names_;
  std::vector<std::size_t> offsets_;   // size |V|+1
  std::vector<Neighbor> adjacency_;    // CSR, both directions stored
  std::size_t edge_count_ = 0;

  std::vector<std::string> skill_names_;    // sorted unique tokens
  std::vector<std::size_t> skill_offsets_;  // per expert, size |V|+1
  std::vector<SkillId> skill_ids_;          // per expert, sorted
  std::vector<std::size_t> support_offsets_;  // per skill, size |S|+1
  std::vector<ExpertId> support_;             // per skill, sorted expert ids
};

/// Accumulates nodes and edges, validates, and freezes into an ExpertGraph.
class ExpertGraphBuilder {
 public:
  /// Skill tokens must be non-empty, lowercase and whitespace-free;
  /// duplicates within one expert are merged.
  ExpertId add_expert(std::string name, std::vector<std::string> skills);

  /// Undirected edge; rejects self-loops, unknown endpoints, repeated pairs
  /// and non-finite or negative weights.
  void add_edge(ExpertId u, ExpertId v, double weight);

  ExpertGraph build();

 private:
  struct PendingEdge {
    ExpertId u, v;
    double weight;
  };
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> skills_;
  std::vector<PendingEdge> edges_;
  std::set<std::pair<ExpertId, ExpertId>> edge_keys_;  // normalized (min,max)
};

/// Checks the skill-token lexical rule shared by builder and ingest:
/// non-empty, no whitespace, no uppercase ASCII.
bool valid_skill_token(const std::string& token);

/// Throws std::invalid_argument unless every community's members are sorted,
/// unique, within the graph, and contained in their parent (when named).
/// Parents must appear in the list before their children.
void validate_communities(const ExpertGraph& g, const std::vector<Community>& communities);

}  // namespace teamform
