#pragma once

#include <string>
#include <vector>

#include "teamform/expert_graph.hpp"
#include "teamform/metrics.hpp"

namespace teamform {

/// Which fallback the neighborhood-search solver uses for task skills that
/// the hop-bounded greedy could not cover from the leader's neighborhood.
enum class TfcVariant {
  kRandom,   // seeded uniform draw from the skill's support
  kNearest,  // supporting expert closest to the leader (ties: ascending id)
};

/// Leader pool for the leader-distance baseline.
enum class LeaderPool {
  kAll,         // every node, ascending id
  kHighDegree,  // hd_set order: degree > factor * average, descending degree
};

struct AlgorithmConfig {
  std::uint64_t rng_seed = kDefaultSeed;
  int hop_limit = 2;
  double hd_degree_factor = 2.0;
  /// Variant the community-driver runs inside each desirable community.
  TfcVariant tfc_variant = TfcVariant::kRandom;
};

// ---------------------------------------------------------------------------
// Community-aware neighborhood search (the fast expert-centric solver).
//
// Leader candidates are the high-degree experts holding at least one task
// skill, dequeued by descending degree then ascending id. For each candidate
// the team is rebuilt at growing hop radii (1 .. cfg.hop_limit): the leader
// covers its own task skills, then a greedy max-coverage pass over the
// cumulative hop neighborhood adds experts (ties: most newly-covered skills,
// then fewest hops from the leader, then smallest id). Skills still uncovered
// after the last radius are filled by the variant's fallback. The candidate
// team with the smallest leader distance wins; earlier candidates win ties.
//
// When no expert clears the degree bar, the highest-degree expert holding a
// task skill (ties: smallest id) serves as the only candidate. Skills with no
// support anywhere remain unassigned and surface as coverage < 1.
// ---------------------------------------------------------------------------

/// Random-fallback variant. Fallback draws are seeded per leader from
/// cfg.rng_seed, so results are reproducible and independent of evaluation
/// order; a team built with the same seed is always identical.
Team tfc_r(const ExpertGraph& g, const Task& t, const AlgorithmConfig& cfg = {});

/// Nearest-fallback variant; fully deterministic.
Team tfc_n(const ExpertGraph& g, const Task& t, const AlgorithmConfig& cfg = {});

/// The per-leader team construction both variants reduce over. Exposed so
/// tests and diagnostics can recompute any candidate independently.
Team tfc_candidate(const ExpertGraph& g, const Task& t, ExpertId leader, TfcVariant variant,
                   const AlgorithmConfig& cfg = {});

/// The candidate-leader list tfc_r / tfc_n iterate, including the
/// highest-degree fallback when the degree bar yields nobody.
std::vector<ExpertId> tfc_leader_pool(const ExpertGraph& g, const Task& t,
                                      const AlgorithmConfig& cfg = {});

/// Community driver: for every community whose skill union covers at least
/// ceil(threshold * |t|) of the task, runs the configured variant on the
/// community's induced subgraph. Returned teams are expressed in `g`'s ids,
/// in the input community order. threshold must lie in [0, 1].
std::vector<std::pair<std::string, Team>> dc(const ExpertGraph& g,
                                             const std::vector<Community>& communities,
                                             const Task& t, double threshold,
                                             const AlgorithmConfig& cfg = {});

// ---------------------------------------------------------------------------
// Baselines.
// ---------------------------------------------------------------------------

/// Rarest-skill anchor baseline. The rarest task skill (smallest non-empty
/// support, ties by task order) nominates the candidate set; each candidate
/// is scored by the largest over other task skills of the distance to that
/// skill's nearest support, using one early-exit single-source pass per
/// candidate (no all-pairs precomputation). The best candidate (ties:
/// smallest id) leads and every skill is assigned its nearest support.
Team rarest_first(const ExpertGraph& g, const Task& t);

/// Leader-distance baseline: every leader in the pool assigns each task
/// skill to its nearest supporting expert (ties: expert holding more of the
/// still-unassigned task skills, then smallest id); minimizes the leader
/// distance over distinct members. kHighDegree restricts the pool to the
/// high-degree set and returns an empty team when that set is empty.
Team min_ld(const ExpertGraph& g, const Task& t, LeaderPool pool = LeaderPool::kAll,
            double hd_degree_factor = 2.0);

/// Sum-distance baseline: every expert holding a task skill is tried as an
/// anchor; each task skill goes to the supporting expert nearest to the
/// anchor (ties: smallest id); the anchor leads its team. Minimizes the
/// skill-pair sum distance, breaking ties toward fewer members, then the
/// smaller anchor id.
Team min_sd(const ExpertGraph& g, const Task& t);

/// Canonical algorithm names used by the CLI, plans and reports:
/// "tfc-r", "tfc-n", "rf", "minld", "minld-star", "minsd".
Team run_algorithm(const std::string& name, const ExpertGraph& g, const Task& t,
                   const AlgorithmConfig& cfg = {});
bool known_algorithm(const std::string& name);

}  // namespace teamform
