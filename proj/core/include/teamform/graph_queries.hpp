#pragma once

#include <span>
#include <string>
#include <vector>

#include "teamform/expert_graph.hpp"
#include "teamform/types.hpp"

namespace teamform {

/// Weighted shortest-path distance between two experts; kUnreachable when no
/// path exists. Convenience wrapper around a one-shot DistanceEngine — inner
/// loops should share an engine instead of calling this repeatedly.
double shortest_path_distance(const ExpertGraph& g, ExpertId u, ExpertId v);

/// Reusable Dijkstra workspace over one graph.
///
/// Every query runs a fresh Dijkstra from the requested source but stops as
/// early as the query allows (first target settled, all targets settled, …).
/// Buffers are versioned so repeated queries cost no re-initialization.
/// Not safe for concurrent use; create one engine per thread.
class DistanceEngine {
 public:
  explicit DistanceEngine(const ExpertGraph& g);

  /// Distance u -> v, early exit once v is settled.
  double distance(ExpertId u, ExpertId v);

  /// Distances from `source` to each of `targets` (kUnreachable entries for
  /// separated pairs); stops once every target is settled.
  std::vector<double> distances_to(ExpertId source, std::span<const ExpertId> targets);

  /// All candidates at exactly the minimum distance from `source`, sorted by
  /// ascending id, plus that distance through `min_dist` (kUnreachable and an
  /// empty vector when none are reachable). `candidates` must be non-empty.
  std::vector<ExpertId> nearest_in_set(ExpertId source, std::span<const ExpertId> candidates,
                                       double* min_dist);

  /// Full single-source distances (kUnreachable entries for separated nodes).
  std::vector<double> single_source(ExpertId source);

  /// Number of edge relaxations since construction (rough work counter,
  /// useful for performance assertions in tests).
  std::uint64_t relaxations() const { return relaxations_; }

 private:
  template <typename StopFn>
  void run(ExpertId source, StopFn&& stop);
  double dist_of(ExpertId v) const { return stamp_[v] == version_ ? dist_[v] : kUnreachable; }
  bool settled(ExpertId v) const { return stamp_[v] == version_ && settled_[v]; }

  const ExpertGraph& g_;
  std::vector<double> dist_;
  std::vector<std::uint32_t> stamp_;
  std::vector<char> settled_;
  std::uint32_t version_ = 0;
  std::uint64_t relaxations_ = 0;

  friend class HopEngine;
};

/// Reusable BFS workspace (unweighted hop counts).
class HopEngine {
 public:
  explicit HopEngine(const ExpertGraph& g);

  /// Hop distance from `source` for every node (-1 = beyond `max_hops` or
  /// unreachable). max_hops < 0 means unbounded.
  const std::vector<int>& hops_from(ExpertId source, int max_hops = -1);

 private:
  const ExpertGraph& g_;
  std::vector<int> hops_;
  std::vector<ExpertId> queue_;
};

/// Cumulative k-hop neighborhood of `v` (nodes within ≤ k hops, excluding v),
/// sorted by ascending id. k = 0 yields an empty set.
std::vector<ExpertId> k_hop_neighborhood(const ExpertGraph& g, ExpertId v, int k);

/// Connected components as sorted member lists, ordered by smallest member id.
std::vector<std::vector<ExpertId>> connected_components(const ExpertGraph& g);

/// The largest component as a Community named "lcc" (ties broken toward the
/// component containing the smallest id). Empty members for an empty graph.
Community largest_connected_component(const ExpertGraph& g);

struct DegreeStats {
  std::vector<std::size_t> degree;  // per node
  double average = 0.0;             // 2|E| / |V|
};
DegreeStats degree_stats(const ExpertGraph& g);

/// High-degree expert pool: degree strictly greater than factor * average
/// degree AND holding at least one of `task_skills`. Ordered by descending
/// degree, then ascending id — the canonical candidate-leader dequeue order.
std::vector<ExpertId> hd_set(const ExpertGraph& g, const std::vector<std::string>& task_skills,
                             double factor = 2.0);

}  // namespace teamform
