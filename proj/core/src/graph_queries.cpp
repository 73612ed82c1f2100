#include "teamform/graph_queries.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace teamform {

DistanceEngine::DistanceEngine(const ExpertGraph& g)
    : g_(g), dist_(g.node_count(), kUnreachable), stamp_(g.node_count(), 0), settled_(g.node_count(), 0) {}

namespace {
struct QueueItem {
  double dist;
  ExpertId node;
  // Min-heap on (dist, id): equal-distance nodes settle in ascending id
  // order, which makes every tie observable by queries deterministic.
  bool operator>(const QueueItem& o) const {
    if (dist != o.dist) return dist > o.dist;
    return node > o.node;
  }
};
}  // namespace

template <typename StopFn>
void DistanceEngine::run(ExpertId source, StopFn&& stop) {
  g_.check_id(source);
  ++version_;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> pq;
  dist_[source] = 0.0;
  stamp_[source] = version_;
  settled_[source] = 0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (stamp_[v] == version_ && (settled_[v] || d > dist_[v])) continue;
    settled_[v] = 1;
    if (stop(v, d)) return;
    for (const Neighbor& nb : g_.neighbors(v)) {
      ++relaxations_;
      double nd = d + nb.weight;
      if (stamp_[nb.to] != version_ || nd < dist_[nb.to]) {
        stamp_[nb.to] = version_;
        settled_[nb.to] = 0;
        dist_[nb.to] = nd;
        pq.push({nd, nb.to});
      }
    }
  }
}

double DistanceEngine::distance(ExpertId u, ExpertId v) {
  g_.check_id(v);
  if (u == v) return 0.0;
  double out = kUnreachable;
  run(u, [&](ExpertId settled_node, double d) {
    if (settled_node == v) {
      out = d;
      return true;
    }
    return false;
  });
  return out;
}

std::vector<double> DistanceEngine::distances_to(ExpertId source, std::span<const ExpertId> targets) {
  for (ExpertId t : targets) g_.check_id(t);
  std::size_t remaining = 0;
  std::vector<char> is_target(g_.node_count(), 0);
  for (ExpertId t : targets) {
    if (!is_target[t]) {
      is_target[t] = 1;
      ++remaining;
    }
  }
  run(source, [&](ExpertId v, double) {
    if (is_target[v]) {
      if (--remaining == 0) return true;
      is_target[v] = 0;
    }
    return false;
  });
  std::vector<double> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) out[i] = dist_of(targets[i]);
  return out;
}

std::vector<ExpertId> DistanceEngine::nearest_in_set(ExpertId source,
                                                     std::span<const ExpertId> candidates,
                                                     double* min_dist) {
  if (candidates.empty()) throw std::invalid_argument("nearest_in_set: empty candidate set");
  std::vector<char> is_cand(g_.node_count(), 0);
  for (ExpertId c : candidates) {
    g_.check_id(c);
    is_cand[c] = 1;
  }
  double best = kUnreachable;
  // Settling order is non-decreasing in distance, so once the first candidate
  // settles we only need to continue while the frontier stays at that same
  // distance to collect every tied candidate.
  run(source, [&](ExpertId v, double d) {
    if (best != kUnreachable && d > best) return true;
    if (is_cand[v] && best == kUnreachable) best = d;
    return false;
  });
  std::vector<ExpertId> out;
  if (best != kUnreachable) {
    for (ExpertId c : candidates) {
      if (settled(c) && dist_of(c) == best) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  if (min_dist) *min_dist = best;
  return out;
}

std::vector<double> DistanceEngine::single_source(ExpertId source) {
  run(source, [](ExpertId, double) { return false; });
  std::vector<double> out(g_.node_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = dist_of(static_cast<ExpertId>(v));
  return out;
}

double shortest_path_distance(const ExpertGraph& g, ExpertId u, ExpertId v) {
  DistanceEngine engine(g);
  return engine.distance(u, v);
}

HopEngine::HopEngine(const ExpertGraph& g) : g_(g), hops_(g.node_count(), -1) {
  queue_.reserve(g.node_count());
}

const std::vector<int>& HopEngine::hops_from(ExpertId source, int max_hops) {
  g_.check_id(source);
  std::fill(hops_.begin(), hops_.end(), -1);
  queue_.clear();
  hops_[source] = 0;
  queue_.push_back(source);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    ExpertId v = queue_[head];
    if (max_hops >= 0 && hops_[v] >= max_hops) continue;
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (hops_[nb.to] < 0) {
        hops_[nb.to] = hops_[v] + 1;
        queue_.push_back(nb.to);
      }
    }
  }
  return hops_;
}

std::vector<ExpertId> k_hop_neighborhood(const ExpertGraph& g, ExpertId v, int k) {
  if (k < 0) throw std::invalid_argument("k_hop_neighborhood: negative hop count");
  HopEngine bfs(g);
  const auto& hops = bfs.hops_from(v, k);
  std::vector<ExpertId> out;
  for (std::size_t u = 0; u < hops.size(); ++u) {
    if (hops[u] > 0) out.push_back(static_cast<ExpertId>(u));
  }
  return out;  // ascending by construction
}

std::vector<std::vector<ExpertId>> connected_components(const ExpertGraph& g) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<std::vector<ExpertId>> components;
  std::vector<ExpertId> stack;
  for (ExpertId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    std::vector<ExpertId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      ExpertId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          stack.push_back(nb.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  // Scanning sources in ascending id already orders components by smallest member.
  return components;
}

Community largest_connected_component(const ExpertGraph& g) {
  Community lcc;
  lcc.name = "lcc";
  std::size_t best = 0;
  for (auto& comp : connected_components(g)) {
    if (comp.size() > best) {  // strict `>` keeps the earlier (smallest-id) component on ties
      best = comp.size();
      lcc.members = std::move(comp);
    }
  }
  return lcc;
}

DegreeStats degree_stats(const ExpertGraph& g) {
  DegreeStats stats;
  stats.degree.resize(g.node_count());
  for (ExpertId v = 0; v < g.node_count(); ++v) stats.degree[v] = g.degree(v);
  stats.average = g.average_degree();
  return stats;
}

std::vector<ExpertId> hd_set(const ExpertGraph& g, const std::vector<std::string>& task_skills,
                             double factor) {
  std::set<SkillId> wanted;
  for (const auto& tok : task_skills) {
    SkillId s = g.find_skill(tok);
    if (s != kInvalidSkill) wanted.insert(s);
  }
  const double cutoff = factor * g.average_degree();
  std::vector<ExpertId> out;
  for (ExpertId v = 0; v < g.node_count(); ++v) {
    if (static_cast<double>(g.degree(v)) <= cutoff) continue;
    bool has = false;
    for (SkillId s : g.expert_skill_ids(v)) {
      if (wanted.count(s)) {
        has = true;
        break;
      }
    }
    if (has) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [&](ExpertId a, ExpertId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return out;
}

}  // namespace teamform
