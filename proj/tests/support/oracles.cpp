#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "teamform/types.hpp"

namespace teamform::testing {
namespace {

bool holds(const ExpertGraph& g, ExpertId v, const std::string& token) {
  for (const auto& tok : g.expert_skills(v)) {
    if (tok == token) return true;
  }
  return false;
}

/// Supporting experts per task position, ascending id, by scanning every
/// expert's token list (independent of the graph's support index).
std::vector<std::vector<ExpertId>> scan_supports(const ExpertGraph& g, const Task& t) {
  std::vector<std::vector<ExpertId>> supports(t.size());
  for (ExpertId v = 0; v < g.node_count(); ++v) {
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (holds(g, v, t[p])) supports[p].push_back(v);
    }
  }
  return supports;
}

std::size_t count_unassigned_held(const ExpertGraph& g, const Task& t,
                                  const std::vector<char>& unassigned, ExpertId v) {
  std::size_t n = 0;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (unassigned[p] && holds(g, v, t[p])) ++n;
  }
  return n;
}

double dedup_leader_sum(const DistanceMatrix& m, ExpertId leader,
                        const std::vector<ExpertId>& chosen) {
  std::vector<ExpertId> distinct;
  for (ExpertId v : chosen) {
    if (v != kInvalidExpert) distinct.push_back(v);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  double total = 0.0;
  for (ExpertId v : distinct) {
    if (v == leader) continue;
    total += m[leader][v];  // +inf propagates
  }
  return total;
}

bool better_outcome(std::size_t covered, double ld, const OracleOutcome& best) {
  if (!best.has_team) return true;
  if (covered != best.covered) return covered > best.covered;
  return ld < best.leader_dist;
}

}  // namespace

DistanceMatrix all_pairs_distances(const ExpertGraph& g) {
  std::size_t n = g.node_count();
  DistanceMatrix m(n, std::vector<double>(n, kUnreachable));
  for (std::size_t v = 0; v < n; ++v) {
    m[v][v] = 0.0;
    for (const Neighbor& e : g.neighbors(static_cast<ExpertId>(v))) {
      m[v][e.to] = std::min(m[v][e.to], e.weight);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (is_unreachable(m[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (is_unreachable(m[k][j])) continue;
        m[i][j] = std::min(m[i][j], m[i][k] + m[k][j]);
      }
    }
  }
  return m;
}

double matrix_diameter(const DistanceMatrix& m, const std::vector<ExpertId>& members) {
  double worst = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      double d = m[members[i]][members[j]];
      if (is_unreachable(d)) return kUnreachable;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

double matrix_sum_distance(const DistanceMatrix& m, const Team& team, const Task& t) {
  std::vector<ExpertId> assigned;
  for (const auto& tok : t) {
    auto it = team.assignment.find(tok);
    if (it != team.assignment.end()) assigned.push_back(it->second);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    for (std::size_t j = i + 1; j < assigned.size(); ++j) {
      double d = m[assigned[i]][assigned[j]];
      if (is_unreachable(d)) return kUnreachable;
      total += d;
    }
  }
  return total;
}

double matrix_leader_distance(const DistanceMatrix& m, const Team& team) {
  if (!team.leader) return 0.0;
  double total = 0.0;
  for (ExpertId v : team.members()) {
    if (v == *team.leader) continue;
    double d = m[*team.leader][v];
    if (is_unreachable(d)) return kUnreachable;
    total += d;
  }
  return total;
}

OracleOutcome exhaustive_min_ld(const ExpertGraph& g, const Task& t, const DistanceMatrix& m) {
  auto supports = scan_supports(g, t);
  OracleOutcome best;
  for (ExpertId leader = 0; leader < g.node_count(); ++leader) {
    std::vector<char> unassigned(t.size(), 1);
    std::vector<ExpertId> chosen(t.size(), kInvalidExpert);
    std::size_t covered = 0;
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (supports[p].empty()) continue;  // unsupported skills stay uncovered
      double dmin = kUnreachable;
      for (ExpertId e : supports[p]) dmin = std::min(dmin, m[leader][e]);
      // A support cut off from this leader ties at infinity, so the regular
      // tie-break below runs over the whole support and the skill stays
      // covered (matching the solver under test).
      ExpertId pick = kInvalidExpert;
      std::size_t best_gain = 0;
      for (ExpertId e : supports[p]) {
        if (m[leader][e] != dmin) continue;
        if (pick == kInvalidExpert) pick = e;  // ascending ids: first is smallest
        std::size_t gain = count_unassigned_held(g, t, unassigned, e);
        if (gain > best_gain) {
          best_gain = gain;
          pick = e;
        }
      }
      chosen[p] = pick;
      unassigned[p] = 0;
      ++covered;
    }
    double ld = dedup_leader_sum(m, leader, chosen);
    if (better_outcome(covered, ld, best)) {
      best.has_team = true;
      best.leader = leader;
      best.leader_dist = ld;
      best.covered = covered;
    }
  }
  return best;
}

namespace {

/// BFS hop counts from `source`, capped at `max_hops`; -1 = beyond the cap.
std::vector<int> bfs_hops(const ExpertGraph& g, ExpertId source, int max_hops) {
  std::vector<int> hops(g.node_count(), -1);
  hops[source] = 0;
  std::deque<ExpertId> queue{source};
  while (!queue.empty()) {
    ExpertId u = queue.front();
    queue.pop_front();
    if (hops[u] == max_hops) continue;
    for (const Neighbor& e : g.neighbors(u)) {
      if (hops[e.to] == -1) {
        hops[e.to] = hops[u] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return hops;
}

struct TfcTrace {
  std::vector<ExpertId> chosen;  // per task position, kInvalidExpert = uncovered
  std::size_t covered = 0;
};

TfcTrace trace_candidate(const ExpertGraph& g, const Task& t,
                         const std::vector<std::vector<ExpertId>>& supports, ExpertId leader,
                         TfcVariant variant, const AlgorithmConfig& cfg,
                         const DistanceMatrix& m) {
  const std::size_t k = t.size();
  TfcTrace trace;
  trace.chosen.assign(k, kInvalidExpert);

  std::vector<char> leader_has(k, 0);
  for (std::size_t p = 0; p < k; ++p) leader_has[p] = holds(g, leader, t[p]) ? 1 : 0;

  auto reset_to_leader = [&](std::vector<char>& not_yet) {
    for (std::size_t p = 0; p < k; ++p) {
      trace.chosen[p] = leader_has[p] ? leader : kInvalidExpert;
      not_yet[p] = leader_has[p] ? 0 : 1;
    }
  };
  auto any = [](const std::vector<char>& bits) {
    return std::any_of(bits.begin(), bits.end(), [](char b) { return b != 0; });
  };

  std::vector<char> not_yet(k, 0);
  reset_to_leader(not_yet);
  auto hops = bfs_hops(g, leader, cfg.hop_limit);

  for (int hop = 1; hop <= cfg.hop_limit && any(not_yet); ++hop) {
    reset_to_leader(not_yet);
    struct Entry {
      ExpertId expert;
      int hop;
      std::vector<char> mask;
      bool used = false;
    };
    std::vector<Entry> pool;
    std::vector<char> tc(k, 0);
    for (std::size_t u = 0; u < hops.size(); ++u) {
      if (hops[u] <= 0 || hops[u] > hop) continue;
      std::vector<char> mask(k, 0);
      bool non_empty = false;
      for (std::size_t p = 0; p < k; ++p) {
        if (!leader_has[p] && holds(g, static_cast<ExpertId>(u), t[p])) {
          mask[p] = 1;
          tc[p] = 1;
          non_empty = true;
        }
      }
      if (non_empty) pool.push_back({static_cast<ExpertId>(u), hops[u], std::move(mask), false});
    }
    while (any(tc)) {
      std::size_t best_gain = 0;
      int best_hop = 0;
      std::size_t best_at = pool.size();
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].used) continue;
        std::size_t gain = 0;
        for (std::size_t p = 0; p < k; ++p) {
          if (pool[i].mask[p] && tc[p]) ++gain;
        }
        if (gain == 0) continue;
        if (best_at == pool.size() || gain > best_gain ||
            (gain == best_gain && pool[i].hop < best_hop)) {
          best_gain = gain;
          best_hop = pool[i].hop;
          best_at = i;
        }
      }
      if (best_at == pool.size()) break;
      pool[best_at].used = true;
      for (std::size_t p = 0; p < k; ++p) {
        if (pool[best_at].mask[p] && tc[p]) trace.chosen[p] = pool[best_at].expert;
        if (pool[best_at].mask[p]) {
          tc[p] = 0;
          not_yet[p] = 0;
        }
      }
    }
  }

  if (any(not_yet)) {
    SplitMix64 rng(derive_seed(cfg.rng_seed, leader, 0x7FC));
    for (std::size_t p = 0; p < k; ++p) {
      if (!not_yet[p] || supports[p].empty()) continue;
      if (variant == TfcVariant::kRandom) {
        trace.chosen[p] = supports[p][static_cast<std::size_t>(rng.bounded(supports[p].size()))];
      } else {
        ExpertId pick = kInvalidExpert;
        double dmin = kUnreachable;
        for (ExpertId e : supports[p]) {
          if (m[leader][e] < dmin) {
            dmin = m[leader][e];
            pick = e;
          }
        }
        trace.chosen[p] = pick == kInvalidExpert ? supports[p].front() : pick;
      }
    }
  }

  for (std::size_t p = 0; p < k; ++p) {
    if (trace.chosen[p] != kInvalidExpert) ++trace.covered;
  }
  return trace;
}

}  // namespace

OracleOutcome reconstruct_tfc(const ExpertGraph& g, const Task& t, TfcVariant variant,
                              const AlgorithmConfig& cfg, const DistanceMatrix& m) {
  auto supports = scan_supports(g, t);

  // Candidate pool: degree above factor * average and holding a task skill,
  // descending degree then ascending id; else the best-degree holder alone.
  double avg = g.node_count() == 0
                   ? 0.0
                   : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  std::vector<ExpertId> holders;
  for (ExpertId v = 0; v < g.node_count(); ++v) {
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (holds(g, v, t[p])) {
        holders.push_back(v);
        break;
      }
    }
  }
  std::vector<ExpertId> pool;
  for (ExpertId v : holders) {
    if (static_cast<double>(g.degree(v)) > cfg.hd_degree_factor * avg) pool.push_back(v);
  }
  std::sort(pool.begin(), pool.end(), [&](ExpertId a, ExpertId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  if (pool.empty() && !holders.empty()) {
    ExpertId top = holders.front();
    for (ExpertId v : holders) {
      if (g.degree(v) > g.degree(top)) top = v;
    }
    pool.push_back(top);
  }

  OracleOutcome best;
  for (ExpertId leader : pool) {
    TfcTrace trace = trace_candidate(g, t, supports, leader, variant, cfg, m);
    std::vector<ExpertId> with_leader = trace.chosen;
    with_leader.push_back(leader);  // leader is a member even with nothing assigned
    double ld = dedup_leader_sum(m, leader, with_leader);
    if (better_outcome(trace.covered, ld, best)) {
      best.has_team = true;
      best.leader = leader;
      best.leader_dist = ld;
      best.covered = trace.covered;
    }
  }
  return best;
}

RandomInstance make_random_instance(std::uint64_t seed, bool integer_weights) {
  SplitMix64 rng(derive_seed(seed, 0, 0xB5));
  auto unit = [&] { return static_cast<double>(rng.next() >> 11) * (1.0 / 9007199254740992.0); };

  static const std::string kTokens[] = {"a", "b", "c", "d", "e", "f"};
  std::size_t universe = 2 + rng.bounded(5);  // 2..6 tokens in play
  std::size_t nodes = 5 + rng.bounded(21);    // 5..25 nodes

  ExpertGraphBuilder builder;
  for (std::size_t i = 0; i < nodes; ++i) {
    // 0..3 skills; zero-skill nodes allowed. Capped by the universe so the
    // distinct draw below can terminate.
    std::size_t count = std::min<std::size_t>(rng.bounded(4), universe);
    std::set<std::string> skills;
    while (skills.size() < count) skills.insert(kTokens[rng.bounded(universe)]);
    builder.add_expert("x" + std::to_string(i), {skills.begin(), skills.end()});
  }
  double p = 0.10 + 0.05 * static_cast<double>(rng.bounded(5));
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = i + 1; j < nodes; ++j) {
      if (unit() >= p) continue;
      double w = integer_weights ? static_cast<double>(1 + rng.bounded(4)) : 0.1 + 0.9 * unit();
      builder.add_edge(static_cast<ExpertId>(i), static_cast<ExpertId>(j), w);
    }
  }

  RandomInstance instance{builder.build(), {}};
  std::size_t k = 1 + rng.bounded(universe);
  std::set<std::string> picked;
  while (picked.size() < k) picked.insert(kTokens[rng.bounded(universe)]);
  instance.task.assign(picked.begin(), picked.end());
  return instance;
}

}  // namespace teamform::testing
