#include "teamform/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "teamform/graph_queries.hpp"

namespace teamform {

namespace {

/// Task tokens resolved against one graph. Positions keep task order; tokens
/// absent from the graph resolve to kInvalidSkill and empty support.
struct ResolvedTask {
  const Task* task;
  std::vector<SkillId> ids;                          // per position
  std::vector<std::span<const ExpertId>> supports;   // per position

  std::size_t size() const { return ids.size(); }
};

ResolvedTask resolve(const ExpertGraph& g, const Task& t) {
  if (t.empty()) throw std::invalid_argument("task must contain at least one skill");
  validate_task(t);
  ResolvedTask r;
  r.task = &t;
  r.ids.reserve(t.size());
  r.supports.reserve(t.size());
  for (const auto& tok : t) {
    SkillId s = g.find_skill(tok);
    r.ids.push_back(s);
    r.supports.push_back(s == kInvalidSkill ? std::span<const ExpertId>{} : g.skill_support(s));
  }
  return r;
}

/// Positions of `t` covered by expert `v`'s skills, as a bitmask.
SmallBitset positions_held(const ExpertGraph& g, const ResolvedTask& t, ExpertId v) {
  SmallBitset mask(t.size());
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t.ids[p] != kInvalidSkill && g.expert_has_skill(v, t.ids[p])) mask.set(p);
  }
  return mask;
}

double leader_distance_of(DistanceEngine& engine, ExpertId leader, const Team& team) {
  auto members = team.members();
  auto dist = engine.distances_to(leader, members);
  double total = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == leader) continue;
    if (is_unreachable(dist[i])) return kUnreachable;
    total += dist[i];
  }
  return total;
}

/// Shared "better candidate" ordering: coverage first, then the cost, then
/// first-seen wins (callers iterate in the canonical order).
bool improves(double coverage, double cost, double best_coverage, double best_cost) {
  if (coverage != best_coverage) return coverage > best_coverage;
  return cost < best_cost;
}

}  // namespace

std::vector<ExpertId> tfc_leader_pool(const ExpertGraph& g, const Task& t,
                                      const AlgorithmConfig& cfg) {
  auto pool = hd_set(g, t, cfg.hd_degree_factor);
  if (!pool.empty()) return pool;
  // Nobody clears the degree bar: fall back to the highest-degree expert
  // holding at least one task skill (ties toward the smallest id).
  ResolvedTask rt = resolve(g, t);
  ExpertId best = kInvalidExpert;
  std::size_t best_degree = 0;
  for (ExpertId v = 0; v < g.node_count(); ++v) {
    if (!positions_held(g, rt, v).any()) continue;
    if (best == kInvalidExpert || g.degree(v) > best_degree) {
      best = v;
      best_degree = g.degree(v);
    }
  }
  if (best == kInvalidExpert) return {};
  return {best};
}

Team tfc_candidate(const ExpertGraph& g, const Task& t, ExpertId leader, TfcVariant variant,
                   const AlgorithmConfig& cfg) {
  g.check_id(leader);
  ResolvedTask rt = resolve(g, t);
  const std::size_t n_skills = rt.size();

  Team team;
  team.leader = leader;

  const SmallBitset leader_mask = positions_held(g, rt, leader);
  for (std::size_t p = 0; p < n_skills; ++p) {
    if (leader_mask.test(p)) team.assignment[(*rt.task)[p]] = leader;
  }

  // The leader's own skills never count as "not yet covered": the search only
  // has to reach the remainder of the task.
  SmallBitset not_yet(n_skills);
  for (std::size_t p = 0; p < n_skills; ++p) {
    if (!leader_mask.test(p)) not_yet.set(p);
  }

  HopEngine bfs(g);
  const std::vector<int>& hops = bfs.hops_from(leader, cfg.hop_limit);

  for (int hop = 1; hop <= cfg.hop_limit && not_yet.any(); ++hop) {
    // Rebuild the whole candidate team at this radius.
    team.assignment.clear();
    for (std::size_t p = 0; p < n_skills; ++p) {
      if (leader_mask.test(p)) team.assignment[(*rt.task)[p]] = leader;
    }
    not_yet = SmallBitset(n_skills);
    for (std::size_t p = 0; p < n_skills; ++p) {
      if (!leader_mask.test(p)) not_yet.set(p);
    }

    struct Candidate {
      ExpertId expert;
      int hop;
      SmallBitset mask;  // task positions the expert can newly contribute
      bool used = false;
    };
    std::vector<Candidate> pool;
    SmallBitset coverable(n_skills);
    for (std::size_t u = 0; u < hops.size(); ++u) {
      if (hops[u] <= 0 || hops[u] > hop) continue;  // cumulative neighborhood, leader excluded
      SmallBitset mask = positions_held(g, rt, static_cast<ExpertId>(u));
      mask.and_not(leader_mask);
      if (!mask.any()) continue;
      for (std::size_t p = 0; p < n_skills; ++p) {
        if (mask.test(p)) coverable.set(p);
      }
      pool.push_back({static_cast<ExpertId>(u), hops[u], std::move(mask), false});
    }

    SmallBitset tc = coverable;  // skills reachable at this radius, shrinking as they are covered
    while (tc.any()) {
      std::size_t best_gain = 0;
      int best_hop = 0;
      std::size_t best_at = pool.size();
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].used) continue;
        std::size_t gain = pool[i].mask.count_and(tc);
        if (gain == 0) continue;
        bool better = false;
        if (best_at == pool.size() || gain > best_gain) {
          better = true;
        } else if (gain == best_gain) {
          if (pool[i].hop < best_hop) {
            better = true;
          } else if (pool[i].hop == best_hop && pool[i].expert < pool[best_at].expert) {
            better = true;
          }
        }
        if (better) {
          best_gain = gain;
          best_hop = pool[i].hop;
          best_at = i;
        }
      }
      if (best_at == pool.size()) break;  // nothing contributes anymore
      Candidate& picked = pool[best_at];
      picked.used = true;
      for (std::size_t p = 0; p < n_skills; ++p) {
        if (picked.mask.test(p) && tc.test(p)) {
          team.assignment[(*rt.task)[p]] = picked.expert;
        }
      }
      tc.and_not(picked.mask);
      not_yet.and_not(picked.mask);
    }
  }

  // Fallback for whatever the bounded search left uncovered, in task order.
  if (not_yet.any()) {
    SplitMix64 rng(derive_seed(cfg.rng_seed, leader, 0x7FC));
    DistanceEngine engine(g);
    for (std::size_t p = 0; p < n_skills; ++p) {
      if (!not_yet.test(p)) continue;
      auto support = rt.supports[p];
      if (support.empty()) continue;  // nobody anywhere holds it: stays uncovered
      ExpertId chosen = kInvalidExpert;
      if (variant == TfcVariant::kRandom) {
        chosen = support[static_cast<std::size_t>(rng.bounded(support.size()))];
      } else {
        double d = kUnreachable;
        auto nearest = engine.nearest_in_set(leader, support, &d);
        // Disconnected support still deserves an expert: fall back to the
        // smallest id so the skill is covered (cost metrics then report the
        // separation honestly).
        chosen = nearest.empty() ? support.front() : nearest.front();
      }
      team.assignment[(*rt.task)[p]] = chosen;
      team.fallback_experts.push_back(chosen);
    }
    std::sort(team.fallback_experts.begin(), team.fallback_experts.end());
    team.fallback_experts.erase(
        std::unique(team.fallback_experts.begin(), team.fallback_experts.end()),
        team.fallback_experts.end());
  }
  return team;
}

namespace {

Team tfc_impl(const ExpertGraph& g, const Task& t, TfcVariant variant, const AlgorithmConfig& cfg) {
  auto leaders = tfc_leader_pool(g, t, cfg);
  if (leaders.empty()) return Team{};  // no expert holds any task skill
  DistanceEngine engine(g);
  Team best;
  double best_coverage = -1.0;
  double best_ld = kUnreachable;
  for (ExpertId leader : leaders) {
    Team cand = tfc_candidate(g, t, leader, variant, cfg);
    double coverage = cand.coverage(t);
    double ld = leader_distance_of(engine, leader, cand);
    if (improves(coverage, ld, best_coverage, best_ld)) {
      best = std::move(cand);
      best_coverage = coverage;
      best_ld = ld;
    }
  }
  return best;
}

}  // namespace

Team tfc_r(const ExpertGraph& g, const Task& t, const AlgorithmConfig& cfg) {
  return tfc_impl(g, t, TfcVariant::kRandom, cfg);
}

Team tfc_n(const ExpertGraph& g, const Task& t, const AlgorithmConfig& cfg) {
  return tfc_impl(g, t, TfcVariant::kNearest, cfg);
}

std::vector<std::pair<std::string, Team>> dc(const ExpertGraph& g,
                                             const std::vector<Community>& communities,
                                             const Task& t, double threshold,
                                             const AlgorithmConfig& cfg) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("dc: threshold must lie in [0, 1]");
  }
  ResolvedTask rt = resolve(g, t);
  const auto needed =
      static_cast<std::size_t>(std::ceil(threshold * static_cast<double>(rt.size())));

  std::vector<std::pair<std::string, Team>> out;
  for (const Community& c : communities) {
    SmallBitset covered(rt.size());
    for (ExpertId v : c.members) {
      g.check_id(v);
      for (std::size_t p = 0; p < rt.size(); ++p) {
        if (rt.ids[p] != kInvalidSkill && g.expert_has_skill(v, rt.ids[p])) covered.set(p);
      }
    }
    if (covered.count() < needed) continue;  // not a desirable community

    auto [sub, back] = g.induced_subgraph(c.members);
    Team local = cfg.tfc_variant == TfcVariant::kRandom ? tfc_r(sub, t, cfg) : tfc_n(sub, t, cfg);

    Team translated;
    if (local.leader) translated.leader = back[*local.leader];
    for (const auto& [skill, expert] : local.assignment) {
      translated.assignment[skill] = back[expert];
    }
    for (ExpertId v : local.fallback_experts) translated.fallback_experts.push_back(back[v]);
    std::sort(translated.fallback_experts.begin(), translated.fallback_experts.end());
    out.emplace_back(c.name, std::move(translated));
  }
  return out;
}

Team rarest_first(const ExpertGraph& g, const Task& t) {
  ResolvedTask rt = resolve(g, t);

  // Rarest task skill with non-empty support; ties resolve to task order.
  std::size_t rare_pos = rt.size();
  for (std::size_t p = 0; p < rt.size(); ++p) {
    if (rt.supports[p].empty()) continue;
    if (rare_pos == rt.size() || rt.supports[p].size() < rt.supports[rare_pos].size()) rare_pos = p;
  }
  if (rare_pos == rt.size()) return Team{};  // nothing is supported at all

  DistanceEngine engine(g);
  // For one source: one full single-source shortest-path field, then the
  // nearest support of every task position is a plain scan over that field
  // (kUnreachable where none is reachable). Equal-distance candidates settle
  // in ascending-id order because supports are stored ascending, so the tie
  // resolves to the smallest id; an unreachable support ties at infinity and
  // resolves to its first member while the distance stays infinite so
  // candidate costs rank honestly.
  auto nearest_per_position = [&](ExpertId source) {
    const std::vector<double> field = engine.single_source(source);
    std::vector<double> dist(rt.size(), kUnreachable);
    std::vector<ExpertId> who(rt.size(), kInvalidExpert);
    for (std::size_t p = 0; p < rt.size(); ++p) {
      for (ExpertId s : rt.supports[p]) {
        if (who[p] == kInvalidExpert || field[s] < dist[p]) {
          who[p] = s;
          dist[p] = field[s];
        }
      }
    }
    return std::make_pair(dist, who);
  };

  // Score every candidate holding the rarest skill.
  ExpertId best = kInvalidExpert;
  double best_cost = kUnreachable;
  bool best_cost_set = false;
  for (ExpertId a : rt.supports[rare_pos]) {
    auto [dist, who] = nearest_per_position(a);
    double cost = 0.0;
    for (std::size_t p = 0; p < rt.size(); ++p) {
      if (p == rare_pos || rt.supports[p].empty()) continue;
      cost = std::max(cost, dist[p]);
    }
    if (!best_cost_set || cost < best_cost) {  // supports are ascending: first wins ties
      best = a;
      best_cost = cost;
      best_cost_set = true;
    }
  }

  Team team;
  team.leader = best;
  auto [dist, who] = nearest_per_position(best);
  for (std::size_t p = 0; p < rt.size(); ++p) {
    if (who[p] != kInvalidExpert) team.assignment[(*rt.task)[p]] = who[p];
  }
  return team;
}

Team min_ld(const ExpertGraph& g, const Task& t, LeaderPool pool, double hd_degree_factor) {
  ResolvedTask rt = resolve(g, t);

  std::vector<ExpertId> leaders;
  if (pool == LeaderPool::kAll) {
    leaders.resize(g.node_count());
    for (ExpertId v = 0; v < g.node_count(); ++v) leaders[v] = v;
  } else {
    leaders = hd_set(g, t, hd_degree_factor);
    if (leaders.empty()) return Team{};  // restricted pool may be empty
  }
  if (g.node_count() == 0) return Team{};

  DistanceEngine engine(g);
  Team best;
  double best_coverage = -1.0;
  double best_ld = kUnreachable;

  for (ExpertId leader : leaders) {
    // One full single-source shortest-path field per leader candidate, then
    // plain scans over each skill's support. This is the documented
    // evaluation shape of the baseline (candidate scans against a distance
    // field); the benchmark timing comparisons rely on it.
    const std::vector<double> dist = engine.single_source(leader);

    Team cand;
    cand.leader = leader;
    SmallBitset unassigned(rt.size());
    for (std::size_t p = 0; p < rt.size(); ++p) unassigned.set(p);

    std::vector<ExpertId> chosen(rt.size(), kInvalidExpert);
    for (std::size_t p = 0; p < rt.size(); ++p) {
      if (rt.supports[p].empty()) continue;
      double dmin = kUnreachable;
      for (ExpertId s : rt.supports[p]) dmin = std::min(dmin, dist[s]);
      // Tie-break across everyone at the minimum distance: the expert
      // holding more of the still-unassigned task skills (the current one
      // included), then the smallest id (supports are stored ascending).
      // When the whole support is cut off from this leader everybody ties
      // at infinity, the same rule decides, and the skill stays covered.
      ExpertId pick = kInvalidExpert;
      std::size_t best_gain = 0;
      for (ExpertId s : rt.supports[p]) {
        if (dist[s] != dmin) continue;
        std::size_t gain = positions_held(g, rt, s).count_and(unassigned);
        if (pick == kInvalidExpert || gain > best_gain) {
          pick = s;
          best_gain = gain;
        }
      }
      chosen[p] = pick;
      unassigned.reset(p);
      cand.assignment[(*rt.task)[p]] = pick;
    }

    // Leader distance over distinct members (an expert covering two skills
    // is one member and counts once).
    double ld = 0.0;
    std::vector<ExpertId> distinct;
    for (std::size_t p = 0; p < rt.size(); ++p) {
      if (chosen[p] != kInvalidExpert) distinct.push_back(chosen[p]);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (ExpertId m : distinct) {
      if (m == leader) continue;
      ld += dist[m];  // kUnreachable propagates through the sum as +inf
    }

    double coverage = cand.coverage(t);
    if (improves(coverage, ld, best_coverage, best_ld)) {
      best = std::move(cand);
      best_coverage = coverage;
      best_ld = ld;
    }
  }
  return best;
}

namespace {

/// Memoized point-to-point distances; anchors in the sum-distance baseline
/// keep re-combining the same few nearest supports.
class PairDistanceCache {
 public:
  explicit PairDistanceCache(const ExpertGraph& g) : engine_(g) {}

  double between(ExpertId a, ExpertId b) {
    if (a == b) return 0.0;
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    double d = engine_.distance(std::min(a, b), std::max(a, b));
    cache_.emplace(key, d);
    return d;
  }

 private:
  DistanceEngine engine_;
  std::unordered_map<std::uint64_t, double> cache_;
};

}  // namespace

Team min_sd(const ExpertGraph& g, const Task& t) {
  ResolvedTask rt = resolve(g, t);

  // Anchors: every expert holding at least one task skill, ascending id.
  std::vector<ExpertId> anchors;
  for (std::size_t p = 0; p < rt.size(); ++p) {
    anchors.insert(anchors.end(), rt.supports[p].begin(), rt.supports[p].end());
  }
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  if (anchors.empty()) return Team{};

  DistanceEngine engine(g);
  PairDistanceCache pairs(g);

  Team best;
  double best_coverage = -1.0;
  double best_sd = kUnreachable;
  std::size_t best_cardinality = 0;

  for (ExpertId anchor : anchors) {
    std::vector<ExpertId> chosen(rt.size(), kInvalidExpert);
    for (std::size_t p = 0; p < rt.size(); ++p) {
      if (rt.supports[p].empty()) continue;
      double d = kUnreachable;
      auto nearest = engine.nearest_in_set(anchor, rt.supports[p], &d);
      // Ascending id on ties; an unreachable support ties at infinity and
      // resolves to its first member so the skill stays covered.
      chosen[p] = nearest.empty() ? rt.supports[p].front() : nearest.front();
    }

    double sd = 0.0;
    std::size_t covered = 0;
    for (std::size_t i = 0; i < rt.size(); ++i) {
      if (chosen[i] == kInvalidExpert) continue;
      ++covered;
      for (std::size_t j = i + 1; j < rt.size(); ++j) {
        if (chosen[j] == kInvalidExpert) continue;
        double d = pairs.between(chosen[i], chosen[j]);
        if (is_unreachable(d)) {
          sd = kUnreachable;
        } else if (!is_unreachable(sd)) {
          sd += d;
        }
      }
    }
    double coverage = static_cast<double>(covered) / static_cast<double>(rt.size());

    std::vector<ExpertId> members(chosen);
    members.push_back(anchor);
    std::sort(members.begin(), members.end());
    members.erase(std::remove(members.begin(), members.end(), kInvalidExpert), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    bool take = false;
    if (coverage != best_coverage) {
      take = coverage > best_coverage;
    } else if (sd != best_sd) {
      take = sd < best_sd;
    } else {
      take = members.size() < best_cardinality;  // equal cost: prefer the leaner team
    }
    if (take) {
      best = Team{};
      best.leader = anchor;
      for (std::size_t p = 0; p < rt.size(); ++p) {
        if (chosen[p] != kInvalidExpert) best.assignment[(*rt.task)[p]] = chosen[p];
      }
      best_coverage = coverage;
      best_sd = sd;
      best_cardinality = members.size();
    }
  }
  return best;
}

Team run_algorithm(const std::string& name, const ExpertGraph& g, const Task& t,
                   const AlgorithmConfig& cfg) {
  if (name == "tfc-r") return tfc_r(g, t, cfg);
  if (name == "tfc-n") return tfc_n(g, t, cfg);
  if (name == "rf") return rarest_first(g, t);
  if (name == "minld") return min_ld(g, t, LeaderPool::kAll, cfg.hd_degree_factor);
  if (name == "minld-star") return min_ld(g, t, LeaderPool::kHighDegree, cfg.hd_degree_factor);
  if (name == "minsd") return min_sd(g, t);
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

bool known_algorithm(const std::string& name) {
  static const char* names[] = {"tfc-r", "tfc-n", "rf", "minld", "minld-star", "minsd"};
  for (const char* n : names) {
    if (name == n) return true;
  }
  return false;
}

}  // namespace teamform
