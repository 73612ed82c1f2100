// Acceptance gate for the team-formation library. Runs ten end-to-end
// checks — golden teams on the hand-checked 20-node graph, exhaustive
// oracle comparisons on random instances, behavioural properties, scaling
// and quality comparisons on large synthetic graphs, and report-schema
// conformance — and prints one PASS/FAIL line per criterion. Exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"
#include "teamform/algorithms.hpp"
#include "teamform/analysis.hpp"
#include "teamform/bench.hpp"
#include "teamform/expert_graph.hpp"
#include "teamform/graph_io.hpp"
#include "teamform/graph_queries.hpp"
#include "teamform/ingest.hpp"
#include "teamform/metrics.hpp"
#include "teamform/types.hpp"

using namespace teamform;
using namespace teamform::testing;

namespace {

using Clock = std::chrono::steady_clock;
using AreaList = std::vector<std::pair<std::string, std::vector<std::string>>>;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Criterion {
  int number;
  std::string label;
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 12) notes.push_back(what);  // keep the log readable
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int g_failures = 0;

void run_criterion(int number, const std::string& label,
                   const std::function<void(Criterion&)>& body) {
  Criterion c{number, label};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  std::printf("criterion %2d  %-58s %s\n", c.number, c.label.c_str(),
              c.pass ? "PASS" : "FAIL");
  for (const std::string& n : c.notes) std::printf("              - %s\n", n.c_str());
  std::fflush(stdout);
  if (!c.pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::vector<std::string> member_names(const ExpertGraph& g, const Team& team) {
  std::vector<std::string> out;
  for (ExpertId v : team.members()) out.push_back(g.name(v));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out;
}

// Number of distinct task positions the assignment covers (task entries are
// distinct by contract, so this is the assigned-key count restricted to t).
std::size_t covered_positions(const Team& team, const Task& t) {
  std::size_t covered = 0;
  for (const std::string& skill : t) covered += team.assignment.count(skill);
  return covered;
}

// The large synthetic collaboration network and its nested prefix
// sub-networks, shared by criteria 6-9. Built once on first use.
struct SyntheticFamily {
  ExpertGraph full;    // 25k nodes
  ExpertGraph mid;     // first 5k nodes
  ExpertGraph small;   // first 1k nodes
  std::vector<std::string> universe;  // skill union of the smallest network
};

const SyntheticFamily& synthetic_family() {
  static const SyntheticFamily family = [] {
    SyntheticFamily f;
    SyntheticSpec spec;
    spec.nodes = 25000;
    spec.seed = 1;
    f.full = make_synthetic_graph(spec);
    const Community c_small = prefix_community("small", "", 1000);
    const Community c_mid = prefix_community("mid", "", 5000);
    f.small = f.full.induced_subgraph(c_small.members).first;
    f.mid = f.full.induced_subgraph(c_mid.members).first;
    f.universe = community_skill_union(f.full, c_small);
    return f;
  }();
  return family;
}

// ---------------------------------------------------------------------------
// Criterion 1: reference teams on the hand-checked 20-node graph. The
// community search must return leader C with members {A, C, S} (LD 5, SD 26)
// for every seed; the sum-distance baseline the same members around leader S
// (SD 26, LD 8); the leader-distance baseline over all leaders lands on A
// with LD 7, SD 28 and covers skill e through Q. Integer edge weights make
// every comparison exact, and the whole block must finish within a second.
// ---------------------------------------------------------------------------
void criterion_1(Criterion& c) {
  const auto t0 = Clock::now();
  const ExpertGraph g = load_toy();
  const Task task{"a", "b", "c", "d", "e"};
  const ExpertId A = id_of(g, "A"), C = id_of(g, "C"), Q = id_of(g, "Q"), S = id_of(g, "S");

  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{1729}, std::uint64_t{987654321}}) {
    AlgorithmConfig cfg;
    cfg.rng_seed = seed;
    const Team team = tfc_r(g, task, cfg);
    c.expect(team.leader && *team.leader == C,
             "community search: leader != C at seed " + std::to_string(seed));
    c.expect(team.members() == std::vector<ExpertId>{A, C, S},
             "community search: members != {A,C,S} at seed " + std::to_string(seed) + " (got " +
                 join(member_names(g, team)) + ")");
    c.expect(leader_distance(g, team) == 5.0,
             "community search: LD != 5 (got " + fmt(leader_distance(g, team)) + ")");
    c.expect(sum_distance(g, team, task) == 26.0,
             "community search: SD != 26 (got " + fmt(sum_distance(g, team, task)) + ")");
  }

  const Team sd_team = min_sd(g, task);
  c.expect(sd_team.leader && *sd_team.leader == S, "sum-distance baseline: leader != S");
  c.expect(sd_team.members() == std::vector<ExpertId>{A, C, S},
           "sum-distance baseline: members != {A,C,S} (got " + join(member_names(g, sd_team)) + ")");
  c.expect(sum_distance(g, sd_team, task) == 26.0, "sum-distance baseline: SD != 26");
  c.expect(leader_distance(g, sd_team) == 8.0, "sum-distance baseline: LD != 8");

  const Team ld_team = min_ld(g, task, LeaderPool::kAll);
  c.expect(ld_team.leader && *ld_team.leader == A, "leader-distance baseline: leader != A");
  c.expect(leader_distance(g, ld_team) == 7.0,
           "leader-distance baseline: LD != 7 (got " + fmt(leader_distance(g, ld_team)) + ")");
  c.expect(sum_distance(g, ld_team, task) == 28.0,
           "leader-distance baseline: SD != 28 (got " + fmt(sum_distance(g, ld_team, task)) + ")");
  const auto e_it = ld_team.assignment.find("e");
  c.expect(e_it != ld_team.assignment.end() && e_it->second == Q,
           "leader-distance baseline: skill e not covered by Q");

  const double elapsed = ms_since(t0);
  c.expect(elapsed < 1000.0, "runtime " + fmt(elapsed) + " ms >= 1 s");
}

// ---------------------------------------------------------------------------
// Criterion 2: cost functions on a fixed hand-built team. Leader J with
// a->J, b->J, c->F, d->G, e->I costs exactly LD 10 and SD 30.
// ---------------------------------------------------------------------------
void criterion_2(Criterion& c) {
  const ExpertGraph g = load_toy();
  const Task task{"a", "b", "c", "d", "e"};
  Team team;
  team.leader = id_of(g, "J");
  team.assignment = {{"a", id_of(g, "J")},
                     {"b", id_of(g, "J")},
                     {"c", id_of(g, "F")},
                     {"d", id_of(g, "G")},
                     {"e", id_of(g, "I")}};
  c.expect(leader_distance(g, team) == 10.0,
           "LD != 10 (got " + fmt(leader_distance(g, team)) + ")");
  c.expect(sum_distance(g, team, task) == 30.0,
           "SD != 30 (got " + fmt(sum_distance(g, team, task)) + ")");
}

// ---------------------------------------------------------------------------
// Criterion 3: team diameter. The member set {A, C, S} spans a shortest-path
// diameter of exactly 5 on the 20-node graph.
// ---------------------------------------------------------------------------
void criterion_3(Criterion& c) {
  const ExpertGraph g = load_toy();
  Team team;
  team.leader = id_of(g, "A");
  team.assignment = {{"b", id_of(g, "C")}, {"d", id_of(g, "S")}};
  c.expect(diameter(g, team) == 5.0, "diameter != 5 (got " + fmt(diameter(g, team)) + ")");
}

// ---------------------------------------------------------------------------
// Criterion 4: exhaustive oracles on random instances. On >= 200 seeded
// instances (<= 25 nodes, <= 6 skills, integer weights so sums stay exact):
//   - the all-leaders leader-distance baseline must match an independent
//     exhaustive per-leader minimisation (leader, LD, covered count);
//   - both community-search variants must match an independent
//     reconstruction that rescans every high-degree leader candidate.
// ---------------------------------------------------------------------------
void criterion_4(Criterion& c) {
  std::size_t instances = 0;
  for (std::uint64_t seed = 1; seed <= 220; ++seed) {
    const RandomInstance inst = make_random_instance(seed, /*integer_weights=*/true);
    if (inst.task.empty()) continue;
    const DistanceMatrix m = all_pairs_distances(inst.graph);
    const std::string tag = " (instance seed " + std::to_string(seed) + ")";

    AlgorithmConfig cfg;
    cfg.rng_seed = seed;

    const OracleOutcome want = exhaustive_min_ld(inst.graph, inst.task, m);
    const Team got = min_ld(inst.graph, inst.task, LeaderPool::kAll);
    if (!want.has_team) {
      c.expect(!got.leader.has_value(), "leader-distance: expected empty team" + tag);
    } else {
      c.expect(got.leader && *got.leader == want.leader, "leader-distance: leader mismatch" + tag);
      c.expect(leader_distance(inst.graph, got) == want.leader_dist,
               "leader-distance: LD mismatch" + tag);
      c.expect(covered_positions(got, inst.task) == want.covered,
               "leader-distance: covered-count mismatch" + tag);
    }

    for (TfcVariant variant : {TfcVariant::kRandom, TfcVariant::kNearest}) {
      const char* vn = variant == TfcVariant::kRandom ? "search-r" : "search-n";
      const OracleOutcome tfc_want = reconstruct_tfc(inst.graph, inst.task, variant, cfg, m);
      const Team tfc_got =
          variant == TfcVariant::kRandom ? tfc_r(inst.graph, inst.task, cfg)
                                         : tfc_n(inst.graph, inst.task, cfg);
      if (!tfc_want.has_team) {
        c.expect(!tfc_got.leader.has_value(),
                 std::string(vn) + ": expected empty team" + tag);
        continue;
      }
      c.expect(tfc_got.leader && *tfc_got.leader == tfc_want.leader,
               std::string(vn) + ": leader mismatch" + tag);
      c.expect(leader_distance(inst.graph, tfc_got) == tfc_want.leader_dist,
               std::string(vn) + ": LD mismatch" + tag);
      c.expect(covered_positions(tfc_got, inst.task) == tfc_want.covered,
               std::string(vn) + ": covered-count mismatch" + tag);
    }
    ++instances;
  }
  c.expect(instances >= 200,
           "only " + std::to_string(instances) + " instances exercised (need >= 200)");
}

// ---------------------------------------------------------------------------
// Criterion 5: behavioural property suite (exact checks).
//   a) whenever every task skill has support, every algorithm returns a team
//      with coverage 1 and a valid assignment;
//   b) the randomized search is deterministic for a fixed seed;
//   c) restricting the leader pool to high-degree nodes never beats the
//      all-leaders minimum;
//   d) cumulative hop neighbourhoods only grow;
//   e) the pairwise sum cost ignores task order;
//   f) corpus thresholds: a 2-publication author is not an expert, a pair
//      with 2 joint publications gets no edge, a once-occurring title word is
//      not a skill, and a 5/5/3 publication overlap weighs exactly 1 - 3/7.
// ---------------------------------------------------------------------------
void criterion_5(Criterion& c) {
  // (a) full coverage + valid assignments whenever support exists.
  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    const RandomInstance inst = make_random_instance(seed, /*integer_weights=*/false);
    Task supported;
    for (const std::string& skill : inst.task) {
      bool any = false;
      for (ExpertId v = 0; v < inst.graph.node_count() && !any; ++v) {
        for (const std::string& s : inst.graph.expert_skills(v)) {
          if (s == skill) {
            any = true;
            break;
          }
        }
      }
      if (any) supported.push_back(skill);
    }
    if (supported.empty()) continue;
    const std::string tag = " (instance seed " + std::to_string(seed) + ")";
    AlgorithmConfig cfg;
    cfg.rng_seed = seed;
    const std::vector<std::pair<std::string, Team>> runs = {
        {"search-r", tfc_r(inst.graph, supported, cfg)},
        {"search-n", tfc_n(inst.graph, supported, cfg)},
        {"rarest", rarest_first(inst.graph, supported)},
        {"sum-distance", min_sd(inst.graph, supported)},
        {"leader-distance", min_ld(inst.graph, supported, LeaderPool::kAll)},
    };
    for (const auto& [name, team] : runs) {
      c.expect(team.coverage(supported) == 1.0, name + ": coverage < 1" + tag);
      c.expect(team.assignment_valid(inst.graph), name + ": invalid assignment" + tag);
    }
    const Team hd = min_ld(inst.graph, supported, LeaderPool::kHighDegree);
    if (hd.leader) {
      c.expect(hd.coverage(supported) == 1.0, "leader-distance/hd: coverage < 1" + tag);
      c.expect(hd.assignment_valid(inst.graph), "leader-distance/hd: invalid assignment" + tag);
    }
  }

  // (b) seed determinism for the randomized variant.
  {
    const RandomInstance inst = make_random_instance(777, /*integer_weights=*/false);
    AlgorithmConfig cfg;
    cfg.rng_seed = 42;
    const Team first = tfc_r(inst.graph, inst.task, cfg);
    const Team second = tfc_r(inst.graph, inst.task, cfg);
    c.expect(first.leader == second.leader && first.assignment == second.assignment &&
                 first.fallback_experts == second.fallback_experts,
             "same seed produced different teams");
  }

  // (c) high-degree leader pool never beats the all-leaders pool.
  for (std::uint64_t seed = 600; seed < 640; ++seed) {
    const RandomInstance inst = make_random_instance(seed, /*integer_weights=*/false);
    if (inst.task.empty()) continue;
    AlgorithmConfig cfg;
    cfg.rng_seed = seed;
    const Team hd = min_ld(inst.graph, inst.task, LeaderPool::kHighDegree);
    if (!hd.leader) continue;  // no high-degree candidates on this instance
    const Team all = min_ld(inst.graph, inst.task, LeaderPool::kAll);
    const double cov_hd = hd.coverage(inst.task);
    const double cov_all = all.coverage(inst.task);
    c.expect(cov_hd <= cov_all, "restricted pool covered more than the full pool (seed " +
                                    std::to_string(seed) + ")");
    if (cov_hd == cov_all) {
      const double ld_hd = leader_distance(inst.graph, hd);
      const double ld_all = leader_distance(inst.graph, all);
      c.expect(ld_all <= ld_hd || (is_unreachable(ld_all) && is_unreachable(ld_hd)),
               "restricted pool beat the full pool: " + fmt(ld_hd) + " < " + fmt(ld_all) +
                   " (seed " + std::to_string(seed) + ")");
    }
  }

  // (d) cumulative hop neighbourhoods only grow.
  {
    const ExpertGraph g = load_toy();
    HopEngine bfs(g);
    for (ExpertId v = 0; v < g.node_count(); ++v) {
      std::size_t previous = 0;
      for (int k = 1; k <= 4; ++k) {
        const std::vector<int>& hops = bfs.hops_from(v, k);
        std::size_t reached = 0;
        for (int h : hops) {
          if (h > 0 && h <= k) ++reached;
        }
        c.expect(reached >= previous, "neighbourhood shrank at node " + g.name(v) + " hop " +
                                          std::to_string(k));
        previous = reached;
      }
    }
  }

  // (e) the pairwise sum cost ignores task order.
  {
    const ExpertGraph g = load_toy();
    const Task task{"a", "b", "c", "d", "e"};
    const Task shuffled{"e", "c", "a", "b", "d"};
    AlgorithmConfig cfg;
    const Team team = tfc_r(g, task, cfg);
    c.expect(sum_distance(g, team, task) == sum_distance(g, team, shuffled),
             "pairwise sum changed under task permutation");
  }

  // (f) corpus thresholds on the small publication fixture.
  {
    const VenueConfig venues = VenueConfig::load(fixture_path("venues.toml"));
    const auto records = parse_corpus(slurp_file(fixture_path("mini_dblp.xml")), venues);
    const IngestResult result = build_graph(records, venues);
    const ExpertGraph& g = result.graph;

    bool dave = false;
    ExpertId alice = kInvalidExpert, bob = kInvalidExpert, carol = kInvalidExpert;
    for (ExpertId v = 0; v < g.node_count(); ++v) {
      if (g.name(v) == "Dave Dunn") dave = true;
      if (g.name(v) == "Alice Adams") alice = v;
      if (g.name(v) == "Bob Brown") bob = v;
      if (g.name(v) == "Carol Chen") carol = v;
    }
    c.expect(!dave, "author with 2 retained publications became an expert");
    c.expect(alice != kInvalidExpert && bob != kInvalidExpert && carol != kInvalidExpert,
             "expected experts missing from the built graph");
    if (alice != kInvalidExpert && carol != kInvalidExpert) {
      bool edge = false;
      for (const Neighbor& e : g.neighbors(alice)) {
        if (e.to == carol) edge = true;
      }
      c.expect(!edge, "pair with 2 joint publications received an edge");
      const std::vector<std::string> skills = g.expert_skills(alice);
      c.expect(std::find(skills.begin(), skills.end(), "databas") == skills.end(),
               "once-occurring title word became a skill");
    }
  }

  // (f, continued) Jaccard distance of a 5/5/3 publication overlap.
  {
    const VenueConfig venues(AreaList{{"db", {"vldb"}}});
    std::string xml = "<dblp>";
    auto record = [](const std::string& key, const std::string& authors) {
      return "<inproceedings key=\"conf/vldb/" + key + "\">" + authors +
             "<title>Graph Mining Notes</title><year>2003</year></inproceedings>";
    };
    const std::string eve = "<author>Eve Evans</author>";
    const std::string frank = "<author>Frank Fox</author>";
    for (int i = 0; i < 3; ++i) xml += record("Joint" + std::to_string(i), eve + frank);
    for (int i = 0; i < 2; ++i) xml += record("Eve" + std::to_string(i), eve);
    for (int i = 0; i < 2; ++i) xml += record("Frank" + std::to_string(i), frank);
    xml += "</dblp>";
    const IngestResult result = build_graph(parse_corpus(xml, venues), venues);
    c.expect(result.graph.node_count() == 2 && result.graph.edge_count() == 1,
             "5/5/3 overlap corpus did not yield one edge between two experts");
    if (result.graph.edge_count() == 1) {
      const double w = result.graph.neighbors(0).front().weight;
      c.expect(w == 1.0 - 3.0 / 7.0,
               "5/5/3 overlap weight != 1 - 3/7 (got " + fmt(w) + ")");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: scaling. On nested synthetic collaboration networks of 1k, 5k
// and 25k nodes (tasks of 10 skills drawn from the smallest network's skills,
// 100 trials), the median wall time of the randomized community search must
// strictly increase with network size, and the smallest network must run at
// least 5x faster than the full one.
// ---------------------------------------------------------------------------
void criterion_6(Criterion& c) {
  const SyntheticFamily& f = synthetic_family();
  const int k = 10, trials = 100;
  const std::vector<Task> tasks = generate_tasks(f.universe, k, trials, kDefaultSeed);

  auto time_graph = [&](const ExpertGraph& g) {
    std::vector<double> wall;
    wall.reserve(tasks.size());
    for (std::size_t trial = 0; trial < tasks.size(); ++trial) {
      AlgorithmConfig cfg;
      cfg.rng_seed = derive_seed(kDefaultSeed, static_cast<std::uint64_t>(k), trial);
      const auto t0 = Clock::now();
      const Team team = tfc_r(g, tasks[trial], cfg);
      wall.push_back(ms_since(t0));
      (void)team;
    }
    return median(wall);
  };

  const double med_small = time_graph(f.small);
  const double med_mid = time_graph(f.mid);
  const double med_full = time_graph(f.full);
  c.note("median wall ms: 1k " + fmt(med_small) + ", 5k " + fmt(med_mid) + ", 25k " +
         fmt(med_full));
  c.expect(med_small < med_mid, "median wall not increasing from 1k to 5k");
  c.expect(med_mid < med_full, "median wall not increasing from 5k to 25k");
  c.expect(med_full >= 5.0 * med_small, "1k network less than 5x faster than 25k network");
}

// ---------------------------------------------------------------------------
// Criterion 7: team quality of the two community-search variants. On the 1k
// synthetic network, for task sizes 8, 12 and 16 with 100 seeded tasks each,
// the nearest-expert variant's mean leader distance must not exceed the
// randomized variant's.
// ---------------------------------------------------------------------------
void criterion_7(Criterion& c) {
  const ExpertGraph& g = synthetic_family().small;
  const std::vector<std::string>& universe = synthetic_family().universe;
  for (int k : {8, 12, 16}) {
    const std::vector<Task> tasks = generate_tasks(universe, k, 100, kDefaultSeed);
    std::vector<double> ld_r, ld_n;
    for (std::size_t trial = 0; trial < tasks.size(); ++trial) {
      AlgorithmConfig cfg;
      cfg.rng_seed = derive_seed(kDefaultSeed, static_cast<std::uint64_t>(k), trial);
      ld_r.push_back(leader_distance(g, tfc_r(g, tasks[trial], cfg)));
      ld_n.push_back(leader_distance(g, tfc_n(g, tasks[trial], cfg)));
    }
    const double mean_r = mean(ld_r), mean_n = mean(ld_n);
    c.note("k=" + std::to_string(k) + ": mean LD nearest " + fmt(mean_n) + " vs randomized " +
           fmt(mean_r));
    c.expect(mean_n <= mean_r + 1e-9,
             "nearest variant worse than randomized at k=" + std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: speed of the community search against the global baselines.
// On the 1k synthetic network with task sizes 10 and 12 (50 trials each),
// both community-search variants must have a smaller mean wall time than the
// sum-distance baseline and than the high-degree leader-distance baseline.
// ---------------------------------------------------------------------------
void criterion_8(Criterion& c) {
  const ExpertGraph& g = synthetic_family().small;
  const std::vector<std::string>& universe = synthetic_family().universe;
  for (int k : {10, 12}) {
    const std::vector<Task> tasks = generate_tasks(universe, k, 50, kDefaultSeed);
    std::vector<double> w_r, w_n, w_sd, w_ld;
    for (std::size_t trial = 0; trial < tasks.size(); ++trial) {
      AlgorithmConfig cfg;
      cfg.rng_seed = derive_seed(kDefaultSeed, static_cast<std::uint64_t>(k), trial);
      auto t0 = Clock::now();
      (void)tfc_r(g, tasks[trial], cfg);
      w_r.push_back(ms_since(t0));
      t0 = Clock::now();
      (void)tfc_n(g, tasks[trial], cfg);
      w_n.push_back(ms_since(t0));
      t0 = Clock::now();
      (void)min_sd(g, tasks[trial]);
      w_sd.push_back(ms_since(t0));
      t0 = Clock::now();
      (void)min_ld(g, tasks[trial], LeaderPool::kHighDegree);
      w_ld.push_back(ms_since(t0));
    }
    const double mr = mean(w_r), mn = mean(w_n), msd = mean(w_sd), mld = mean(w_ld);
    c.note("k=" + std::to_string(k) + ": mean ms search-r " + fmt(mr) + ", search-n " + fmt(mn) +
           ", sum-distance " + fmt(msd) + ", leader-distance/hd " + fmt(mld));
    c.expect(mr < msd && mr < mld,
             "randomized search not faster than both baselines at k=" + std::to_string(k));
    c.expect(mn < msd && mn < mld,
             "nearest search not faster than both baselines at k=" + std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// Criterion 9: cumulative skill coverage. Every coverage column must be
// monotone nondecreasing in the hop budget (checked on all hand-built
// communities and on the 1k synthetic network), and on the synthetic network
// the nodes whose degree exceeds the average must reach a mean coverage of
// at least 0.8 within two hops.
// ---------------------------------------------------------------------------
void criterion_9(Criterion& c) {
  auto check_monotone = [&](const SkillCoverageTable& table, const std::string& where) {
    for (const auto& row : table.per_node) {
      for (std::size_t h = 1; h < row.coverage.size(); ++h) {
        c.expect(row.coverage[h] >= row.coverage[h - 1],
                 where + ": node column decreased (node " + std::to_string(row.node) + ")");
        c.expect(row.coverage[h] <= 1.0, where + ": coverage above 1");
      }
    }
    for (const auto& row : table.per_degree) {
      for (std::size_t h = 1; h < row.mean_coverage.size(); ++h) {
        c.expect(row.mean_coverage[h] >= row.mean_coverage[h - 1] - 1e-12,
                 where + ": degree column decreased (degree " + std::to_string(row.degree) + ")");
      }
    }
  };

  {
    const ExpertGraph g = load_toy();
    const auto communities = load_communities(fixture_path("toy.communities"), g);
    for (const Community& community : communities) {
      check_monotone(cumulative_skill_coverage(g, community, 3), community.name);
    }
  }

  const ExpertGraph& g = synthetic_family().small;
  Community whole;
  whole.name = "synthetic";
  whole.members.resize(g.node_count());
  std::iota(whole.members.begin(), whole.members.end(), ExpertId{0});
  const SkillCoverageTable table = cumulative_skill_coverage(g, whole, 3);
  check_monotone(table, "synthetic");

  const double avg = g.average_degree();
  double sum = 0.0;
  std::size_t hubs = 0;
  for (const auto& row : table.per_node) {
    if (static_cast<double>(row.degree) > avg && row.coverage.size() > 2) {
      sum += row.coverage[2];
      ++hubs;
    }
  }
  c.expect(hubs > 0, "no nodes above average degree");
  const double hub_mean = hubs > 0 ? sum / static_cast<double>(hubs) : 0.0;
  c.note("mean 2-hop coverage of above-average-degree nodes: " + fmt(hub_mean) + " over " +
         std::to_string(hubs) + " nodes");
  c.expect(hub_mean >= 0.8, "mean 2-hop hub coverage below 0.8");
}

// ---------------------------------------------------------------------------
// Criterion 10: published absolute results (wall-clock tables, plotted
// curves, and the names in the human case-study grid) depend on a private
// corpus snapshot and that study's hardware, so they are declared not
// reproducible here. In their place, criteria 4-9 validate behaviour, and
// this criterion checks that the reports the tooling emits conform to the
// published layouts: per-graph pivot tables with one column per algorithm,
// a network-statistics table, and the case-study grid.
// ---------------------------------------------------------------------------
void criterion_10(Criterion& c) {
  c.note("absolute published numbers declared not reproducible (private corpus snapshot + "
         "original hardware); schema conformance checked instead");

  const ExpertGraph g = load_toy();
  ExperimentPlan plan;
  plan.k_min = 2;
  plan.k_max = 3;
  plan.trials = 3;
  plan.seed = 7;
  plan.algorithms = {"tfc-r", "tfc-n", "rf", "minld", "minld-star", "minsd"};
  const std::vector<std::string> universe{"a", "b", "c", "d", "e"};
  const BenchmarkReport report =
      run_benchmark(plan, {NamedGraph{"toy", &g}}, universe);
  const auto files = emit_report(report, plan);

  const std::vector<std::string> expected = {
      "toy_cardinality.csv", "toy_diameter.csv",      "toy_sum_distance.csv",
      "toy_leader_distance.csv", "toy_fallback.csv",  "toy_coverage.csv",
      "toy_timing.csv",      "summary.md"};
  std::vector<std::string> got;
  for (const auto& [name, content] : files) got.push_back(name);
  c.expect(got == expected, "report file set mismatch (got " + join(got) + ")");

  for (const auto& [name, content] : files) {
    if (name == "summary.md") {
      c.expect(content.rfind("# Benchmark summary", 0) == 0, "summary heading missing");
      continue;
    }
    const std::size_t first_nl = content.find('\n');
    c.expect(first_nl != std::string::npos && content.rfind("# ", 0) == 0,
             name + ": missing comment line");
    if (first_nl == std::string::npos) continue;
    const std::size_t second_nl = content.find('\n', first_nl + 1);
    const std::string header = content.substr(first_nl + 1, second_nl - first_nl - 1);
    c.expect(header == "k,tfc-r,tfc-n,rf,minld,minld-star,minsd",
             name + ": pivot header mismatch (got '" + header + "')");
  }

  // Network-statistics table layout.
  const VenueConfig venues = VenueConfig::load(fixture_path("venues.toml"));
  const IngestResult ingest =
      build_graph(parse_corpus(slurp_file(fixture_path("mini_dblp.xml")), venues), venues);
  const std::string stats = stats_csv(ingest.stats);
  c.expect(stats.rfind("name,nodes,edges,skills,avg_degree,skills_per_edge\n", 0) == 0,
           "statistics table header mismatch");
  c.expect(stats.find("\nall,") != std::string::npos,
           "statistics table missing the whole-graph row");

  // Case-study grid layout.
  const auto communities = load_communities(fixture_path("toy.communities"), g);
  AlgorithmConfig cfg;
  const CaseStudyTable table =
      run_case_study(g, communities, {Task{"a", "b", "c", "d", "e"}}, 0.6, cfg);
  const std::string md = case_study_markdown(g, table);
  c.expect(md.rfind("| community | T1 (5 skills) |", 0) == 0,
           "case-study grid header mismatch");
  c.expect(md.find("**") != std::string::npos, "case-study grid has no bolded leader");
}

}  // namespace

int main() {
  std::printf("acceptance gate: team-formation library\n");
  run_criterion(1, "reference teams on the hand-checked graph", criterion_1);
  run_criterion(2, "fixed-team cost check", criterion_2);
  run_criterion(3, "team diameter", criterion_3);
  run_criterion(4, "exhaustive oracles on random instances", criterion_4);
  run_criterion(5, "behavioural property suite", criterion_5);
  run_criterion(6, "wall time scales with network size", criterion_6);
  run_criterion(7, "nearest variant quality at k in {8,12,16}", criterion_7);
  run_criterion(8, "community search faster than global baselines", criterion_8);
  run_criterion(9, "cumulative skill coverage", criterion_9);
  run_criterion(10, "published-number reproducibility status + report schemas", criterion_10);
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
