#pragma once

#include <map>
#include <string>
#include <vector>

#include "teamform/algorithms.hpp"
#include "teamform/metrics.hpp"

namespace teamform {

/// Protocol for one benchmark sweep: random tasks of size k_min..k_max,
/// `trials` draws per size, every named algorithm on every graph.
struct ExperimentPlan {
  int k_min = 4;
  int k_max = 20;
  int trials = 100;
  std::vector<std::string> algorithms;  // canonical names, see known_algorithm()
  std::string task_source;  // label of the community the task universe came from (documentation only)
  std::uint64_t seed = kDefaultSeed;
  std::map<std::string, int> k_caps;  // per-graph upper bound on k (large graphs get small caps)
  AlgorithmConfig algo;  // hop limit / degree factor; rng_seed is re-derived per trial
};

/// `trials` random k-subsets of `universe`, uniform without replacement
/// within each task, in sampled order. Trial t draws from a generator seeded
/// with derive_seed(seed, k, t), so any trial can be regenerated in
/// isolation and parallel execution cannot change results.
/// k < 1 or k > |universe| raises std::invalid_argument.
std::vector<Task> generate_tasks(const std::vector<std::string>& universe, int k, int trials,
                                 std::uint64_t seed);

/// Sorted union of the members' skill tokens.
std::vector<std::string> community_skill_union(const ExpertGraph& g, const Community& c);

struct NamedGraph {
  std::string name;
  const ExpertGraph* graph = nullptr;
};

/// Aggregates for one (graph, algorithm, k) cell. Cost means are over
/// full-coverage runs only; partial runs are counted and averaged apart so
/// uncoverable tasks can never skew the comparison.
struct BenchRow {
  std::string graph;
  std::string algorithm;
  int k = 0;
  int trials = 0;
  int full = 0;
  int partial = 0;
  double mean_cardinality = 0.0;       // full runs; 0 when none
  double mean_diameter = 0.0;
  double mean_sum_distance = 0.0;
  double mean_leader_distance = 0.0;
  double mean_partial_coverage = 0.0;  // partial runs; 0 when none
  double mean_wall_ms = 0.0;           // all runs
  double fallback_fraction = 0.0;      // runs whose team needed fallback experts
};

struct BenchmarkReport {
  std::vector<BenchRow> rows;  // graph-major, then k ascending, then plan algorithm order
};

/// Runs the full sweep. Tasks are generated once per k from `universe` and
/// shared by every algorithm and every graph, so comparisons see identical
/// inputs. A graph's cap in plan.k_caps truncates its k range.
/// Throws std::invalid_argument on an empty/unknown algorithm list, no
/// graphs, trials < 1, or a k range that is empty or exceeds |universe|.
BenchmarkReport run_benchmark(const ExperimentPlan& plan, const std::vector<NamedGraph>& graphs,
                              const std::vector<std::string>& universe);

/// Renders the report as files (name -> content):
///   <graph>_cardinality.csv / _diameter.csv / _sum_distance.csv /
///   _leader_distance.csv   one pivot table each: rows k, one column per
///                          algorithm, mean over full-coverage runs ("-"
///                          when no run reached full coverage)
///   <graph>_fallback.csv   fraction of runs that needed fallback experts
///   <graph>_coverage.csv   "full/trials" counts per cell
///   <graph>_timing.csv     mean wall milliseconds
///   summary.md             human-readable overview (includes wall times)
/// For a fixed plan, seed, and graphs every file except the two wall-time
/// carriers (<graph>_timing.csv, summary.md) is reproducible byte for byte.
std::vector<std::pair<std::string, std::string>> emit_report(const BenchmarkReport& report,
                                                             const ExperimentPlan& plan);

/// One case-study cell: a community that clears the coverage threshold gets
/// a team; the rest stay blank.
struct CaseStudyCell {
  bool desirable = false;
  Team team;  // ids in the parent graph
};

struct CaseStudyTable {
  std::vector<std::string> task_labels;       // "T1", "T2", ...
  std::vector<Task> tasks;
  std::vector<std::string> community_names;   // row order = input order
  std::vector<std::vector<CaseStudyCell>> cells;  // [community][task]
  double threshold = 0.0;
};

/// Runs the desirable-community driver for every task across every
/// community (see dc()). Communities lacking threshold coverage yield blank
/// cells.
CaseStudyTable run_case_study(const ExpertGraph& g, const std::vector<Community>& communities,
                              const std::vector<Task>& tasks, double threshold,
                              const AlgorithmConfig& cfg);

/// Markdown table: one row per community, one column per task. Cells list
/// the leader and the members; experts added by the fallback step are
/// starred. Blank cell = community not desirable for that task.
std::string case_study_markdown(const ExpertGraph& g, const CaseStudyTable& table);

}  // namespace teamform
