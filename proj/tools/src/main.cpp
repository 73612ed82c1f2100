// teamform: command-line front end for the team-formation library.
//
// Subcommands: team, ingest, analyze, bench, case-study.
// Contract: the first stdout line of every successful run is one compact
// JSON object (machine-readable); human-readable detail follows. Diagnostics
// go to stderr. Exit codes: 0 success, 1 usage error, 2 data/contract error.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "teamform/analysis.hpp"
#include "teamform/algorithms.hpp"
#include "teamform/bench.hpp"
#include "teamform/config_file.hpp"
#include "teamform/dblp_xml.hpp"
#include "teamform/graph_io.hpp"
#include "teamform/graph_queries.hpp"
#include "teamform/ingest.hpp"
#include "teamform/metrics.hpp"
#include "teamform/text_pipeline.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using namespace teamform;

json json_number(double v) {
  if (std::isfinite(v)) return v;
  return is_unreachable(v) ? json("inf") : json("nan");
}

Task parse_task_flag(const std::string& csv) {
  Task task;
  std::string cur;
  auto flush = [&] {
    std::size_t a = 0, b = cur.size();
    while (a < b && std::isspace(static_cast<unsigned char>(cur[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(cur[b - 1]))) --b;
    if (b > a) task.push_back(cur.substr(a, b - a));
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return task;
}

/// Maps raw task words onto graph skill tokens: lowercase, stem, drop
/// duplicates that stemming creates (first occurrence wins). Lets published
/// word lists address graphs whose skills are stems.
Task stem_task(const Task& task) {
  Task out;
  for (std::string token : task) {
    for (char& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    token = porter_stem(token);
    if (std::find(out.begin(), out.end(), token) == out.end()) out.push_back(token);
  }
  return out;
}

std::string join_names(const ExpertGraph& g, const std::vector<ExpertId>& ids) {
  std::string out;
  for (ExpertId v : ids) {
    if (!out.empty()) out += ",";
    out += g.name(v);
  }
  return out;
}

std::string default_out_dir() {
  const char* env = std::getenv("TEAMFORM_OUT");
  return env != nullptr && *env != '\0' ? env : ".";
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

// ---------------------------------------------------------------------------
// team

struct TeamArgs {
  std::string graph;
  std::string task_csv;
  std::string algo;
  std::uint64_t seed = kDefaultSeed;
  int hop_limit = 2;
  double hd_degree_factor = 2.0;
  bool strict = false;
  bool stem = false;
};

int run_team(const TeamArgs& args) {
  ExpertGraph g = load_graph(args.graph);
  Task task = parse_task_flag(args.task_csv);
  if (args.stem) task = stem_task(task);
  if (task.empty()) {
    std::cerr << "error: --task lists no skills\n";
    return 1;
  }

  AlgorithmConfig cfg;
  cfg.rng_seed = args.seed;
  cfg.hop_limit = args.hop_limit;
  cfg.hd_degree_factor = args.hd_degree_factor;

  Team team = run_algorithm(args.algo, g, task, cfg);
  CostReport cost = evaluate(g, team, task);
  auto members = team.members();

  json out;
  out["command"] = "team";
  out["algorithm"] = args.algo;
  out["task"] = task;
  out["seed"] = args.seed;
  json names = json::array();
  for (ExpertId v : members) names.push_back(g.name(v));
  out["team"] = names;
  out["leader"] = team.leader ? json(g.name(*team.leader)) : json(nullptr);
  json assignment = json::object();
  for (const auto& [skill, expert] : team.assignment) assignment[skill] = g.name(expert);
  out["assignment"] = assignment;
  json fallback = json::array();
  for (ExpertId v : team.fallback_experts) fallback.push_back(g.name(v));
  out["fallback"] = fallback;
  out["cardinality"] = cost.cardinality;
  out["coverage"] = cost.covered;
  out["diameter"] = json_number(cost.diameter);
  out["sum_distance"] = json_number(cost.sum_distance);
  out["leader_distance"] = json_number(cost.leader_distance);
  std::cout << out.dump() << "\n";

  std::cout << "team {" << join_names(g, members) << "}, leader "
            << (team.leader ? g.name(*team.leader) : std::string("-")) << ", LD "
            << format_weight(cost.leader_distance) << "\n";
  std::cout << "coverage " << format_weight(cost.covered) << ", SD "
            << format_weight(cost.sum_distance) << ", diameter " << format_weight(cost.diameter)
            << ", cardinality " << cost.cardinality << "\n";
  for (const std::string& skill : task) {
    auto it = team.assignment.find(skill);
    std::cout << "  " << skill << " -> "
              << (it == team.assignment.end() ? std::string("(uncovered)") : g.name(it->second))
              << "\n";
  }

  if (args.strict && cost.covered < 1.0) {
    std::cerr << "error: task not fully coverable (coverage " << format_weight(cost.covered)
              << ")";
    std::string missing;
    for (const std::string& skill : task) {
      if (team.assignment.find(skill) == team.assignment.end()) {
        missing += missing.empty() ? "" : ", ";
        missing += skill;
      }
    }
    if (!missing.empty()) std::cerr << "; uncovered: " << missing;
    std::cerr << "\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
  std::string xml;
  std::string venues;
  std::string out_prefix;
  int min_pubs = 3;
  int min_joint = 3;
  int min_skill_count = 2;
};

int run_ingest(const IngestArgs& args) {
  VenueConfig venues = VenueConfig::load(args.venues);
  std::vector<RawRecord> raw = load_dblp_file(args.xml);
  std::vector<PublicationRecord> records = filter_corpus(raw, venues);

  IngestOptions opts;
  opts.min_pubs = args.min_pubs;
  opts.min_joint = args.min_joint;
  opts.min_skill_count = args.min_skill_count;
  IngestResult result = build_graph(records, venues, opts);

  save_graph(result.graph, args.out_prefix);
  save_communities(result.communities, args.out_prefix + ".communities");
  write_file(args.out_prefix + ".stats.csv", stats_csv(result.stats));

  json out;
  out["command"] = "ingest";
  out["records_parsed"] = raw.size();
  out["records_kept"] = records.size();
  out["experts"] = result.graph.node_count();
  out["edges"] = result.graph.edge_count();
  out["skills"] = result.graph.skill_count();
  out["communities"] = result.communities.size();
  out["out"] = args.out_prefix;
  std::cout << out.dump() << "\n";

  std::cout << "experts " << result.graph.node_count() << ", edges " << result.graph.edge_count()
            << ", skills " << result.graph.skill_count() << ", communities "
            << result.communities.size() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string graph;
  std::string communities_file;
  std::string community;
  std::string out_dir;
  int hops = 3;
  double hd_degree_factor = 2.0;
};

int run_analyze(const AnalyzeArgs& args) {
  ExpertGraph g = load_graph(args.graph);
  fs::create_directories(args.out_dir);

  std::vector<std::string> files;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(fs::path(args.out_dir) / name, content);
    files.push_back(name);
  };

  emit("degree_distribution.csv", distribution_csv(degree_distribution(g), "degree"));
  emit("component_sizes.csv",
       distribution_csv(component_size_distribution(g), "component_size"));
  emit("collaborator_ratio.csv", collaborator_ratio_csv(g, args.hd_degree_factor));

  if (!args.community.empty()) {
    if (args.communities_file.empty()) {
      std::cerr << "error: --community needs --communities\n";
      return 1;
    }
    std::vector<Community> communities = load_communities(args.communities_file, g);
    const Community* chosen = nullptr;
    for (const Community& c : communities) {
      if (c.name == args.community) chosen = &c;
    }
    if (chosen == nullptr) {
      std::cerr << "error: community '" << args.community << "' not found\n";
      return 2;
    }
    SkillCoverageTable table = cumulative_skill_coverage(g, *chosen, args.hops);
    emit("coverage_per_node.csv", coverage_per_node_csv(table));
    emit("coverage_per_degree.csv", coverage_per_degree_csv(table));
  }

  json out;
  out["command"] = "analyze";
  out["nodes"] = g.node_count();
  out["edges"] = g.edge_count();
  auto [high, low] = collaborator_ratio(g, args.hd_degree_factor);
  out["high_collaborators"] = high;
  out["low_collaborators"] = low;
  out["files"] = files;
  out["out"] = args.out_dir;
  std::cout << out.dump() << "\n";
  for (const std::string& f : files) std::cout << "wrote " << f << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::vector<std::string> graph_specs;  // name=prefix
  std::string plan_file;
  std::string communities_file;
  std::string out_dir;
  std::optional<int> trials, k_min, k_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> task_source;
  std::optional<std::string> algorithms_csv;
};

ExperimentPlan load_plan(const std::string& path) {
  ExperimentPlan plan;
  if (path.empty()) return plan;
  ConfigFile file = ConfigFile::load(path);
  plan.k_min = static_cast<int>(file.get_integer("plan", "k_min", plan.k_min));
  plan.k_max = static_cast<int>(file.get_integer("plan", "k_max", plan.k_max));
  plan.trials = static_cast<int>(file.get_integer("plan", "trials", plan.trials));
  plan.seed = static_cast<std::uint64_t>(file.get_integer("plan", "seed",
                                                          static_cast<long long>(plan.seed)));
  plan.task_source = file.get_string("plan", "task_source", plan.task_source);
  if (const ConfigValue* v = file.find("plan", "algorithms")) {
    plan.algorithms = v->as_string_array();
  }
  if (file.has_section("k_caps")) {
    for (const std::string& key : file.keys("k_caps")) {
      plan.k_caps[key] = static_cast<int>(file.get("k_caps", key).as_integer());
    }
  }
  plan.algo.hop_limit = static_cast<int>(file.get_integer("algorithm", "hop_limit", 2));
  plan.algo.hd_degree_factor = file.get_float("algorithm", "hd_degree_factor", 2.0);
  return plan;
}

int run_bench(const BenchArgs& args) {
  ExperimentPlan plan = load_plan(args.plan_file);
  if (args.trials) plan.trials = *args.trials;
  if (args.k_min) plan.k_min = *args.k_min;
  if (args.k_max) plan.k_max = *args.k_max;
  if (args.seed) plan.seed = *args.seed;
  if (args.task_source) plan.task_source = *args.task_source;
  if (args.algorithms_csv) plan.algorithms = parse_task_flag(*args.algorithms_csv);
  if (plan.algorithms.empty()) {
    plan.algorithms = {"tfc-r", "tfc-n", "rf", "minld", "minld-star", "minsd"};
  }

  std::vector<std::pair<std::string, ExpertGraph>> loaded;
  for (const std::string& spec : args.graph_specs) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      std::cerr << "error: --graph expects name=prefix, got '" << spec << "'\n";
      return 1;
    }
    loaded.emplace_back(spec.substr(0, eq), load_graph(spec.substr(eq + 1)));
  }

  // Task universe: the named community of the first graph, or the first
  // graph's whole skill universe.
  std::vector<std::string> universe;
  if (!plan.task_source.empty()) {
    if (args.communities_file.empty()) {
      std::cerr << "error: task_source '" << plan.task_source << "' needs --communities\n";
      return 1;
    }
    auto communities = load_communities(args.communities_file, loaded.front().second);
    const Community* chosen = nullptr;
    for (const Community& c : communities) {
      if (c.name == plan.task_source) chosen = &c;
    }
    if (chosen == nullptr) {
      std::cerr << "error: community '" << plan.task_source << "' not found\n";
      return 2;
    }
    universe = community_skill_union(loaded.front().second, *chosen);
  } else {
    universe = loaded.front().second.skill_universe();
  }

  std::vector<NamedGraph> graphs;
  for (const auto& [name, g] : loaded) graphs.push_back(NamedGraph{name, &g});

  BenchmarkReport report = run_benchmark(plan, graphs, universe);
  fs::create_directories(args.out_dir);
  std::vector<std::string> files;
  for (const auto& [name, content] : emit_report(report, plan)) {
    write_file(fs::path(args.out_dir) / name, content);
    files.push_back(name);
  }

  json out;
  out["command"] = "bench";
  out["rows"] = report.rows.size();
  out["trials"] = plan.trials;
  out["k_min"] = plan.k_min;
  out["k_max"] = plan.k_max;
  out["seed"] = plan.seed;
  out["universe"] = universe.size();
  out["files"] = files;
  out["out"] = args.out_dir;
  std::cout << out.dump() << "\n";
  for (const std::string& f : files) std::cout << "wrote " << f << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// case-study

struct CaseStudyArgs {
  std::string graph;
  std::string communities_file;
  std::string tasks_file;
  std::string out_dir;
  double threshold = 0.6;
  std::string variant = "tfc-r";
  std::uint64_t seed = kDefaultSeed;
  int hop_limit = 2;
  double hd_degree_factor = 2.0;
  bool stem = false;
};

int run_case_study_cmd(const CaseStudyArgs& args) {
  ExpertGraph g = load_graph(args.graph);
  std::vector<Community> communities = load_communities(args.communities_file, g);

  ConfigFile tasks_file = ConfigFile::load(args.tasks_file);
  if (!tasks_file.has_section("tasks")) {
    std::cerr << "error: tasks file has no [tasks] section\n";
    return 2;
  }
  std::vector<std::string> labels;
  std::vector<Task> tasks;
  for (const std::string& key : tasks_file.keys("tasks")) {
    labels.push_back(key);
    Task task = tasks_file.get("tasks", key).as_string_array();
    if (args.stem) task = stem_task(task);
    tasks.push_back(std::move(task));
  }

  AlgorithmConfig cfg;
  cfg.rng_seed = args.seed;
  cfg.hop_limit = args.hop_limit;
  cfg.hd_degree_factor = args.hd_degree_factor;
  if (args.variant == "tfc-n") {
    cfg.tfc_variant = TfcVariant::kNearest;
  } else if (args.variant != "tfc-r") {
    std::cerr << "error: --variant must be tfc-r or tfc-n\n";
    return 1;
  }

  CaseStudyTable table = run_case_study(g, communities, tasks, args.threshold, cfg);
  table.task_labels = labels;

  fs::create_directories(args.out_dir);
  write_file(fs::path(args.out_dir) / "case_study.md", case_study_markdown(g, table));

  std::size_t desirable = 0;
  for (const auto& row : table.cells) {
    for (const auto& cell : row) {
      if (cell.desirable) ++desirable;
    }
  }

  json out;
  out["command"] = "case-study";
  out["tasks"] = labels;
  out["communities"] = table.community_names.size();
  out["desirable_cells"] = desirable;
  out["threshold"] = args.threshold;
  out["variant"] = args.variant;
  out["files"] = json::array({"case_study.md"});
  out["out"] = args.out_dir;
  std::cout << out.dump() << "\n";
  std::cout << "wrote case_study.md (" << desirable << " desirable cells)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"team formation on weighted collaboration graphs"};
  app.require_subcommand(1);

  TeamArgs team_args;
  CLI::App* team = app.add_subcommand("team", "form one team for one task");
  team->add_option("--graph", team_args.graph, "graph file prefix")->required();
  team->add_option("--task", team_args.task_csv, "comma-separated skill tokens")->required();
  team->add_option("--algo", team_args.algo, "tfc-r|tfc-n|rf|minld|minld-star|minsd")->required();
  team->add_option("--seed", team_args.seed, "RNG seed (default 1729)");
  team->add_option("--hop-limit", team_args.hop_limit, "neighborhood radius bound");
  team->add_option("--hd-degree-factor", team_args.hd_degree_factor,
                   "high-degree bar as a multiple of average degree");
  team->add_flag("--strict", team_args.strict, "exit 2 when coverage is partial");
  team->add_flag("--stem", team_args.stem, "stem task words before matching skills");

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand("ingest", "build a graph from a publication corpus");
  ingest->add_option("--xml", ingest_args.xml, "corpus XML file")->required();
  ingest->add_option("--venues", ingest_args.venues, "venue config file")->required();
  ingest->add_option("--out", ingest_args.out_prefix, "output file prefix")->required();
  ingest->add_option("--min-pubs", ingest_args.min_pubs, "publications needed to be an expert");
  ingest->add_option("--min-joint", ingest_args.min_joint, "joint publications needed for an edge");
  ingest->add_option("--min-skill-count", ingest_args.min_skill_count,
                     "occurrences needed for a skill");

  AnalyzeArgs analyze_args;
  analyze_args.out_dir = default_out_dir();
  CLI::App* analyze = app.add_subcommand("analyze", "network diagnostics");
  analyze->add_option("--graph", analyze_args.graph, "graph file prefix")->required();
  analyze->add_option("--communities", analyze_args.communities_file, "communities file");
  analyze->add_option("--community", analyze_args.community,
                      "community for skill-coverage tables");
  analyze->add_option("--hops", analyze_args.hops, "max hop radius for coverage");
  analyze->add_option("--hd-degree-factor", analyze_args.hd_degree_factor,
                      "high-collaborator bar");
  analyze->add_option("--out", analyze_args.out_dir, "output directory");

  BenchArgs bench_args;
  bench_args.out_dir = default_out_dir();
  CLI::App* bench = app.add_subcommand("bench", "run the benchmark protocol");
  bench->add_option("--graph", bench_args.graph_specs, "graph as name=prefix (repeatable)")
      ->required();
  bench->add_option("--plan", bench_args.plan_file, "plan config file");
  bench->add_option("--communities", bench_args.communities_file,
                    "communities of the first graph (for task_source)");
  bench->add_option("--trials", bench_args.trials, "trials per task size");
  bench->add_option("--k-min", bench_args.k_min, "smallest task size");
  bench->add_option("--k-max", bench_args.k_max, "largest task size");
  bench->add_option("--seed", bench_args.seed, "RNG seed");
  bench->add_option("--task-source", bench_args.task_source, "community tasks are drawn from");
  bench->add_option("--algorithms", bench_args.algorithms_csv, "comma-separated algorithm names");
  bench->add_option("--out", bench_args.out_dir, "output directory");

  CaseStudyArgs case_args;
  case_args.out_dir = default_out_dir();
  CLI::App* cs = app.add_subcommand("case-study", "teams per community for fixed tasks");
  cs->add_option("--graph", case_args.graph, "graph file prefix")->required();
  cs->add_option("--communities", case_args.communities_file, "communities file")->required();
  cs->add_option("--tasks", case_args.tasks_file, "tasks config file")->required();
  cs->add_option("--threshold", case_args.threshold, "desirable-community coverage threshold");
  cs->add_option("--variant", case_args.variant, "tfc-r or tfc-n");
  cs->add_option("--seed", case_args.seed, "RNG seed");
  cs->add_option("--hop-limit", case_args.hop_limit, "neighborhood radius bound");
  cs->add_option("--hd-degree-factor", case_args.hd_degree_factor, "high-degree bar");
  cs->add_flag("--stem", case_args.stem, "stem task words before matching skills");
  cs->add_option("--out", case_args.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help is a success
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  try {
    if (team->parsed()) return run_team(team_args);
    if (ingest->parsed()) return run_ingest(ingest_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (cs->parsed()) return run_case_study_cmd(case_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
