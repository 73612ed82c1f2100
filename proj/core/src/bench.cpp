#include "teamform/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

namespace teamform {

std::vector<Task> generate_tasks(const std::vector<std::string>& universe, int k, int trials,
                                 std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("task size must be >= 1");
  if (static_cast<std::size_t>(k) > universe.size()) {
    throw std::invalid_argument("task size " + std::to_string(k) +
                                " exceeds the universe of " + std::to_string(universe.size()) +
                                " skills");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  std::vector<Task> out;
  out.reserve(static_cast<std::size_t>(trials));
  std::vector<std::size_t> indices(universe.size());
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t)));
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    Task task;
    task.reserve(static_cast<std::size_t>(k));
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      std::size_t j = static_cast<std::size_t>(i) +
                      static_cast<std::size_t>(rng.bounded(indices.size() - static_cast<std::size_t>(i)));
      std::swap(indices[static_cast<std::size_t>(i)], indices[j]);
      task.push_back(universe[indices[static_cast<std::size_t>(i)]]);
    }
    out.push_back(std::move(task));
  }
  return out;
}

std::vector<std::string> community_skill_union(const ExpertGraph& g, const Community& c) {
  std::set<std::string> tokens;
  for (ExpertId v : c.members) {
    for (SkillId s : g.expert_skill_ids(v)) tokens.insert(g.skill_name(s));
  }
  return {tokens.begin(), tokens.end()};
}

BenchmarkReport run_benchmark(const ExperimentPlan& plan, const std::vector<NamedGraph>& graphs,
                              const std::vector<std::string>& universe) {
  if (graphs.empty()) throw std::invalid_argument("benchmark needs at least one graph");
  if (plan.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (plan.k_min < 1 || plan.k_min > plan.k_max) {
    throw std::invalid_argument("benchmark k range is empty");
  }
  if (static_cast<std::size_t>(plan.k_max) > universe.size()) {
    throw std::invalid_argument("k_max exceeds the task universe size");
  }
  if (plan.algorithms.empty()) throw std::invalid_argument("benchmark needs algorithms to run");
  for (const std::string& name : plan.algorithms) {
    if (!known_algorithm(name)) throw std::invalid_argument("unknown algorithm '" + name + "'");
  }
  for (const NamedGraph& g : graphs) {
    if (g.graph == nullptr) throw std::invalid_argument("graph '" + g.name + "' is null");
  }

  // Tasks per k, shared across graphs and algorithms.
  std::map<int, std::vector<Task>> tasks_by_k;
  for (int k = plan.k_min; k <= plan.k_max; ++k) {
    tasks_by_k.emplace(k, generate_tasks(universe, k, plan.trials, plan.seed));
  }

  BenchmarkReport report;
  for (const NamedGraph& named : graphs) {
    int k_cap = plan.k_max;
    auto cap_it = plan.k_caps.find(named.name);
    if (cap_it != plan.k_caps.end()) k_cap = std::min(k_cap, cap_it->second);

    for (int k = plan.k_min; k <= k_cap; ++k) {
      const std::vector<Task>& tasks = tasks_by_k.at(k);
      for (const std::string& algorithm : plan.algorithms) {
        BenchRow row;
        row.graph = named.name;
        row.algorithm = algorithm;
        row.k = k;
        row.trials = plan.trials;

        double sum_card = 0.0, sum_diam = 0.0, sum_sd = 0.0, sum_ld = 0.0;
        double sum_partial_cov = 0.0, sum_ms = 0.0;
        int with_fallback = 0;

        for (int trial = 0; trial < plan.trials; ++trial) {
          AlgorithmConfig cfg = plan.algo;
          cfg.rng_seed = derive_seed(plan.seed, static_cast<std::uint64_t>(k),
                                     static_cast<std::uint64_t>(trial));

          auto begin = std::chrono::steady_clock::now();
          Team team = run_algorithm(algorithm, *named.graph, tasks[static_cast<std::size_t>(trial)], cfg);
          auto end = std::chrono::steady_clock::now();
          sum_ms += std::chrono::duration<double, std::milli>(end - begin).count();

          CostReport cost = evaluate(*named.graph, team, tasks[static_cast<std::size_t>(trial)]);
          if (!team.fallback_experts.empty()) ++with_fallback;
          if (cost.covered == 1.0) {
            ++row.full;
            sum_card += static_cast<double>(cost.cardinality);
            sum_diam += cost.diameter;
            sum_sd += cost.sum_distance;
            sum_ld += cost.leader_distance;
          } else {
            ++row.partial;
            sum_partial_cov += cost.covered;
          }
        }

        if (row.full > 0) {
          row.mean_cardinality = sum_card / row.full;
          row.mean_diameter = sum_diam / row.full;
          row.mean_sum_distance = sum_sd / row.full;
          row.mean_leader_distance = sum_ld / row.full;
        }
        if (row.partial > 0) row.mean_partial_coverage = sum_partial_cov / row.partial;
        row.mean_wall_ms = sum_ms / plan.trials;
        row.fallback_fraction = static_cast<double>(with_fallback) / plan.trials;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

namespace {

std::string format_mean(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

/// One pivot table: rows k, one column per algorithm.
std::string pivot_csv(const BenchmarkReport& report, const std::string& graph,
                      const std::vector<std::string>& algorithms, const std::string& what,
                      const std::function<std::string(const BenchRow&)>& cell) {
  std::string out = "# " + what + "; rows are task sizes, columns algorithms\nk";
  for (const std::string& a : algorithms) out += "," + a;
  out += "\n";

  std::vector<int> ks;
  for (const BenchRow& row : report.rows) {
    if (row.graph == graph && (ks.empty() || ks.back() != row.k)) ks.push_back(row.k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  for (int k : ks) {
    out += std::to_string(k);
    for (const std::string& a : algorithms) {
      out += ",";
      for (const BenchRow& row : report.rows) {
        if (row.graph == graph && row.algorithm == a && row.k == k) {
          out += cell(row);
          break;
        }
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> emit_report(const BenchmarkReport& report,
                                                             const ExperimentPlan& plan) {
  std::vector<std::pair<std::string, std::string>> files;

  std::vector<std::string> graph_names;
  for (const BenchRow& row : report.rows) {
    if (std::find(graph_names.begin(), graph_names.end(), row.graph) == graph_names.end()) {
      graph_names.push_back(row.graph);
    }
  }

  auto full_mean = [](double BenchRow::*field) {
    return [field](const BenchRow& row) {
      return row.full > 0 ? format_mean(row.*field) : std::string("-");
    };
  };

  for (const std::string& graph : graph_names) {
    files.emplace_back(graph + "_cardinality.csv",
                       pivot_csv(report, graph, plan.algorithms,
                                 "mean team cardinality over full-coverage runs",
                                 full_mean(&BenchRow::mean_cardinality)));
    files.emplace_back(graph + "_diameter.csv",
                       pivot_csv(report, graph, plan.algorithms,
                                 "mean team diameter over full-coverage runs",
                                 full_mean(&BenchRow::mean_diameter)));
    files.emplace_back(graph + "_sum_distance.csv",
                       pivot_csv(report, graph, plan.algorithms,
                                 "mean sum distance over full-coverage runs",
                                 full_mean(&BenchRow::mean_sum_distance)));
    files.emplace_back(graph + "_leader_distance.csv",
                       pivot_csv(report, graph, plan.algorithms,
                                 "mean leader distance over full-coverage runs",
                                 full_mean(&BenchRow::mean_leader_distance)));
    files.emplace_back(graph + "_fallback.csv",
                       pivot_csv(report, graph, plan.algorithms,
                                 "fraction of runs needing fallback experts",
                                 [](const BenchRow& row) {
                                   return format_mean(row.fallback_fraction);
                                 }));
    files.emplace_back(graph + "_coverage.csv",
                       pivot_csv(report, graph, plan.algorithms,
                                 "full-coverage runs out of all trials",
                                 [](const BenchRow& row) {
                                   return std::to_string(row.full) + "/" +
                                          std::to_string(row.trials);
                                 }));
    files.emplace_back(graph + "_timing.csv",
                       pivot_csv(report, graph, plan.algorithms, "mean wall milliseconds per run",
                                 [](const BenchRow& row) {
                                   char buf[64];
                                   std::snprintf(buf, sizeof(buf), "%.3f", row.mean_wall_ms);
                                   return std::string(buf);
                                 }));
  }

  std::string md = "# Benchmark summary\n\n";
  md += "* trials per task size: " + std::to_string(plan.trials) + "\n";
  md += "* task sizes: " + std::to_string(plan.k_min) + ".." + std::to_string(plan.k_max) + "\n";
  md += "* seed: " + std::to_string(plan.seed) + "\n";
  if (!plan.task_source.empty()) md += "* task universe: " + plan.task_source + "\n";
  md += "\n| graph | algorithm | k | full/trials | cardinality | diameter | sum distance | "
        "leader distance | fallback | ms |\n";
  md += "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const BenchRow& row : report.rows) {
    md += "| " + row.graph + " | " + row.algorithm + " | " + std::to_string(row.k) + " | " +
          std::to_string(row.full) + "/" + std::to_string(row.trials) + " | ";
    if (row.full > 0) {
      md += format_mean(row.mean_cardinality) + " | " + format_mean(row.mean_diameter) + " | " +
            format_mean(row.mean_sum_distance) + " | " + format_mean(row.mean_leader_distance);
    } else {
      md += "- | - | - | -";
    }
    char ms[64];
    std::snprintf(ms, sizeof(ms), "%.3f", row.mean_wall_ms);
    md += " | " + format_mean(row.fallback_fraction) + " | " + ms + " |\n";
  }
  files.emplace_back("summary.md", std::move(md));
  return files;
}

CaseStudyTable run_case_study(const ExpertGraph& g, const std::vector<Community>& communities,
                              const std::vector<Task>& tasks, double threshold,
                              const AlgorithmConfig& cfg) {
  if (tasks.empty()) throw std::invalid_argument("case study needs at least one task");

  CaseStudyTable table;
  table.threshold = threshold;
  table.tasks = tasks;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    table.task_labels.push_back("T" + std::to_string(i + 1));
  }
  for (const Community& c : communities) table.community_names.push_back(c.name);
  table.cells.assign(communities.size(), std::vector<CaseStudyCell>(tasks.size()));

  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto teams = dc(g, communities, tasks[t], threshold, cfg);
    for (const auto& [name, team] : teams) {
      for (std::size_t c = 0; c < communities.size(); ++c) {
        if (communities[c].name == name) {
          table.cells[c][t].desirable = true;
          table.cells[c][t].team = team;
          break;
        }
      }
    }
  }
  return table;
}

namespace {

std::string escape_markdown(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out.push_back(c);
  }
  return out;
}

}  // namespace

std::string case_study_markdown(const ExpertGraph& g, const CaseStudyTable& table) {
  std::string md = "| community |";
  for (std::size_t t = 0; t < table.task_labels.size(); ++t) {
    md += " " + table.task_labels[t] + " (" + std::to_string(table.tasks[t].size()) +
          " skills) |";
  }
  md += "\n|---|";
  for (std::size_t t = 0; t < table.task_labels.size(); ++t) md += "---|";
  md += "\n";

  for (std::size_t c = 0; c < table.community_names.size(); ++c) {
    md += "| " + escape_markdown(table.community_names[c]) + " |";
    for (std::size_t t = 0; t < table.tasks.size(); ++t) {
      const CaseStudyCell& cell = table.cells[c][t];
      if (!cell.desirable) {
        md += "  |";
        continue;
      }
      std::string body;
      if (cell.team.leader) {
        body += "**" + escape_markdown(g.name(*cell.team.leader)) + "**";
      }
      std::set<ExpertId> fallback(cell.team.fallback_experts.begin(),
                                  cell.team.fallback_experts.end());
      for (ExpertId m : cell.team.members()) {
        if (cell.team.leader && m == *cell.team.leader) continue;
        if (!body.empty()) body += ", ";
        body += escape_markdown(g.name(m));
        if (fallback.count(m) != 0) body += "\\*";
      }
      md += " " + body + " |";
    }
    md += "\n";
  }
  md += "\n\\* expert added by the fallback step\n";
  return md;
}

}  // namespace teamform
