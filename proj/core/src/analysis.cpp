#include "teamform/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "teamform/graph_queries.hpp"

namespace teamform {

DistributionSeries degree_distribution(const ExpertGraph& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (ExpertId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
  DistributionSeries out;
  out.rows.assign(counts.begin(), counts.end());
  return out;
}

DistributionSeries component_size_distribution(const ExpertGraph& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& component : connected_components(g)) ++counts[component.size()];
  DistributionSeries out;
  out.rows.assign(counts.begin(), counts.end());
  return out;
}

std::pair<std::size_t, std::size_t> collaborator_ratio(const ExpertGraph& g, double factor) {
  const double bar = factor * g.average_degree();
  std::size_t high = 0;
  for (ExpertId v = 0; v < g.node_count(); ++v) {
    if (static_cast<double>(g.degree(v)) > bar) ++high;
  }
  return {high, g.node_count() - high};
}

SkillCoverageTable cumulative_skill_coverage(const ExpertGraph& g, const Community& community,
                                             int hops_max) {
  if (community.members.empty()) {
    throw std::invalid_argument("coverage needs a non-empty community");
  }
  if (hops_max < 0) throw std::invalid_argument("hops_max must be >= 0");

  auto [sub, back] = g.induced_subgraph(community.members);

  // Denominator: the union of the members' skills (interned in the subgraph).
  const std::size_t universe = sub.skill_count();
  if (universe == 0) {
    throw std::invalid_argument("coverage needs a community whose members hold skills");
  }

  SkillCoverageTable table;
  table.community_skill_count = universe;

  HopEngine bfs(sub);
  std::vector<char> seen(universe, 0);
  for (ExpertId v = 0; v < sub.node_count(); ++v) {
    SkillCoverageTable::NodeRow row;
    row.node = back[v];
    row.degree = sub.degree(v);
    row.coverage.reserve(static_cast<std::size_t>(hops_max) + 1);

    const std::vector<int>& hops = bfs.hops_from(v, hops_max);
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t covered = 0;
    for (int h = 0; h <= hops_max; ++h) {
      for (ExpertId u = 0; u < sub.node_count(); ++u) {
        if (hops[u] != h) continue;  // nodes joining the neighborhood at radius h
        for (SkillId s : sub.expert_skill_ids(u)) {
          if (!seen[s]) {
            seen[s] = 1;
            ++covered;
          }
        }
      }
      row.coverage.push_back(static_cast<double>(covered) / static_cast<double>(universe));
    }
    table.per_node.push_back(std::move(row));
  }

  // Group means per subgraph degree.
  std::map<std::size_t, SkillCoverageTable::DegreeRow> groups;
  for (const auto& row : table.per_node) {
    auto& group = groups[row.degree];
    if (group.nodes == 0) {
      group.degree = row.degree;
      group.mean_coverage.assign(row.coverage.size(), 0.0);
    }
    ++group.nodes;
    for (std::size_t h = 0; h < row.coverage.size(); ++h) group.mean_coverage[h] += row.coverage[h];
  }
  for (auto& [_, group] : groups) {
    for (double& c : group.mean_coverage) c /= static_cast<double>(group.nodes);
    table.per_degree.push_back(std::move(group));
  }
  return table;
}

namespace {

void append_number(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  out += buf;
}

}  // namespace

std::string distribution_csv(const DistributionSeries& series, const std::string& x_label) {
  std::string out = "# frequency table: " + x_label + " -> number of occurrences\n";
  out += x_label + ",count\n";
  for (const auto& [x, count] : series.rows) {
    out += std::to_string(x) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string collaborator_ratio_csv(const ExpertGraph& g, double factor) {
  auto [high, low] = collaborator_ratio(g, factor);
  std::string out =
      "# nodes with degree > factor * average degree, and the rest\n"
      "factor,average_degree,high,low\n";
  append_number(out, factor);
  out += ",";
  append_number(out, g.average_degree());
  out += "," + std::to_string(high) + "," + std::to_string(low) + "\n";
  return out;
}

namespace {

std::string coverage_header(const char* lead, std::size_t columns) {
  std::string out = lead;
  for (std::size_t h = 0; h < columns; ++h) out += ",hop" + std::to_string(h);
  out += "\n";
  return out;
}

}  // namespace

std::string coverage_per_node_csv(const SkillCoverageTable& table) {
  std::string out = "# fraction of community skills covered by each node's h-hop neighborhood\n";
  std::size_t columns = table.per_node.empty() ? 0 : table.per_node.front().coverage.size();
  out += coverage_header("node,degree", columns);
  for (const auto& row : table.per_node) {
    out += std::to_string(row.node) + "," + std::to_string(row.degree);
    for (double c : row.coverage) {
      out += ",";
      append_number(out, c);
    }
    out += "\n";
  }
  return out;
}

std::string coverage_per_degree_csv(const SkillCoverageTable& table) {
  std::string out = "# mean coverage per degree group, hop columns cumulative\n";
  std::size_t columns = table.per_degree.empty() ? 0 : table.per_degree.front().mean_coverage.size();
  out += coverage_header("degree,nodes", columns);
  for (const auto& row : table.per_degree) {
    out += std::to_string(row.degree) + "," + std::to_string(row.nodes);
    for (double c : row.mean_coverage) {
      out += ",";
      append_number(out, c);
    }
    out += "\n";
  }
  return out;
}

}  // namespace teamform
