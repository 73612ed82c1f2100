#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teamform/expert_graph.hpp"

namespace teamform {

/// Frequency table suitable for log-log plotting: distinct x ascending,
/// every count >= 1.
struct DistributionSeries {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // (x, count)
};

/// How many nodes have each degree. Sum of counts = |V|.
DistributionSeries degree_distribution(const ExpertGraph& g);

/// How many connected components have each size. Sum of size*count = |V|.
DistributionSeries component_size_distribution(const ExpertGraph& g);

/// Split of the node set into high collaborators (degree > factor * average
/// degree) and the rest. high + low = |V|.
std::pair<std::size_t, std::size_t> collaborator_ratio(const ExpertGraph& g, double factor = 2.0);

/// Cumulative skill coverage of one community, per node and per degree group.
///
/// For every member v of the community, coverage at hop h is
///   |skills of the closed h-neighborhood of v| / |community skill union|,
/// with neighborhoods taken inside the community's induced subgraph. Columns
/// are monotone nondecreasing in h and bounded by 1.
struct SkillCoverageTable {
  struct NodeRow {
    ExpertId node = kInvalidExpert;  // id in the original graph
    std::size_t degree = 0;          // degree inside the community subgraph
    std::vector<double> coverage;    // hop 0 .. hops_max
  };
  struct DegreeRow {
    std::size_t degree = 0;
    std::size_t nodes = 0;             // group size
    std::vector<double> mean_coverage;  // hop 0 .. hops_max
  };

  std::size_t community_skill_count = 0;
  std::vector<NodeRow> per_node;      // ascending node id
  std::vector<DegreeRow> per_degree;  // ascending degree
};

/// Throws std::invalid_argument when the community has no members or its
/// members hold no skills at all (the denominator would be empty).
SkillCoverageTable cumulative_skill_coverage(const ExpertGraph& g, const Community& community,
                                             int hops_max = 3);

/// CSV emitters; every file starts with a '#' comment line documenting the
/// columns, then a header row.
std::string distribution_csv(const DistributionSeries& series, const std::string& x_label);
std::string collaborator_ratio_csv(const ExpertGraph& g, double factor = 2.0);
std::string coverage_per_node_csv(const SkillCoverageTable& table);
std::string coverage_per_degree_csv(const SkillCoverageTable& table);

}  // namespace teamform
