#include "teamform/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "teamform/graph_io.hpp"
#include "teamform/graph_queries.hpp"

namespace teamform {

void validate_task(const Task& t) {
  std::set<std::string> seen;
  for (const auto& tok : t) {
    if (!valid_skill_token(tok)) throw std::invalid_argument("invalid task skill token '" + tok + "'");
    if (!seen.insert(tok).second) throw std::invalid_argument("duplicate task skill '" + tok + "'");
  }
}

std::vector<ExpertId> Team::members() const {
  std::vector<ExpertId> out;
  if (leader) out.push_back(*leader);
  for (const auto& [skill, expert] : assignment) out.push_back(expert);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Team::coverage(const Task& t) const {
  if (t.empty()) return 1.0;
  std::size_t covered = 0;
  for (const auto& tok : t) covered += assignment.count(tok);
  return static_cast<double>(covered) / static_cast<double>(t.size());
}

bool Team::assignment_valid(const ExpertGraph& g) const {
  for (const auto& [skill, expert] : assignment) {
    SkillId s = g.find_skill(skill);
    if (s == kInvalidSkill || !g.expert_has_skill(expert, s)) return false;
  }
  return true;
}

namespace {

/// Pairwise distances among the distinct experts of a team, as a lookup from
/// expert id to its row in a dense matrix.
struct MemberDistances {
  std::vector<ExpertId> members;
  std::vector<std::vector<double>> dist;  // dist[i][j] over members

  double between(ExpertId a, ExpertId b) const {
    if (a == b) return 0.0;
    return dist[index(a)][index(b)];
  }
  std::size_t index(ExpertId v) const {
    return static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), v) - members.begin());
  }
};

MemberDistances member_distances(const ExpertGraph& g, const std::vector<ExpertId>& members) {
  MemberDistances md;
  md.members = members;
  md.dist.resize(members.size());
  DistanceEngine engine(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    md.dist[i] = engine.distances_to(members[i], members);
  }
  return md;
}

}  // namespace

double diameter(const ExpertGraph& g, const Team& team) {
  auto members = team.members();
  if (members.empty()) throw std::invalid_argument("diameter: team has no members");
  if (members.size() == 1) return 0.0;
  auto md = member_distances(g, members);
  double worst = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      double d = md.dist[i][j];
      if (is_unreachable(d)) return kUnreachable;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

namespace {

double pair_sum_over(const ExpertGraph& g, const Team& team, const std::vector<std::string>& skills) {
  std::vector<ExpertId> assigned;
  for (const auto& tok : skills) assigned.push_back(team.assignment.at(tok));
  std::vector<ExpertId> uniq = assigned;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  auto md = member_distances(g, uniq);
  double total = 0.0;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    for (std::size_t j = i + 1; j < assigned.size(); ++j) {
      double d = md.between(assigned[i], assigned[j]);
      if (is_unreachable(d)) return kUnreachable;
      total += d;
    }
  }
  return total;
}

}  // namespace

double sum_distance(const ExpertGraph& g, const Team& team, const Task& t) {
  for (const auto& tok : t) {
    if (!team.assignment.count(tok)) {
      throw ContractViolation("sum_distance: task skill '" + tok + "' is not assigned");
    }
  }
  return pair_sum_over(g, team, t);
}

double leader_distance(const ExpertGraph& g, const Team& team) {
  if (!team.leader) throw ContractViolation("leader_distance: team has no leader");
  auto members = team.members();
  DistanceEngine engine(g);
  auto dist = engine.distances_to(*team.leader, members);
  double total = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == *team.leader) continue;
    if (is_unreachable(dist[i])) return kUnreachable;
    total += dist[i];
  }
  return total;
}

CostReport evaluate(const ExpertGraph& g, const Team& team, const Task& t) {
  CostReport report;
  auto members = team.members();
  report.cardinality = members.size();
  report.covered = team.coverage(t);
  report.diameter = members.empty() ? 0.0 : diameter(g, team);
  std::vector<std::string> assigned_skills;
  for (const auto& tok : t) {
    if (team.assignment.count(tok)) assigned_skills.push_back(tok);
  }
  report.sum_distance = pair_sum_over(g, team, assigned_skills);
  report.leader_distance = team.leader ? leader_distance(g, team) : 0.0;
  return report;
}

std::string cost_csv_header() {
  return "algorithm,k,cardinality,diameter,sum_distance,leader_distance,covered,wall_ms,random_experts";
}

std::string cost_csv_row(const std::string& algorithm, std::size_t k, const CostReport& report,
                         double wall_ms, std::size_t random_experts) {
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", wall_ms);
  std::string row = algorithm;
  row += ',';
  row += std::to_string(k);
  row += ',';
  row += std::to_string(report.cardinality);
  row += ',';
  row += format_weight(report.diameter);
  row += ',';
  row += format_weight(report.sum_distance);
  row += ',';
  row += format_weight(report.leader_distance);
  row += ',';
  row += format_weight(report.covered);
  row += ',';
  row += wall;
  row += ',';
  row += std::to_string(random_experts);
  return row;
}

}  // namespace teamform
