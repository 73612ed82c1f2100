#include "teamform/expert_graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

namespace teamform {

bool valid_skill_token(const std::string& token) {
  if (token.empty()) return false;
  for (unsigned char c : token) {
    if (std::isspace(c) || std::isupper(c)) return false;
  }
  return true;
}

SkillId ExpertGraph::find_skill(const std::string& token) const {
  auto it = std::lower_bound(skill_names_.begin(), skill_names_.end(), token);
  if (it == skill_names_.end() || *it != token) return kInvalidSkill;
  return static_cast<SkillId>(it - skill_names_.begin());
}

std::vector<std::string> ExpertGraph::expert_skills(ExpertId v) const {
  std::vector<std::string> out;
  for (SkillId s : expert_skill_ids(v)) out.push_back(skill_names_[s]);
  return out;
}

bool ExpertGraph::expert_has_skill(ExpertId v, SkillId s) const {
  auto ids = expert_skill_ids(v);
  return std::binary_search(ids.begin(), ids.end(), s);
}

std::span<const ExpertId> ExpertGraph::skill_support(const std::string& token) const {
  SkillId s = find_skill(token);
  if (s == kInvalidSkill) return {};
  return skill_support(s);
}

std::pair<ExpertGraph, std::vector<ExpertId>> ExpertGraph::induced_subgraph(
    const std::vector<ExpertId>& members) const {
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("induced_subgraph: members must be sorted and unique");
  }
  std::vector<ExpertId> to_new(node_count(), kInvalidExpert);
  for (std::size_t i = 0; i < members.size(); ++i) {
    check_id(members[i]);
    to_new[members[i]] = static_cast<ExpertId>(i);
  }
  ExpertGraphBuilder b;
  for (ExpertId old : members) b.add_expert(name(old), expert_skills(old));
  for (ExpertId old : members) {
    for (const Neighbor& nb : neighbors(old)) {
      if (nb.to > old && to_new[nb.to] != kInvalidExpert) {
        b.add_edge(to_new[old], to_new[nb.to], nb.weight);
      }
    }
  }
  return {b.build(), members};
}

ExpertId ExpertGraphBuilder::add_expert(std::string name, std::vector<std::string> skills) {
  for (const auto& s : skills) {
    if (!valid_skill_token(s)) {
      throw std::invalid_argument("invalid skill token '" + s + "' for expert '" + name + "'");
    }
  }
  std::sort(skills.begin(), skills.end());
  skills.erase(std::unique(skills.begin(), skills.end()), skills.end());
  names_.push_back(std::move(name));
  skills_.push_back(std::move(skills));
  return static_cast<ExpertId>(names_.size() - 1);
}

void ExpertGraphBuilder::add_edge(ExpertId u, ExpertId v, double weight) {
  if (u >= names_.size() || v >= names_.size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (!std::isfinite(weight) || weight < 0.0) {
    throw std::invalid_argument("edge weight must be finite and non-negative");
  }
  // Normalized (min,max) key so a repeated pair is caught no matter the
  // endpoint order it arrives in.
  auto key = std::minmax(u, v);
  if (!edge_keys_.insert({key.first, key.second}).second) {
    throw std::invalid_argument("parallel edge between " + std::to_string(u) + " and " +
                                std::to_string(v));
  }
  edges_.push_back({u, v, weight});
}

ExpertGraph ExpertGraphBuilder::build() {
  ExpertGraph g;
  const std::size_t n = names_.size();
  g.names_ = std::move(names_);

  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }
  g.edge_count_ = edges_.size();

  // Intern skills.
  std::set<std::string> universe;
  for (const auto& sk : skills_) universe.insert(sk.begin(), sk.end());
  g.skill_names_.assign(universe.begin(), universe.end());
  std::unordered_map<std::string, SkillId> index;
  index.reserve(g.skill_names_.size());
  for (std::size_t i = 0; i < g.skill_names_.size(); ++i) {
    index[g.skill_names_[i]] = static_cast<SkillId>(i);
  }

  g.skill_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.skill_offsets_[v + 1] = g.skill_offsets_[v] + skills_[v].size();
  g.skill_ids_.resize(g.skill_offsets_[n]);
  std::vector<std::size_t> support_count(g.skill_names_.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t at = g.skill_offsets_[v];
    for (const auto& tok : skills_[v]) {
      SkillId s = index[tok];
      g.skill_ids_[at++] = s;
      ++support_count[s];
    }
    std::sort(g.skill_ids_.begin() + static_cast<std::ptrdiff_t>(g.skill_offsets_[v]),
              g.skill_ids_.begin() + static_cast<std::ptrdiff_t>(g.skill_offsets_[v + 1]));
  }

  g.support_offsets_.assign(g.skill_names_.size() + 1, 0);
  for (std::size_t s = 0; s < g.skill_names_.size(); ++s) {
    g.support_offsets_[s + 1] = g.support_offsets_[s] + support_count[s];
  }
  g.support_.resize(g.support_offsets_[g.skill_names_.size()]);
  std::vector<std::size_t> scur(g.support_offsets_.begin(), g.support_offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {  // ascending v keeps each support list sorted
    for (SkillId s : g.expert_skill_ids(static_cast<ExpertId>(v))) {
      g.support_[scur[s]++] = static_cast<ExpertId>(v);
    }
  }

  skills_.clear();
  edges_.clear();
  return g;
}

void validate_communities(const ExpertGraph& g, const std::vector<Community>& communities) {
  std::map<std::string, const Community*> by_name;
  for (const auto& c : communities) {
    if (c.name.empty()) throw std::invalid_argument("community with empty name");
    if (!std::is_sorted(c.members.begin(), c.members.end()) ||
        std::adjacent_find(c.members.begin(), c.members.end()) != c.members.end()) {
      throw std::invalid_argument("community '" + c.name + "': members must be sorted and unique");
    }
    for (ExpertId v : c.members) g.check_id(v);
    if (!c.parent.empty()) {
      auto it = by_name.find(c.parent);
      if (it == by_name.end()) {
        throw std::invalid_argument("community '" + c.name + "': unknown parent '" + c.parent + "'");
      }
      if (!std::includes(it->second->members.begin(), it->second->members.end(),
                         c.members.begin(), c.members.end())) {
        throw std::invalid_argument("community '" + c.name + "' is not contained in parent '" +
                                    c.parent + "'");
      }
    }
    if (!by_name.emplace(c.name, &c).second) {
      throw std::invalid_argument("duplicate community name '" + c.name + "'");
    }
  }
}

}  // namespace teamform
