#include "teamform/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "teamform/config_file.hpp"
#include "teamform/dblp_xml.hpp"
#include "teamform/text_pipeline.hpp"

namespace teamform {

namespace {

std::string lowercased(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

VenueConfig::VenueConfig(std::vector<std::pair<std::string, std::vector<std::string>>> areas) {
  if (areas.empty()) throw std::invalid_argument("venue config must name at least one area");
  std::set<std::string> area_names;
  for (auto& [area, venues] : areas) {
    area = lowercased(area);
    if (area.empty()) throw std::invalid_argument("area names must be non-empty");
    if (!area_names.insert(area).second) {
      throw std::invalid_argument("duplicate area '" + area + "'");
    }
    if (venues.empty()) {
      throw std::invalid_argument("area '" + area + "' lists no conferences");
    }
    for (auto& v : venues) {
      v = lowercased(v);
      if (v.empty()) throw std::invalid_argument("conference keys must be non-empty");
      if (!venue_to_area_.emplace(v, area).second) {
        throw std::invalid_argument("conference '" + v + "' appears under two areas");
      }
    }
  }
  // Communities are named after areas and conferences alike, so the two
  // namespaces must not collide.
  for (const auto& [venue, _] : venue_to_area_) {
    if (area_names.count(venue) != 0) {
      throw std::invalid_argument("'" + venue + "' is used as both an area and a conference");
    }
  }
  areas_ = std::move(areas);
}

VenueConfig VenueConfig::load(const std::string& path) {
  ConfigFile file = ConfigFile::load(path);
  if (!file.has_section("areas")) {
    throw std::invalid_argument("venue config '" + path + "' has no [areas] section");
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> areas;
  for (const std::string& key : file.keys("areas")) {
    areas.emplace_back(key, file.get("areas", key).as_string_array());
  }
  return VenueConfig(std::move(areas));
}

bool VenueConfig::knows(std::string_view venue) const {
  return venue_to_area_.find(venue) != venue_to_area_.end();
}

std::string VenueConfig::area_of(std::string_view venue) const {
  auto it = venue_to_area_.find(venue);
  return it == venue_to_area_.end() ? std::string() : it->second;
}

std::string record_venue(const std::string& key, const std::string& booktitle) {
  // DBLP keys look like "conf/vldb/LiSD09": the middle segment names the venue.
  std::size_t first = key.find('/');
  if (first != std::string::npos) {
    std::size_t second = key.find('/', first + 1);
    if (second != std::string::npos && second > first + 1) {
      return lowercased(std::string_view(key).substr(first + 1, second - first - 1));
    }
  }
  return lowercased(booktitle);
}

std::vector<PublicationRecord> filter_corpus(const std::vector<RawRecord>& raw,
                                             const VenueConfig& venues) {
  std::vector<PublicationRecord> out;
  std::unordered_set<std::string> seen_keys;
  std::size_t anonymous = 0;
  for (const RawRecord& r : raw) {
    if (r.authors.empty()) continue;
    std::string venue = record_venue(r.key, r.booktitle);
    if (venue.empty() || !venues.knows(venue)) continue;

    PublicationRecord rec;
    rec.key = r.key.empty() ? "anon:" + std::to_string(anonymous++) : r.key;
    if (!seen_keys.insert(rec.key).second) continue;  // first record with a key wins
    rec.venue = std::move(venue);
    rec.year = r.year;
    rec.title = r.title;
    rec.authors = r.authors;
    // An author listed twice on one publication counts once.
    std::vector<std::string> unique_authors;
    for (const std::string& a : rec.authors) {
      if (std::find(unique_authors.begin(), unique_authors.end(), a) == unique_authors.end()) {
        unique_authors.push_back(a);
      }
    }
    rec.authors = std::move(unique_authors);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PublicationRecord> parse_corpus(std::string_view xml, const VenueConfig& venues) {
  return filter_corpus(parse_dblp_xml(xml), venues);
}

std::vector<AuthorStats> collect_author_stats(const std::vector<PublicationRecord>& records) {
  std::map<std::string, AuthorStats> by_name;
  for (const PublicationRecord& rec : records) {
    std::vector<std::string> stems = title_skill_stems(rec.title);
    for (const std::string& author : rec.authors) {
      AuthorStats& st = by_name[author];
      if (st.name.empty()) st.name = author;
      st.publications.push_back(rec.key);
      for (const std::string& stem : stems) ++st.title_word_counts[stem];
    }
  }
  std::vector<AuthorStats> out;
  out.reserve(by_name.size());
  for (auto& [_, st] : by_name) {
    std::sort(st.publications.begin(), st.publications.end());
    st.publications.erase(std::unique(st.publications.begin(), st.publications.end()),
                          st.publications.end());
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<std::string> extract_skills(const AuthorStats& stats, int min_count) {
  std::vector<std::string> out;
  for (const auto& [stem, count] : stats.title_word_counts) {
    if (count >= min_count) out.push_back(stem);
  }
  return out;  // map iteration is already sorted ascending
}

namespace {

NetworkStats stats_row(std::string name, std::size_t nodes, std::size_t edges,
                       std::size_t skills) {
  NetworkStats row;
  row.name = std::move(name);
  row.nodes = nodes;
  row.edges = edges;
  row.skills = skills;
  row.avg_degree = nodes == 0 ? 0.0 : 2.0 * static_cast<double>(edges) / static_cast<double>(nodes);
  row.skills_per_edge = edges == 0 ? 0.0 : static_cast<double>(skills) / static_cast<double>(edges);
  return row;
}

}  // namespace

IngestResult build_graph(const std::vector<PublicationRecord>& records, const VenueConfig& venues,
                         const IngestOptions& opts) {
  if (opts.min_pubs < 1 || opts.min_joint < 1 || opts.min_skill_count < 1) {
    throw std::invalid_argument("ingest thresholds must be >= 1");
  }

  std::vector<AuthorStats> authors = collect_author_stats(records);

  // Experts: authors clearing the publication threshold, in name order.
  std::unordered_map<std::string, ExpertId> id_of;
  ExpertGraphBuilder builder;
  std::vector<const AuthorStats*> experts;
  for (const AuthorStats& st : authors) {
    if (st.publications.size() < static_cast<std::size_t>(opts.min_pubs)) continue;
    ExpertId id = builder.add_expert(st.name, extract_skills(st, opts.min_skill_count));
    id_of.emplace(st.name, id);
    experts.push_back(&st);
  }

  // Expert author lists per publication drive both edges and communities.
  std::unordered_map<std::uint64_t, int> joint;
  std::map<std::string, std::set<ExpertId>> venue_members;
  for (const PublicationRecord& rec : records) {
    std::vector<ExpertId> ids;
    for (const std::string& a : rec.authors) {
      auto it = id_of.find(a);
      if (it != id_of.end()) ids.push_back(it->second);
    }
    if (ids.empty()) continue;
    std::sort(ids.begin(), ids.end());
    for (ExpertId v : ids) venue_members[rec.venue].insert(v);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        ++joint[(static_cast<std::uint64_t>(ids[i]) << 32) | ids[j]];
      }
    }
  }

  // Edges in deterministic (u, v) order with Jaccard-distance weights over
  // the retained publication sets.
  std::vector<std::pair<std::uint64_t, int>> pairs(joint.begin(), joint.end());
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [key, count] : pairs) {
    if (count < opts.min_joint) continue;
    auto u = static_cast<ExpertId>(key >> 32);
    auto v = static_cast<ExpertId>(key & 0xFFFFFFFFu);
    double pu = static_cast<double>(experts[u]->publications.size());
    double pv = static_cast<double>(experts[v]->publications.size());
    double unions = pu + pv - static_cast<double>(count);
    builder.add_edge(u, v, 1.0 - static_cast<double>(count) / unions);
  }

  IngestResult result;
  result.graph = builder.build();

  // Communities: each research area, then its conferences nested inside it.
  // Venues whose publications left no experts behind produce no community.
  for (const auto& [area, conferences] : venues.areas()) {
    std::set<ExpertId> area_members;
    for (const std::string& venue : conferences) {
      auto it = venue_members.find(venue);
      if (it != venue_members.end()) area_members.insert(it->second.begin(), it->second.end());
    }
    if (area_members.empty()) continue;
    result.communities.push_back(
        Community{area, "", std::vector<ExpertId>(area_members.begin(), area_members.end())});
    for (const std::string& venue : conferences) {
      auto it = venue_members.find(venue);
      if (it == venue_members.end() || it->second.empty()) continue;
      result.communities.push_back(
          Community{venue, area, std::vector<ExpertId>(it->second.begin(), it->second.end())});
    }
  }
  validate_communities(result.graph, result.communities);

  // Statistics: the whole graph first, then every community.
  const ExpertGraph& g = result.graph;
  result.stats.push_back(stats_row("all", g.node_count(), g.edge_count(), g.skill_count()));
  for (const Community& c : result.communities) {
    std::vector<char> in(g.node_count(), 0);
    for (ExpertId v : c.members) in[v] = 1;
    std::size_t edges = 0;
    std::set<SkillId> skills;
    for (ExpertId v : c.members) {
      for (const Neighbor& nb : g.neighbors(v)) {
        if (nb.to > v && in[nb.to]) ++edges;
      }
      auto ids = g.expert_skill_ids(v);
      skills.insert(ids.begin(), ids.end());
    }
    result.stats.push_back(stats_row(c.name, c.members.size(), edges, skills.size()));
  }
  return result;
}

std::string stats_csv(const std::vector<NetworkStats>& stats) {
  std::string out = "name,nodes,edges,skills,avg_degree,skills_per_edge\n";
  char buf[256];
  for (const NetworkStats& row : stats) {
    std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%zu,%.6g,%.6g\n", row.name.c_str(), row.nodes,
                  row.edges, row.skills, row.avg_degree, row.skills_per_edge);
    out += buf;
  }
  return out;
}

}  // namespace teamform
