#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "teamform/expert_graph.hpp"

namespace teamform {

/// One publication retained after venue filtering.
struct PublicationRecord {
  std::string key;    // unique corpus key
  std::string venue;  // lowercase conference key from the configured set
  int year = 0;
  std::string title;
  std::vector<std::string> authors;  // in record order, non-empty
};

/// Research areas and the conferences that make them up. Areas become big
/// communities, conferences small ones nested inside their area.
class VenueConfig {
 public:
  /// areas: (area name, conference keys); names and keys are lowercased.
  /// Throws std::invalid_argument on empty input or a conference listed
  /// under two areas.
  explicit VenueConfig(std::vector<std::pair<std::string, std::vector<std::string>>> areas);

  /// Reads the `[areas]` table of a config file:
  ///   [areas]
  ///   db = ["vldb", "sigmod"]
  static VenueConfig load(const std::string& path);

  const std::vector<std::pair<std::string, std::vector<std::string>>>& areas() const {
    return areas_;
  }

  bool knows(std::string_view venue) const;
  /// Area owning `venue`; empty when unknown.
  std::string area_of(std::string_view venue) const;

 private:
  std::vector<std::pair<std::string, std::vector<std::string>>> areas_;
  std::map<std::string, std::string, std::less<>> venue_to_area_;
};

/// Lowercased venue key of a raw record: the second segment of a
/// `conf/<venue>/...` or `journals/<venue>/...` key, else the booktitle.
std::string record_venue(const std::string& key, const std::string& booktitle);

/// Filters a parsed corpus down to publications in configured venues.
/// Records without authors or without a resolvable venue are dropped.
/// Record order (and therefore key order) follows the document.
struct RawRecord;  // from dblp_xml.hpp
std::vector<PublicationRecord> filter_corpus(const std::vector<RawRecord>& raw,
                                             const VenueConfig& venues);

/// Parses XML text and filters in one step.
std::vector<PublicationRecord> parse_corpus(std::string_view xml, const VenueConfig& venues);

/// Everything known about one author before thresholding.
struct AuthorStats {
  std::string name;
  std::vector<std::string> publications;       // keys, sorted ascending, unique
  std::map<std::string, int> title_word_counts;  // stem -> occurrences across titles
};

/// Accumulates per-author publication sets and title-stem counts
/// (tokenize, drop stop words, stem — every surviving occurrence counts).
std::vector<AuthorStats> collect_author_stats(const std::vector<PublicationRecord>& records);

/// Skills of one author: stems whose total count across the author's titles
/// reaches min_count. Sorted ascending.
std::vector<std::string> extract_skills(const AuthorStats& stats, int min_count = 2);

struct IngestOptions {
  int min_pubs = 3;         // author -> expert threshold
  int min_joint = 3;        // joint publications needed for an edge
  int min_skill_count = 2;  // per-author stem count needed for a skill
};

/// One row of the network statistics table.
struct NetworkStats {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t skills = 0;     // distinct skills over the row's experts
  double avg_degree = 0.0;    // 2|E| / |V|
  double skills_per_edge = 0.0;  // |S| / |E|
};

struct IngestResult {
  ExpertGraph graph;
  std::vector<Community> communities;  // areas first, then conferences (parent = area)
  std::vector<NetworkStats> stats;     // whole graph, then one row per community
};

/// Builds the collaboration graph:
///   - experts: authors with >= min_pubs retained publications, named by the
///     exact author string, ordered by name;
///   - edges: pairs with >= min_joint joint publications, weighted by the
///     Jaccard distance 1 - |P_u ∩ P_v| / |P_u ∪ P_v| over retained
///     publication sets;
///   - skills: per-author stems with count >= min_skill_count;
///   - communities: one per research area and one per conference (members
///     hold >= 1 retained publication there).
IngestResult build_graph(const std::vector<PublicationRecord>& records, const VenueConfig& venues,
                         const IngestOptions& opts = {});

/// Statistics rows as CSV: name,nodes,edges,skills,avg_degree,skills_per_edge.
std::string stats_csv(const std::vector<NetworkStats>& stats);

}  // namespace teamform
