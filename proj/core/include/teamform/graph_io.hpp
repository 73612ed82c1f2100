#pragma once

#include <string>
#include <vector>

#include "teamform/expert_graph.hpp"

namespace teamform {

/// On-disk graph layout: three UTF-8, LF-terminated, tab-separated files
/// sharing one path prefix.
///
///   <prefix>.nodes   id <TAB> name                (ids must be 0..n-1)
///   <prefix>.edges   id <TAB> id <TAB> weight     (one line per undirected edge)
///   <prefix>.skills  id <TAB> skill skill ...     (space-separated tokens; a
///                                                  line may list no tokens)
///
/// Communities live in their own file:
///   <name> <TAB> <parent-or-"-"> <TAB> id,id,...  (parents listed first)
///
/// Loading validates every structural rule (dense ids, endpoint existence, no
/// parallel edges, skill-token lexical form, community containment) and
/// throws ParseError with a byte offset on malformed input. Saving writes
/// weights with nine significant digits, nodes and edges in ascending id
/// order, so identical graphs serialize to identical bytes.

ExpertGraph load_graph(const std::string& prefix);
void save_graph(const ExpertGraph& g, const std::string& prefix);

std::vector<Community> load_communities(const std::string& path, const ExpertGraph& g);
void save_communities(const std::vector<Community>& communities, const std::string& path);

/// Formats a double the way every serializer in this library does: shortest
/// form with up to nine significant digits ("4", "0.571428571", "inf").
std::string format_weight(double w);

}  // namespace teamform
