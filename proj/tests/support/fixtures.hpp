#pragma once

#include <stdexcept>
#include <string>

#include "teamform/expert_graph.hpp"
#include "teamform/graph_io.hpp"

namespace teamform::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TEAMFORM_FIXTURE_DIR) + "/" + name;
}

/// The 20-node hand-checked graph most golden tests run against. Experts are
/// named "A".."T" (id 0 = A) and hold skills from {a,b,c,d,e}.
inline ExpertGraph load_toy() { return load_graph(fixture_path("toy")); }

inline ExpertId id_of(const ExpertGraph& g, const std::string& name) {
  for (ExpertId v = 0; v < g.node_count(); ++v) {
    if (g.name(v) == name) return v;
  }
  throw std::invalid_argument("no expert named '" + name + "'");
}

}  // namespace teamform::testing
