#include "teamform/graph_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace teamform {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LineReader {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line_start = 0;

  bool next(std::string_view* line) {
    if (pos >= text.size()) return false;
    line_start = pos;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      *line = std::string_view(text).substr(pos);
      pos = text.size();
    } else {
      *line = std::string_view(text).substr(pos, nl - pos);
      pos = nl + 1;
    }
    return true;
  }
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    if (at == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

std::uint64_t parse_uint(std::string_view s, std::size_t offset, const std::string& what) {
  if (s.empty()) throw ParseError(offset, what + ": empty field");
  std::uint64_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(offset, what + ": not a non-negative integer: '" + std::string(s) + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 0xFFFFFFFFull) throw ParseError(offset, what + ": id too large");
  }
  return value;
}

double parse_weight(std::string_view s, std::size_t offset) {
  std::string buf(s);
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE) {
    throw ParseError(offset, "malformed edge weight '" + buf + "'");
  }
  return v;
}

}  // namespace

std::string format_weight(double w) {
  if (is_unreachable(w)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", w);
  return buf;
}

ExpertGraph load_graph(const std::string& prefix) {
  const std::string nodes_text = read_file(prefix + ".nodes");
  const std::string edges_text = read_file(prefix + ".edges");
  const std::string skills_text = read_file(prefix + ".skills");

  // Nodes: ids must form 0..n-1 (any order); names kept verbatim.
  std::vector<std::pair<std::uint64_t, std::string>> nodes;
  {
    LineReader lr{nodes_text};
    std::string_view line;
    while (lr.next(&line)) {
      if (line.empty()) continue;
      auto fields = split(line, '\t');
      if (fields.size() != 2) throw ParseError(lr.line_start, "nodes: expected 'id<TAB>name'");
      nodes.emplace_back(parse_uint(fields[0], lr.line_start, "nodes"), std::string(fields[1]));
    }
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].first != i) {
      throw ParseError(0, "nodes: ids must be exactly 0.." + std::to_string(nodes.size() - 1) +
                              " (missing or duplicate id " + std::to_string(i) + ")");
    }
  }

  // Skills, keyed by node id.
  std::vector<std::vector<std::string>> skills(nodes.size());
  {
    LineReader lr{skills_text};
    std::string_view line;
    while (lr.next(&line)) {
      if (line.empty()) continue;
      auto fields = split(line, '\t');
      if (fields.size() != 2) throw ParseError(lr.line_start, "skills: expected 'id<TAB>tokens'");
      std::uint64_t id = parse_uint(fields[0], lr.line_start, "skills");
      if (id >= nodes.size()) throw ParseError(lr.line_start, "skills: unknown node id " + std::to_string(id));
      for (std::string_view tok : split(fields[1], ' ')) {
        if (tok.empty()) continue;
        std::string t(tok);
        if (!valid_skill_token(t)) throw ParseError(lr.line_start, "skills: invalid token '" + t + "'");
        skills[id].push_back(std::move(t));
      }
    }
  }

  ExpertGraphBuilder builder;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    builder.add_expert(std::move(nodes[i].second), std::move(skills[i]));
  }

  {
    LineReader lr{edges_text};
    std::string_view line;
    while (lr.next(&line)) {
      if (line.empty()) continue;
      auto fields = split(line, '\t');
      if (fields.size() != 3) throw ParseError(lr.line_start, "edges: expected 'id<TAB>id<TAB>weight'");
      std::uint64_t u = parse_uint(fields[0], lr.line_start, "edges");
      std::uint64_t v = parse_uint(fields[1], lr.line_start, "edges");
      if (u >= nodes.size() || v >= nodes.size()) {
        throw ParseError(lr.line_start, "edges: endpoint out of range");
      }
      double w = parse_weight(fields[2], lr.line_start);
      try {
        builder.add_edge(static_cast<ExpertId>(u), static_cast<ExpertId>(v), w);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lr.line_start, std::string("edges: ") + e.what());
      }
    }
  }

  try {
    return builder.build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("graph: ") + e.what());
  }
}

void save_graph(const ExpertGraph& g, const std::string& prefix) {
  {
    std::ofstream out(prefix + ".nodes", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + prefix + ".nodes'");
    for (ExpertId v = 0; v < g.node_count(); ++v) {
      out << v << '\t' << g.name(v) << '\n';
    }
  }
  {
    std::ofstream out(prefix + ".edges", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + prefix + ".edges'");
    for (ExpertId v = 0; v < g.node_count(); ++v) {
      for (const Neighbor& nb : g.neighbors(v)) {
        if (nb.to > v) out << v << '\t' << nb.to << '\t' << format_weight(nb.weight) << '\n';
      }
    }
  }
  {
    std::ofstream out(prefix + ".skills", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + prefix + ".skills'");
    for (ExpertId v = 0; v < g.node_count(); ++v) {
      out << v << '\t';
      bool first = true;
      for (SkillId s : g.expert_skill_ids(v)) {
        if (!first) out << ' ';
        out << g.skill_name(s);
        first = false;
      }
      out << '\n';
    }
  }
}

std::vector<Community> load_communities(const std::string& path, const ExpertGraph& g) {
  const std::string text = read_file(path);
  std::vector<Community> out;
  LineReader lr{text};
  std::string_view line;
  while (lr.next(&line)) {
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(lr.line_start, "communities: expected 'name<TAB>parent<TAB>members'");
    }
    Community c;
    c.name = std::string(fields[0]);
    if (fields[1] != "-") c.parent = std::string(fields[1]);
    for (std::string_view part : split(fields[2], ',')) {
      if (part.empty()) continue;
      std::uint64_t id = parse_uint(part, lr.line_start, "communities");
      if (id >= g.node_count()) {
        throw ParseError(lr.line_start, "communities: unknown node id " + std::to_string(id));
      }
      c.members.push_back(static_cast<ExpertId>(id));
    }
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    out.push_back(std::move(c));
  }
  try {
    validate_communities(g, out);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("communities: ") + e.what());
  }
  return out;
}

void save_communities(const std::vector<Community>& communities, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (const auto& c : communities) {
    out << c.name << '\t' << (c.parent.empty() ? "-" : c.parent) << '\t';
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i) out << ',';
      out << c.members[i];
    }
    out << '\n';
  }
}

}  // namespace teamform
