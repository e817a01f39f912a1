#pragma once

// Plain-text edge lists: one edge per line as two whitespace-separated
// tokens, `#` starts a comment line. If every token is a non-negative
// integer the tokens are used as node ids directly and a `# nodes N` comment
// may declare trailing isolated nodes; otherwise tokens are treated as labels
// and numbered in order of first appearance.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> names;  // names[id]
  std::unordered_map<std::string, NodeId> ids;

  NodeId id_of(const std::string& label) const {
    auto it = ids.find(label);
    if (it == ids.end()) throw InputError("unknown node label '" + label + "'");
    return it->second;
  }
  const std::string& name_of(NodeId v) const { return names[v]; }
};

namespace detail {

inline bool parse_id(const std::string& token, std::uint64_t& out) {
  if (token.empty()) return false;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  return tokens;
}

inline bool is_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace detail

inline LabeledGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::size_t declared_nodes = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (detail::is_comment(line)) {
      const auto tokens = detail::split_tokens(line);
      std::uint64_t declared = 0;
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "nodes" && detail::parse_id(tokens[2], declared)) {
        declared_nodes = declared;
      }
      continue;
    }
    auto tokens = detail::split_tokens(line);
    if (tokens.size() != 2) {
      throw InputError("edge list line " + std::to_string(line_no) + ": expected two tokens, got " +
                       std::to_string(tokens.size()));
    }
    raw.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
  }

  bool numeric = true;
  std::uint64_t max_id = 0;
  for (const auto& [u, v] : raw) {
    std::uint64_t a = 0, b = 0;
    if (!detail::parse_id(u, a) || !detail::parse_id(v, b) || a >= kNoComponent || b >= kNoComponent) {
      numeric = false;
      break;
    }
    max_id = std::max({max_id, a, b});
  }

  LabeledGraph out;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (numeric) {
    const std::size_t n = std::max<std::size_t>(raw.empty() ? 0 : max_id + 1, declared_nodes);
    for (NodeId v = 0; v < n; ++v) {
      out.names.push_back(std::to_string(v));
      out.ids.emplace(out.names.back(), v);
    }
    for (const auto& [u, v] : raw) {
      edges.push_back({static_cast<NodeId>(std::stoul(u)), static_cast<NodeId>(std::stoul(v))});
    }
  } else {
    auto intern = [&](const std::string& label) {
      auto [it, inserted] = out.ids.emplace(label, static_cast<NodeId>(out.names.size()));
      if (inserted) out.names.push_back(label);
      return it->second;
    };
    for (const auto& [u, v] : raw) {
      const NodeId a = intern(u);
      const NodeId b = intern(v);
      edges.push_back({a, b});
    }
  }
  out.graph = Graph::from_edges(out.names.size(), edges);
  return out;
}

inline LabeledGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

/// Plain numeric edge list of `g`, with a `# nodes` line so isolated nodes
/// survive a round trip.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list '" + path + "'");
  write_edge_list(out, g);
  if (!out) throw IoError("failed writing edge list '" + path + "'");
}

/// id <TAB> label table for graphs whose labels were remapped.
inline void save_id_map(const std::string& path, const LabeledGraph& lg) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write id map '" + path + "'");
  out << "id\tlabel\n";
  for (NodeId v = 0; v < lg.names.size(); ++v) out << v << '\t' << lg.names[v] << '\n';
}

inline LabeledGraph label_as_ids(Graph g) {
  LabeledGraph out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.names.push_back(std::to_string(v));
    out.ids.emplace(out.names.back(), v);
  }
  out.graph = std::move(g);
  return out;
}

}  // namespace shs
