#pragma once

// Update streams: one event per line, `- u v` deletes and `+ u v` adds an
// edge. Node tokens are resolved through the graph's label table.

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "shs/edge_list.hpp"

namespace shs {

enum class UpdateOp { Delete, Add };

struct UpdateEvent {
  UpdateOp op;
  Edge edge;
  std::size_t line;  // 1-based line in the stream
};

inline std::string describe(const UpdateEvent& e, const LabeledGraph& lg) {
  return std::string(e.op == UpdateOp::Delete ? "-" : "+") + " " + lg.name_of(e.edge.u) + " " + lg.name_of(e.edge.v);
}

inline std::vector<UpdateEvent> read_update_stream(std::istream& in, const LabeledGraph& lg) {
  std::vector<UpdateEvent> events;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (detail::is_comment(line)) continue;
    const auto tokens = detail::split_tokens(line);
    const std::string where = "update stream line " + std::to_string(line_no);
    if (tokens.size() != 3 || (tokens[0] != "-" && tokens[0] != "+")) {
      throw InputError(where + ": expected '- u v' or '+ u v'");
    }
    UpdateEvent ev{tokens[0] == "-" ? UpdateOp::Delete : UpdateOp::Add, {}, line_no};
    try {
      ev.edge = {lg.id_of(tokens[1]), lg.id_of(tokens[2])};
    } catch (const InputError& err) {
      throw InputError(where + ": " + err.what());
    }
    events.push_back(ev);
  }
  return events;
}

inline std::vector<UpdateEvent> load_update_stream(const std::string& path, const LabeledGraph& lg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open update stream '" + path + "'");
  return read_update_stream(in, lg);
}

/// Applies one event to a plain graph, prefixing errors with the line.
inline void apply_event(Graph& g, const UpdateEvent& e) {
  try {
    if (e.op == UpdateOp::Delete) {
      g.delete_edge(e.edge.u, e.edge.v);
    } else {
      g.add_edge(e.edge.u, e.edge.v);
    }
  } catch (const UpdateError& err) {
    throw UpdateError("update stream line " + std::to_string(e.line) + ": " + err.what());
  }
}

}  // namespace shs
