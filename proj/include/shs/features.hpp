#pragma once

// Per-node features and SHS labels for the learning pipeline.
//
// Features come from the one-hop ego network, using the unweighted forms of
// Burt's measures: effective size = d - 2t/d with d the degree and t the
// number of edges among the neighbors; efficiency = effective size / d.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "shs/edge_list.hpp"
#include "shs/greedy.hpp"

namespace shs {

struct EgoFeatures {
  double effective_size = 0.0;
  double efficiency = 0.0;
  std::size_t degree = 0;
};

inline EgoFeatures burt_features(const Graph& g, NodeId i) {
  const auto nbrs = g.neighbors(i);
  EgoFeatures f;
  f.degree = nbrs.size();
  if (f.degree == 0) return f;
  std::size_t ties = 0;  // edges among neighbors
  for (NodeId u : nbrs) {
    for (NodeId w : g.neighbors(u)) {
      if (w > u && std::binary_search(nbrs.begin(), nbrs.end(), w)) ++ties;
    }
  }
  const double d = static_cast<double>(f.degree);
  f.effective_size = d - 2.0 * static_cast<double>(ties) / d;
  f.efficiency = f.effective_size / d;
  return f;
}

struct NodeFeatureRow {
  NodeId node;
  EgoFeatures features;
  bool shs;
};

// score: the k highest full-graph PC scores (ties by smallest id)
// greedy: the greedy residual selection
enum class LabelMode { Score, Greedy };

inline std::vector<NodeId> label_topk(const Graph& g, std::size_t k, LabelMode mode) {
  if (k > g.node_count()) {
    throw InputError("cannot label " + std::to_string(k) + " SHS nodes in a graph of " +
                     std::to_string(g.node_count()));
  }
  if (mode == LabelMode::Greedy) return k == 0 ? std::vector<NodeId>{} : greedy_topk(g, k).nodes();
  const ScoreTable scores = score_all(g);
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  order.resize(k);
  return order;
}

inline std::vector<NodeFeatureRow> training_rows(const Graph& g, std::size_t k, LabelMode mode) {
  std::vector<std::uint8_t> is_shs(g.node_count(), 0);
  for (NodeId v : label_topk(g, k, mode)) is_shs[v] = 1;
  std::vector<NodeFeatureRow> rows;
  rows.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) rows.push_back({v, burt_features(g, v), is_shs[v] != 0});
  return rows;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

/// CSV `node,effective_size,efficiency,degree,label` with labels SHS/normal.
inline void write_training_csv(std::ostream& out, const LabeledGraph& lg, std::span<const NodeFeatureRow> rows) {
  out << "node,effective_size,efficiency,degree,label\n";
  for (const auto& r : rows) {
    out << detail::csv_field(lg.name_of(r.node)) << ',' << detail::fixed6(r.features.effective_size) << ','
        << detail::fixed6(r.features.efficiency) << ',' << r.features.degree << ',' << (r.shs ? "SHS" : "normal")
        << '\n';
  }
}

inline void export_training_data(const LabeledGraph& lg, std::size_t k, const std::string& path,
                                 LabelMode mode = LabelMode::Score) {
  const auto rows = training_rows(lg.graph, k, mode);
  std::ofstream out(path);
  if (!out) throw IoError("cannot write training data to '" + path + "'");
  write_training_csv(out, lg, rows);
  if (!out) throw IoError("failed writing training data to '" + path + "'");
}

}  // namespace shs
