#pragma once

#include <initializer_list>
#include <vector>

#include "oracle.hpp"
#include "shs/graph.hpp"

namespace testing_support {

inline shs::Graph make_graph(std::size_t n, std::initializer_list<shs::Edge> edges) {
  std::vector<shs::Edge> list(edges);
  return shs::Graph::from_edges(n, list);
}

inline shs::Graph path(std::size_t n) {
  std::vector<shs::Edge> edges;
  for (shs::NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return shs::Graph::from_edges(n, edges);
}

inline shs::Graph star(std::size_t leaves) {
  std::vector<shs::Edge> edges;
  for (shs::NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return shs::Graph::from_edges(leaves + 1, edges);
}

inline oracle::Pairs pairs_of(const shs::Graph& g) {
  oracle::Pairs out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline std::vector<std::uint64_t> oracle_scores(const shs::Graph& g) {
  return oracle::scores(g.node_count(), pairs_of(g));
}

}  // namespace testing_support
