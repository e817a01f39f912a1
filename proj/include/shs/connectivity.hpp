#pragma once

// Pairwise connectivity and per-node PC scores.
//
// P(G) counts the unordered node pairs joined by a path. The PC score of a
// node i is c(i) = P(G) - P(G \ {i}). Two routes are provided: the literal
// difference (pc_score_definitional) and the component-local form
//
//   c(i) = C(|C(i)|, 2) - sum_j C(|C_j|, 2)
//
// where C_1..C_r are the components of C(i) with i removed (pc_score_fast).

#include <cstdint>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

using PairCount = std::uint64_t;

// C(x, 2); zero for x < 2
constexpr PairCount choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

using ScoreTable = std::vector<PairCount>;

template <GraphView G>
bool pairwise_connected(const G& g, NodeId i, NodeId j) {
  if (i == j) throw InputError("pairwise connectivity needs two distinct nodes, got " + std::to_string(i) + " twice");
  if (!g.is_active(i) || !g.is_active(j)) return false;
  Workspace ws;
  ws.begin(g.node_count());
  ws.visit(i);
  return expand_from(g, i, ws, [&](NodeId w) { return w == j; });
}

inline PairCount total_pairwise_connectivity(const ComponentLabeling& labels) {
  PairCount total = 0;
  for (std::size_t size : labels.component_sizes) total += choose2(size);
  return total;
}

template <GraphView G>
PairCount total_pairwise_connectivity(const G& g) {
  return total_pairwise_connectivity(connected_components(g));
}

/// c(i) computed literally as P(G) - P(G \ {i}) over the whole graph.
inline PairCount pc_score_definitional(const Residual& g, NodeId i) {
  if (!g.is_active(i)) return 0;
  const PairCount before = total_pairwise_connectivity(g);
  Residual without = g;
  without.remove(i);
  return before - total_pairwise_connectivity(without);
}

inline PairCount pc_score_definitional(const Graph& g, NodeId i) {
  return pc_score_definitional(Residual(g), i);
}

/// c(i) from the component-local formula. `labels` must be current for `g`;
/// a stale labeling is not detected.
template <GraphView G>
PairCount pc_score_fast(const G& g, const ComponentLabeling& labels, NodeId i, Workspace& ws) {
  if (!g.is_active(i)) return 0;
  const std::size_t component_size = labels.size_of(i);
  std::size_t unvisited = component_size - 1;
  PairCount split = 0;

  ws.begin(g.node_count());
  ws.visit(i);
  const auto nbrs = g.neighbors(i);
  for (std::size_t idx = 0; idx < nbrs.size() && unvisited > 0; ++idx) {
    const NodeId u = nbrs[idx];
    if (!g.is_active(u) || !ws.visit(u)) continue;
    std::size_t piece = 1;
    if (idx + 1 == nbrs.size()) {
      // every earlier piece is done, so what is left belongs to this one
      piece = unvisited;
    } else {
      expand_from(g, u, ws, [&](NodeId) {
        ++piece;
        return false;
      });
    }
    split += choose2(piece);
    unvisited -= piece;
  }
#ifndef NDEBUG
  if (unvisited != 0) throw std::logic_error("pc_score_fast: component labeling is stale");
#endif
  return choose2(component_size) - split;
}

template <GraphView G>
PairCount pc_score_fast(const G& g, const ComponentLabeling& labels, NodeId i) {
  Workspace ws;
  return pc_score_fast(g, labels, i, ws);
}

/// Scores every active node: one components pass, then the fast formula per
/// node. Masked nodes score 0.
template <GraphView G>
ScoreTable score_all(const G& g, Workspace& ws) {
  const auto labels = connected_components(g, ws);
  ScoreTable scores(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.is_active(v)) scores[v] = pc_score_fast(g, labels, v, ws);
  }
  return scores;
}

template <GraphView G>
ScoreTable score_all(const G& g) {
  Workspace ws;
  return score_all(g, ws);
}

}  // namespace shs
