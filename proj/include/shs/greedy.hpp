#pragma once

// Greedy Top-k discovery on a static graph. Each round scores every node of
// the residual graph, takes the argmax (smallest id on ties) and masks it out.
// This is also the recomputation baseline the tracker is benchmarked against,
// so it deliberately rescores everything every round.

#include <span>

#include "shs/connectivity.hpp"
#include "shs/topk.hpp"

namespace shs {

inline TopKSet greedy_topk(const Graph& g, std::size_t k, Workspace& ws) {
  if (k == 0) throw InputError("k must be at least 1");
  TopKSet result(k);
  Residual residual(g);
  const std::size_t rounds = std::min(k, g.node_count());
  for (std::size_t round = 0; round < rounds; ++round) {
    const auto labels = connected_components(residual, ws);
    NodeId best = 0;
    PairCount best_score = 0;
    bool found = false;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!residual.is_active(v)) continue;
      const PairCount score = pc_score_fast(residual, labels, v, ws);
      if (!found || score > best_score) {
        best = v;
        best_score = score;
        found = true;
      }
    }
    result.insert(best, best_score);
    residual.remove(best);
  }
  return result;
}

/// Runs the greedy selection; when k exceeds the node count the result holds
/// every node and `result.size() < result.k()`.
inline TopKSet greedy_topk(const Graph& g, std::size_t k) {
  Workspace ws;
  return greedy_topk(g, k, ws);
}

/// P(G \ S): pairs still connected once every node in `removed` is masked.
inline PairCount objective(const Graph& g, std::span<const NodeId> removed) {
  Residual residual(g);
  for (NodeId v : removed) {
    if (v >= g.node_count()) throw InputError("node " + std::to_string(v) + " is not in the graph");
    residual.remove(v);
  }
  return total_pairwise_connectivity(residual);
}

inline PairCount objective(const Graph& g, const TopKSet& set) {
  const auto nodes = set.nodes();
  return objective(g, std::span<const NodeId>(nodes));
}

}  // namespace shs
