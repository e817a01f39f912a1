#pragma once

#include <span>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

/// Nodes v of root's component such that some pair (x, y) in `pairs`, with
/// v not in {x, y}, is disconnected once v is removed. Pairs must lie in
/// root's component. One low-link DFS, then an ancestor walk per pair.
///
/// When a deletion leaves a component's node set intact, these are exactly
/// the nodes whose PC score changes: every other node still sees each
/// deleted pair joined by some path.
inline std::vector<NodeId> separating_vertices(const Graph& g, NodeId root, std::span<const Edge> pairs,
                                               Workspace& ws) {
  constexpr std::uint32_t kNone = kNoComponent;
  const std::size_t n = g.node_count();
  // only read for nodes reached from root
  std::vector<std::uint32_t> disc(n), low(n), last(n), parent(n), next_edge(n);

  ws.begin(n);
  auto& stack = ws.stack();
  std::uint32_t clock = 0;
  ws.visit(root);
  disc[root] = low[root] = clock++;
  parent[root] = kNone;
  next_edge[root] = 0;
  stack.push_back(root);
  while (!stack.empty()) {
    const NodeId u = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next_edge[u] < nbrs.size()) {
      const NodeId w = nbrs[next_edge[u]++];
      if (ws.visit(w)) {
        disc[w] = low[w] = clock++;
        parent[w] = u;
        next_edge[w] = 0;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    last[u] = clock - 1;
    stack.pop_back();
    if (parent[u] != kNone) low[parent[u]] = std::min(low[parent[u]], low[u]);
  }

  auto in_subtree = [&](NodeId x, NodeId top) { return disc[top] <= disc[x] && disc[x] <= last[top]; };

  std::vector<NodeId> out;
  std::vector<std::uint8_t> taken;
  auto take = [&](NodeId v) {
    if (taken.empty()) taken.assign(n, 0);
    if (!taken[v]) {
      taken[v] = 1;
      out.push_back(v);
    }
  };
  // v cuts x off from y when x sits in a child subtree that v separates and
  // y does not
  auto walk = [&](NodeId x, NodeId y) {
    NodeId child = x;
    for (NodeId v = parent[x]; v != kNone; child = v, v = parent[v]) {
      if (v != y && low[child] >= disc[v] && !in_subtree(y, child)) take(v);
    }
  };
  for (const Edge& e : pairs) {
    walk(e.u, e.v);
    walk(e.v, e.u);
  }
  return out;
}

/// For every node v reachable from root: how many nodes lose their path to
/// root when v is removed, counting v itself. root maps to its component size.
/// Returned as (node, count) pairs in DFS preorder.
inline std::vector<std::pair<NodeId, std::size_t>> detached_counts(const Graph& g, NodeId root, Workspace& ws) {
  constexpr std::uint32_t kNone = kNoComponent;
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> disc(n), low(n), parent(n), next_edge(n), subtree(n);
  std::vector<std::size_t> cut_below(n);
  std::vector<NodeId> order;

  ws.begin(n);
  auto& stack = ws.stack();
  std::uint32_t clock = 0;
  ws.visit(root);
  disc[root] = low[root] = clock++;
  parent[root] = kNone;
  next_edge[root] = 0;
  subtree[root] = 1;
  cut_below[root] = 0;
  order.push_back(root);
  stack.push_back(root);
  while (!stack.empty()) {
    const NodeId u = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next_edge[u] < nbrs.size()) {
      const NodeId w = nbrs[next_edge[u]++];
      if (ws.visit(w)) {
        disc[w] = low[w] = clock++;
        parent[w] = u;
        next_edge[w] = 0;
        subtree[w] = 1;
        cut_below[w] = 0;
        order.push_back(w);
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const NodeId p = parent[u];
    if (p == kNone) continue;
    low[p] = std::min(low[p], low[u]);
    subtree[p] += subtree[u];
    if (low[u] >= disc[p]) cut_below[p] += subtree[u];
  }

  std::vector<std::pair<NodeId, std::size_t>> out;
  out.reserve(order.size());
  for (NodeId v : order) out.emplace_back(v, 1 + cut_below[v]);
  return out;
}

}  // namespace shs
