#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shs/errors.hpp"

namespace shs {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Undirected simple graph over dense ids 0..n-1.
///
/// Neighbor lists are kept sorted, so `has_edge` is a binary search and two
/// graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  /// Builds a graph from an arbitrary pair list. Self-loops and repeated
  /// pairs are dropped; an endpoint outside [0, n) throws InputError.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges) {
    Graph g(node_count);
    for (const Edge& e : edges) {
      if (e.u >= node_count || e.v >= node_count) {
        throw InputError("edge " + to_string(e) + " has an endpoint outside [0, " +
                         std::to_string(node_count) + ")");
      }
    }
    for (const Edge& e : edges) {
      if (e.u == e.v) continue;
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      degree_sum += nbrs.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
  }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  // every node of a plain graph is present; see Residual for masked views
  bool is_active(NodeId) const { return true; }

  bool contains(NodeId v) const { return v < adjacency_.size(); }

  bool has_edge(NodeId a, NodeId b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& shorter = degree(a) <= degree(b) ? adjacency_[a] : adjacency_[b];
    const NodeId other = degree(a) <= degree(b) ? b : a;
    return std::binary_search(shorter.begin(), shorter.end(), other);
  }

  void add_edge(NodeId a, NodeId b) {
    if (!contains(a) || !contains(b)) {
      throw UpdateError("cannot add " + to_string({a, b}) + ": node out of range");
    }
    if (a == b) throw UpdateError("cannot add self-loop " + to_string({a, b}));
    if (has_edge(a, b)) throw UpdateError("edge " + to_string({a, b}) + " already exists");
    insert_sorted(adjacency_[a], b);
    insert_sorted(adjacency_[b], a);
    ++edge_count_;
  }

  void delete_edge(NodeId a, NodeId b) {
    if (!has_edge(a, b)) throw UpdateError("edge " + to_string({a, b}) + " does not exist");
    erase_sorted(adjacency_[a], b);
    erase_sorted(adjacency_[b], a);
    --edge_count_;
  }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
      for (NodeId v : adjacency_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static void insert_sorted(std::vector<NodeId>& list, NodeId v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }
  static void erase_sorted(std::vector<NodeId>& list, NodeId v) {
    list.erase(std::lower_bound(list.begin(), list.end(), v));
  }

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A graph with some nodes masked out. Removing a node hides it and all of
/// its incident edges without touching the underlying adjacency.
class Residual {
 public:
  explicit Residual(const Graph& g) : graph_(&g), removed_(g.node_count(), 0) {}

  std::size_t node_count() const { return graph_->node_count(); }
  std::size_t active_count() const { return graph_->node_count() - removed_count_; }
  std::span<const NodeId> neighbors(NodeId v) const { return graph_->neighbors(v); }
  bool is_active(NodeId v) const { return removed_[v] == 0; }
  const Graph& base() const { return *graph_; }

  void remove(NodeId v) {
    if (removed_[v] == 0) {
      removed_[v] = 1;
      ++removed_count_;
    }
  }
  void restore(NodeId v) {
    if (removed_[v] != 0) {
      removed_[v] = 0;
      --removed_count_;
    }
  }

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> removed_;
  std::size_t removed_count_ = 0;
};

template <class G>
concept GraphView = requires(const G& g, NodeId v) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const NodeId>>;
  { g.is_active(v) } -> std::convertible_to<bool>;
};

/// Reusable scratch space for traversals: an epoch-stamped visited array
/// (O(1) reset) and an explicit DFS stack.
class Workspace {
 public:
  void begin(std::size_t node_count) {
    if (stamp_.size() < node_count) stamp_.resize(node_count, 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    stack_.clear();
  }
  bool visited(NodeId v) const { return stamp_[v] == epoch_; }
  // returns true when v was not yet visited in this epoch
  bool visit(NodeId v) {
    if (stamp_[v] == epoch_) return false;
    stamp_[v] = epoch_;
    return true;
  }
  std::vector<NodeId>& stack() { return stack_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> stack_;
};

/// DFS over active nodes starting at `source` (which must already be marked
/// visited in `ws`). Calls `on_visit` for every newly reached node, source
/// excluded. Stops early once `on_visit` returns true.
template <GraphView G, class OnVisit>
bool expand_from(const G& g, NodeId source, Workspace& ws, OnVisit&& on_visit) {
  auto& stack = ws.stack();
  stack.clear();
  stack.push_back(source);
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(u)) {
      if (!g.is_active(w) || !ws.visit(w)) continue;
      if (on_visit(w)) return true;
      stack.push_back(w);
    }
  }
  return false;
}

/// Nodes reachable from `source` (inclusive) among active nodes.
template <GraphView G>
std::vector<NodeId> reachable_from(const G& g, NodeId source, Workspace& ws) {
  ws.begin(g.node_count());
  std::vector<NodeId> out{source};
  ws.visit(source);
  expand_from(g, source, ws, [&](NodeId w) {
    out.push_back(w);
    return false;
  });
  return out;
}

inline constexpr std::uint32_t kNoComponent = std::numeric_limits<std::uint32_t>::max();

struct ComponentLabeling {
  std::vector<std::uint32_t> component_of;  // kNoComponent for masked nodes
  std::vector<std::size_t> component_sizes;

  std::size_t size_of(NodeId v) const { return component_sizes[component_of[v]]; }
  bool same_component(NodeId a, NodeId b) const {
    return component_of[a] != kNoComponent && component_of[a] == component_of[b];
  }
};

/// Labels the components of the active subgraph; ids follow the smallest node
/// id in each component.
template <GraphView G>
ComponentLabeling connected_components(const G& g, Workspace& ws) {
  const std::size_t n = g.node_count();
  ComponentLabeling labels;
  labels.component_of.assign(n, kNoComponent);
  ws.begin(n);
  for (NodeId s = 0; s < n; ++s) {
    if (!g.is_active(s) || !ws.visit(s)) continue;
    const auto id = static_cast<std::uint32_t>(labels.component_sizes.size());
    std::size_t size = 1;
    labels.component_of[s] = id;
    expand_from(g, s, ws, [&](NodeId w) {
      labels.component_of[w] = id;
      ++size;
      return false;
    });
    labels.component_sizes.push_back(size);
  }
  return labels;
}

template <GraphView G>
ComponentLabeling connected_components(const G& g) {
  Workspace ws;
  return connected_components(g, ws);
}

enum class EdgeKind { Bridge, NonBridge };

inline const char* to_string(EdgeKind kind) {
  return kind == EdgeKind::Bridge ? "bridge" : "non-bridge";
}

/// Probes whether (a, b) lies on a cycle: DFS from a with the edge itself
/// skipped, stopping as soon as b is reached. The graph is not modified.
inline EdgeKind classify_edge(const Graph& g, NodeId a, NodeId b, Workspace& ws) {
  if (!g.has_edge(a, b)) {
    throw UpdateError("cannot classify " + to_string(Edge{a, b}) + ": edge does not exist");
  }
  ws.begin(g.node_count());
  ws.visit(a);
  auto& stack = ws.stack();
  stack.push_back(a);
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(u)) {
      if (u == a && w == b) continue;
      if (!ws.visit(w)) continue;
      if (w == b) return EdgeKind::NonBridge;
      stack.push_back(w);
    }
  }
  return EdgeKind::Bridge;
}

inline EdgeKind classify_edge(const Graph& g, NodeId a, NodeId b) {
  Workspace ws;
  return classify_edge(g, a, b, ws);
}

}  // namespace shs
