#pragma once

// Brute-force reference implementations used only by tests. Works on raw
// (n, edge pairs) data with its own union-find and BFS, so it shares no code
// with the library beyond the input representation.

#include <cstdint>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

/// Connected unordered pairs with the nodes in `removed` (a 0/1 mask, may be
/// empty) deleted together with their edges.
inline std::uint64_t connected_pairs(std::size_t n, const Pairs& edges, const std::vector<char>& removed = {}) {
  auto gone = [&](std::uint32_t v) { return !removed.empty() && removed[v]; };
  UnionFind uf(n);
  for (auto [u, v] : edges) {
    if (!gone(u) && !gone(v)) uf.unite(u, v);
  }
  std::vector<std::uint64_t> size(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!gone(v)) ++size[uf.find(v)];
  }
  std::uint64_t total = 0;
  for (auto s : size) total += s * (s - (s > 0 ? 1 : 0)) / 2;
  return total;
}

/// Same count by BFS from every node and literal pair enumeration.
inline std::uint64_t connected_pairs_by_bfs(std::size_t n, const Pairs& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::uint64_t total = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::queue<std::uint32_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    for (std::uint32_t t = s + 1; t < n; ++t) total += seen[t];
  }
  return total;
}

inline std::uint64_t score(std::size_t n, const Pairs& edges, std::uint32_t i, std::vector<char> removed = {}) {
  if (removed.empty()) removed.assign(n, 0);
  const auto before = connected_pairs(n, edges, removed);
  removed[i] = 1;
  return before - connected_pairs(n, edges, removed);
}

inline std::vector<std::uint64_t> scores(std::size_t n, const Pairs& edges, const std::vector<char>& removed = {}) {
  std::vector<std::uint64_t> out(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!removed.empty() && removed[v]) continue;
    out[v] = score(n, edges, v, removed);
  }
  return out;
}

inline std::size_t component_count(std::size_t n, const Pairs& edges) {
  UnionFind uf(n);
  for (auto [u, v] : edges) uf.unite(u, v);
  std::size_t count = 0;
  for (std::uint32_t v = 0; v < n; ++v) count += uf.find(v) == v;
  return count;
}

inline Pairs without(const Pairs& edges, std::uint32_t a, std::uint32_t b) {
  Pairs out;
  for (auto e : edges) {
    if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) continue;
    out.push_back(e);
  }
  return out;
}

inline bool is_bridge(std::size_t n, const Pairs& edges, std::uint32_t a, std::uint32_t b) {
  return component_count(n, without(edges, a, b)) > component_count(n, edges);
}

inline bool connected(std::size_t n, const Pairs& edges, std::uint32_t a, std::uint32_t b) {
  UnionFind uf(n);
  for (auto [u, v] : edges) uf.unite(u, v);
  return uf.find(a) == uf.find(b);
}

inline std::uint64_t max_score(std::size_t n, const Pairs& edges) {
  std::uint64_t best = 0;
  for (auto s : scores(n, edges)) best = std::max(best, s);
  return best;
}

}  // namespace oracle
