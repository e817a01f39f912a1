#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

enum class GraphFamily { PreferentialAttachment, ErdosRenyi };

struct GeneratorSpec {
  GraphFamily family = GraphFamily::PreferentialAttachment;
  std::size_t n = 0;
  double p = 0.0;  // ER only
  std::uint64_t seed = 0;
};

namespace detail {

// One edge per arriving node, endpoint drawn proportionally to degree. The
// endpoint list holds each node once per incident edge, so a uniform draw
// from it is a degree-weighted draw. Yields a tree with n - 1 edges.
inline Graph preferential_attachment(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * n);
  edges.push_back({0, 1});
  endpoints.push_back(0);
  endpoints.push_back(1);
  for (NodeId v = 2; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    const NodeId target = endpoints[pick(rng)];
    edges.push_back({target, v});
    endpoints.push_back(target);
    endpoints.push_back(v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace detail

/// Seeded synthetic graph; the same spec always yields the same edge set.
inline Graph generate(const GeneratorSpec& spec) {
  if (spec.n < 2) throw InputError("generator needs n >= 2, got " + std::to_string(spec.n));
  std::mt19937_64 rng(spec.seed);
  switch (spec.family) {
    case GraphFamily::PreferentialAttachment:
      return detail::preferential_attachment(spec.n, rng);
    case GraphFamily::ErdosRenyi:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw InputError("edge probability must lie in [0, 1], got " + std::to_string(spec.p));
      }
      return detail::erdos_renyi(spec.n, spec.p, rng);
  }
  throw InputError("unknown graph family");
}

inline GeneratorSpec pa_spec(std::size_t n, std::uint64_t seed) {
  return {GraphFamily::PreferentialAttachment, n, 0.0, seed};
}

inline GeneratorSpec er_spec(std::size_t n, double p, std::uint64_t seed) {
  return {GraphFamily::ErdosRenyi, n, p, seed};
}

}  // namespace shs
