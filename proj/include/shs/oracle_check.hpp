#pragma once

// Self-check of the fast score against the definitional one on seeded
// random graphs.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shs/connectivity.hpp"
#include "shs/generators.hpp"

namespace shs {

struct OracleCheckConfig {
  std::size_t graphs = 100;
  std::size_t max_n = 64;
  std::uint64_t seed = 1;
};

struct OracleMismatch {
  std::size_t graph;
  NodeId node;
  PairCount fast;
  PairCount definitional;
};

struct OracleCheckResult {
  std::size_t graphs = 0;
  std::size_t nodes_checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<OracleMismatch> mismatches;  // first few only
  double elapsed_ms = 0;

  bool ok() const { return failed == 0; }
};

/// Spec of the i-th check graph: ER with n in [2, max_n] and a density
/// spread from sparse forests to dense blobs.
inline GeneratorSpec oracle_graph_spec(std::uint64_t seed, std::size_t index, std::size_t max_n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + index);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(max_n, 2))(rng);
  const double mean_degree = std::uniform_real_distribution<double>(0.3, 4.0)(rng);
  const double p = std::min(1.0, mean_degree / static_cast<double>(n - 1));
  return er_spec(n, p, rng());
}

inline OracleCheckResult run_oracle_check(const OracleCheckConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  OracleCheckResult out;
  Workspace ws;
  for (std::size_t i = 0; i < config.graphs; ++i) {
    const Graph g = generate(oracle_graph_spec(config.seed, i, config.max_n));
    const auto labels = connected_components(g, ws);
    ++out.graphs;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const PairCount fast = pc_score_fast(g, labels, v, ws);
      const PairCount slow = pc_score_definitional(g, v);
      ++out.nodes_checked;
      if (fast == slow) {
        ++out.passed;
      } else {
        ++out.failed;
        if (out.mismatches.size() < 10) out.mismatches.push_back({i, v, fast, slow});
      }
    }
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace shs
