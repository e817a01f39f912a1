#pragma once

// Paired benchmark of incremental tracking against static greedy
// recomputation. Both contenders replay the same seeded deletion sequence;
// only the algorithm call is inside the timed region.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "shs/edge_list.hpp"
#include "shs/tracker.hpp"

namespace shs {

enum class BenchMode { Single, Batch };

struct BenchConfig {
  std::string dataset = "graph";
  std::size_t k = 1;
  std::size_t deletions = 50;
  std::uint64_t seed = 1;
  BenchMode mode = BenchMode::Single;
  TrackerOptions tracker;
};

struct BenchRow {
  Edge edge;
  EdgeKind kind;
  double static_us = 0;
  double tracking_us = 0;
  double speedup = 0;
  std::int64_t objective_gap = 0;  // P(G' \ tracked) - P(G' \ greedy)
};

struct KindSplit {
  std::size_t count = 0;
  double mean_static_us = 0;
  double mean_tracking_us = 0;
  double time_ratio = 0;  // mean static / mean tracking
};

struct BatchSummary {
  std::size_t edges = 0;
  std::size_t bridges = 0;  // classified one at a time in batch order
  double static_us = 0;
  double tracking_us = 0;
  double sequential_us = 0;  // the same deletions through delete_edge
  double speedup = 0;
  double speedup_vs_sequential = 0;
  std::int64_t objective_gap = 0;
};

struct BenchReport {
  std::string dataset;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t k = 0;
  std::size_t deletions = 0;
  std::uint64_t seed = 0;
  BenchMode mode = BenchMode::Single;
  bool literal_rescoring = false;
  std::vector<BenchRow> rows;
  double gmean_speedup = 0;
  double min_speedup = 0;
  double max_speedup = 0;
  KindSplit bridge;
  KindSplit non_bridge;
  std::optional<BatchSummary> batch;
  // expected tracking speedup when every deletion is a bridge
  static constexpr double kBridgeOnlyTheory = 1.6;

  double bridge_fraction() const {
    const std::size_t total = bridge.count + non_bridge.count;
    return total == 0 ? 0.0 : static_cast<double>(bridge.count) / static_cast<double>(total);
  }
};

/// `count` distinct edges of g in a seeded random order.
inline std::vector<Edge> sample_deletions(const Graph& g, std::size_t count, std::uint64_t seed) {
  if (count > g.edge_count()) {
    throw InputError("cannot delete " + std::to_string(count) + " edges from a graph with " +
                     std::to_string(g.edge_count()));
  }
  std::vector<Edge> edges = g.edges();
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates; std::shuffle's draw pattern is library-specific
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, edges.size() - 1);
    std::swap(edges[i], edges[pick(rng)]);
  }
  edges.resize(count);
  return edges;
}

namespace detail {

template <class F>
double time_us(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count();
}

inline KindSplit summarize(const std::vector<BenchRow>& rows, EdgeKind kind) {
  KindSplit s;
  for (const auto& r : rows) {
    if (r.kind != kind) continue;
    ++s.count;
    s.mean_static_us += r.static_us;
    s.mean_tracking_us += r.tracking_us;
  }
  if (s.count > 0) {
    s.mean_static_us /= static_cast<double>(s.count);
    s.mean_tracking_us /= static_cast<double>(s.count);
    s.time_ratio = s.mean_tracking_us > 0 ? s.mean_static_us / s.mean_tracking_us : 0;
  }
  return s;
}

inline std::int64_t gap(const Graph& g, const TopKSet& tracked, const TopKSet& baseline) {
  return static_cast<std::int64_t>(objective(g, tracked)) - static_cast<std::int64_t>(objective(g, baseline));
}

}  // namespace detail

inline BenchReport run_bench(const Graph& g, const BenchConfig& config) {
  BenchReport report;
  report.dataset = config.dataset;
  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.k = config.k;
  report.deletions = config.deletions;
  report.seed = config.seed;
  report.mode = config.mode;
  report.literal_rescoring = config.tracker.literal_rescoring;

  const std::vector<Edge> plan = sample_deletions(g, config.deletions, config.seed);
  Workspace ws;
  (void)greedy_topk(g, config.k, ws);  // warm-up, discarded

  if (config.mode == BenchMode::Single) {
    Tracker tracker(g, config.k, config.tracker);
    Graph current = g;
    double log_sum = 0;
    for (const Edge& e : plan) {
      BenchRow row{e, classify_edge(current, e.u, e.v, ws)};
      current.delete_edge(e.u, e.v);
      TopKSet baseline;
      row.static_us = detail::time_us([&] { baseline = greedy_topk(current, config.k, ws); });
      row.tracking_us = detail::time_us([&] { tracker.delete_edge(e.u, e.v); });
      row.speedup = row.static_us / std::max(row.tracking_us, 1e-3);
      row.objective_gap = detail::gap(current, tracker.topk(), baseline);
      log_sum += std::log(row.speedup);
      report.rows.push_back(row);
    }
    if (!report.rows.empty()) {
      report.gmean_speedup = std::exp(log_sum / static_cast<double>(report.rows.size()));
      auto [lo, hi] = std::minmax_element(report.rows.begin(), report.rows.end(),
                                          [](const BenchRow& a, const BenchRow& b) { return a.speedup < b.speedup; });
      report.min_speedup = lo->speedup;
      report.max_speedup = hi->speedup;
    }
    report.bridge = detail::summarize(report.rows, EdgeKind::Bridge);
    report.non_bridge = detail::summarize(report.rows, EdgeKind::NonBridge);
    return report;
  }

  BatchSummary batch;
  batch.edges = plan.size();
  Graph after = g;
  for (const Edge& e : plan) {
    if (classify_edge(after, e.u, e.v, ws) == EdgeKind::Bridge) ++batch.bridges;
    after.delete_edge(e.u, e.v);
  }
  TopKSet baseline;
  batch.static_us = detail::time_us([&] { baseline = greedy_topk(after, config.k, ws); });

  Tracker batched(g, config.k, config.tracker);
  batch.tracking_us = detail::time_us([&] { batched.delete_edges(plan); });

  Tracker sequential(g, config.k, config.tracker);
  batch.sequential_us = detail::time_us([&] {
    for (const Edge& e : plan) sequential.delete_edge(e.u, e.v);
  });

  batch.speedup = batch.static_us / std::max(batch.tracking_us, 1e-3);
  batch.speedup_vs_sequential = batch.sequential_us / std::max(batch.tracking_us, 1e-3);
  batch.objective_gap = detail::gap(after, batched.topk(), baseline);
  report.gmean_speedup = report.min_speedup = report.max_speedup = batch.speedup;
  report.batch = batch;
  return report;
}

// Fields derived from wall-clock time end in `_us`, or contain `speedup` or
// `ratio`; everything else is a pure function of the inputs.
inline nlohmann::ordered_json to_json(const BenchReport& r, const LabeledGraph& lg) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["dataset"] = r.dataset;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["k"] = r.k;
  j["deletions"] = r.deletions;
  j["seed"] = r.seed;
  j["mode"] = r.mode == BenchMode::Single ? "single" : "batch";
  j["rescoring"] = r.literal_rescoring ? "literal" : "incremental";
  j["speedup"] = {{"gmean", r.gmean_speedup}, {"min", r.min_speedup}, {"max", r.max_speedup}};
  auto split = [](const KindSplit& s) {
    return ordered_json{{"count", s.count},
                        {"mean_static_us", s.mean_static_us},
                        {"mean_tracking_us", s.mean_tracking_us},
                        {"time_ratio", s.time_ratio}};
  };
  j["bridge"] = split(r.bridge);
  j["non_bridge"] = split(r.non_bridge);
  j["bridge_fraction"] = r.bridge_fraction();
  j["bridge_only_theory_ratio"] = BenchReport::kBridgeOnlyTheory;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"u", lg.name_of(row.edge.u)},
                    {"v", lg.name_of(row.edge.v)},
                    {"kind", to_string(row.kind)},
                    {"static_us", row.static_us},
                    {"tracking_us", row.tracking_us},
                    {"speedup", row.speedup},
                    {"objective_gap", row.objective_gap}});
  }
  j["rows"] = std::move(rows);
  if (r.batch) {
    const auto& b = *r.batch;
    j["batch"] = {{"edges", b.edges},
                  {"bridges", b.bridges},
                  {"static_us", b.static_us},
                  {"tracking_us", b.tracking_us},
                  {"sequential_us", b.sequential_us},
                  {"speedup", b.speedup},
                  {"speedup_vs_sequential", b.speedup_vs_sequential},
                  {"objective_gap", b.objective_gap}};
  }
  return j;
}

/// Tab-separated mirror: `#` summary lines, then one row per deletion.
inline void write_tsv(std::ostream& out, const BenchReport& r, const LabeledGraph& lg) {
  out << "# dataset\t" << r.dataset << "\n# nodes\t" << r.nodes << "\n# edges\t" << r.edges << "\n# k\t" << r.k
      << "\n# deletions\t" << r.deletions << "\n# seed\t" << r.seed << "\n# mode\t"
      << (r.mode == BenchMode::Single ? "single" : "batch") << "\n# rescoring\t"
      << (r.literal_rescoring ? "literal" : "incremental") << "\n# gmean_speedup\t" << r.gmean_speedup
      << "\n# min_speedup\t" << r.min_speedup << "\n# max_speedup\t" << r.max_speedup << "\n# bridge_fraction\t"
      << r.bridge_fraction() << "\n# bridge_time_ratio\t" << r.bridge.time_ratio
      << "\n# non_bridge_time_ratio\t" << r.non_bridge.time_ratio << "\n# bridge_only_theory_ratio\t"
      << BenchReport::kBridgeOnlyTheory << '\n';
  if (r.batch) {
    const auto& b = *r.batch;
    out << "# batch_bridges\t" << b.bridges << "\n# batch_static_us\t" << b.static_us << "\n# batch_tracking_us\t"
        << b.tracking_us << "\n# batch_sequential_us\t" << b.sequential_us << "\n# batch_speedup\t" << b.speedup
        << "\n# batch_speedup_vs_sequential\t" << b.speedup_vs_sequential << "\n# batch_objective_gap\t"
        << b.objective_gap << '\n';
  }
  out << "u\tv\tkind\tstatic_us\ttracking_us\tspeedup\tobjective_gap\n";
  for (const auto& row : r.rows) {
    out << lg.name_of(row.edge.u) << '\t' << lg.name_of(row.edge.v) << '\t' << to_string(row.kind) << '\t'
        << row.static_us << '\t' << row.tracking_us << '\t' << row.speedup << '\t' << row.objective_gap << '\n';
  }
}

}  // namespace shs
