#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shs/shs.hpp"

namespace {

using namespace shs;

std::string join_members(const TopKSet& set, const LabeledGraph& lg) {
  std::string out;
  for (const auto& s : set.selections()) {
    if (!out.empty()) out += ',';
    out += lg.name_of(s.node);
  }
  return out.empty() ? "-" : out;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

struct GenArgs {
  std::string family = "pa";
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  GeneratorSpec spec = a.family == "pa" ? pa_spec(a.n, a.seed) : er_spec(a.n, a.p, a.seed);
  const Graph g = generate(spec);
  save_edge_list(a.out, g);
  std::cout << "nodes\tedges\n" << g.node_count() << '\t' << g.edge_count() << '\n';
  return 0;
}

struct TopkArgs {
  std::string input;
  std::size_t k = 1;
  std::string emit = "set";
};

int run_topk(const TopkArgs& a) {
  const LabeledGraph lg = load_edge_list(a.input);
  if (a.k > lg.graph.node_count()) {
    std::cerr << "warning: k=" << a.k << " exceeds the node count " << lg.graph.node_count()
              << "; selecting every node\n";
  }
  if (a.emit == "scores" || a.emit == "both") {
    const ScoreTable scores = score_all(lg.graph);
    std::cout << "node\tscore\n";
    for (NodeId v = 0; v < lg.graph.node_count(); ++v) std::cout << lg.name_of(v) << '\t' << scores[v] << '\n';
  }
  if (a.emit == "set" || a.emit == "both") {
    if (a.emit == "both") std::cout << '\n';
    const TopKSet set = greedy_topk(lg.graph, a.k);
    std::cout << "rank\tnode\tscore\n";
    std::size_t rank = 1;
    for (const auto& s : set.selections()) std::cout << rank++ << '\t' << lg.name_of(s.node) << '\t' << s.score << '\n';
    std::cout << "# objective\t" << objective(lg.graph, set) << '\n';
  }
  return 0;
}

struct TrackArgs {
  std::string input;
  std::size_t k = 1;
  std::string updates;
  bool batch = false;
  bool literal = false;
};

int run_track(const TrackArgs& a) {
  const LabeledGraph lg = load_edge_list(a.input);
  const auto events = load_update_stream(a.updates, lg);
  for (const auto& e : events) {
    if (e.op == UpdateOp::Add) {
      throw InputError("update stream line " + std::to_string(e.line) +
                       ": edge additions are not supported in tracking mode");
    }
  }
  Tracker tracker(lg.graph, a.k, TrackerOptions{a.literal});
  std::cout << "event\ttopk\tobjective\tmicros\n";
  std::cout << "init\t" << join_members(tracker.topk(), lg) << '\t' << objective(tracker.graph(), tracker.topk())
            << "\t0\n";
  auto timed = [](auto&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  };
  if (a.batch) {
    std::vector<Edge> edges;
    for (const auto& e : events) edges.push_back(e.edge);
    const auto us = timed([&] { tracker.delete_edges(edges); });
    std::cout << "batch(" << edges.size() << ")\t" << join_members(tracker.topk(), lg) << '\t'
              << objective(tracker.graph(), tracker.topk()) << '\t' << us << '\n';
    return 0;
  }
  for (const auto& e : events) {
    long long us = 0;
    try {
      us = timed([&] { tracker.delete_edge(e.edge.u, e.edge.v); });
    } catch (const UpdateError& err) {
      throw UpdateError("update stream line " + std::to_string(e.line) + ": " + err.what());
    }
    std::cout << describe(e, lg) << '\t' << join_members(tracker.topk(), lg) << '\t'
              << objective(tracker.graph(), tracker.topk()) << '\t' << us << '\n';
  }
  return 0;
}

struct BenchArgs {
  std::string input;
  std::size_t k = 1;
  std::size_t deletions = 50;
  std::uint64_t seed = 1;
  bool batch = false;
  bool literal = false;
  std::string report;
};

int run_bench_cmd(const BenchArgs& a) {
  const LabeledGraph lg = load_edge_list(a.input);
  BenchConfig config;
  config.dataset = std::filesystem::path(a.input).stem().string();
  config.k = a.k;
  config.deletions = a.deletions;
  config.seed = a.seed;
  config.mode = a.batch ? BenchMode::Batch : BenchMode::Single;
  config.tracker.literal_rescoring = a.literal;
  const BenchReport report = run_bench(lg.graph, config);

  const std::string json = to_json(report, lg).dump(2) + "\n";
  std::ostringstream tsv;
  write_tsv(tsv, report, lg);
  const bool tsv_primary = std::filesystem::path(a.report).extension() == ".tsv";
  write_file(a.report, tsv_primary ? tsv.str() : json);
  write_file(replace_extension(a.report, tsv_primary ? ".json" : ".tsv"), tsv_primary ? json : tsv.str());

  std::printf("dataset\t%s\nk\t%zu\nmode\t%s\ngmean_speedup\t%.3f\nmin_speedup\t%.3f\nmax_speedup\t%.3f\n",
              report.dataset.c_str(), report.k, a.batch ? "batch" : "single", report.gmean_speedup,
              report.min_speedup, report.max_speedup);
  if (report.batch) {
    std::printf("speedup_vs_sequential\t%.3f\n", report.batch->speedup_vs_sequential);
  } else {
    std::printf("bridge_fraction\t%.3f\nbridge_time_ratio\t%.3f\nbridge_only_theory_ratio\t%.1f\n",
                report.bridge_fraction(), report.bridge.time_ratio, BenchReport::kBridgeOnlyTheory);
  }
  return 0;
}

struct ExportArgs {
  std::string input;
  std::size_t k = 1;
  std::string out;
  std::string labels = "score";
  std::string updates;
  std::size_t every = 1;
};

// With an update stream, one CSV and edge list per snapshot: the initial
// graph and then every `every` events (plus the final state).
int run_export(const ExportArgs& a) {
  LabeledGraph lg = load_edge_list(a.input);
  const LabelMode mode = a.labels == "greedy" ? LabelMode::Greedy : LabelMode::Score;
  if (a.updates.empty()) {
    export_training_data(lg, a.k, a.out, mode);
    std::cout << "snapshot\tnodes\tedges\tcsv\n0\t" << lg.graph.node_count() << '\t' << lg.graph.edge_count() << '\t'
              << a.out << '\n';
    return 0;
  }
  if (a.every == 0) throw InputError("--every must be at least 1");
  const auto events = load_update_stream(a.updates, lg);
  std::cout << "snapshot\tnodes\tedges\tcsv\n";
  std::size_t snapshot = 0;
  auto emit = [&] {
    char suffix[32];
    std::snprintf(suffix, sizeof suffix, ".snap%03zu", snapshot);
    const auto base = std::filesystem::path(a.out);
    const auto stem = (base.parent_path() / base.stem()).string() + suffix;
    export_training_data(lg, a.k, stem + ".csv", mode);
    save_edge_list(stem + ".edges", lg.graph);
    std::cout << snapshot << '\t' << lg.graph.node_count() << '\t' << lg.graph.edge_count() << '\t' << stem
              << ".csv\n";
    ++snapshot;
  };
  emit();
  for (std::size_t i = 0; i < events.size(); ++i) {
    apply_event(lg.graph, events[i]);
    if ((i + 1) % a.every == 0 || i + 1 == events.size()) emit();
  }
  return 0;
}

struct OracleArgs {
  OracleCheckConfig config;
};

int run_oracle(const OracleArgs& a) {
  const OracleCheckResult r = run_oracle_check(a.config);
  std::printf("graphs\t%zu\nnodes\t%zu\npassed\t%zu\nfailed\t%zu\nelapsed_ms\t%.1f\n", r.graphs, r.nodes_checked,
              r.passed, r.failed, r.elapsed_ms);
  for (const auto& m : r.mismatches) {
    std::printf("mismatch\tgraph=%zu\tnode=%u\tfast=%llu\tdefinitional=%llu\n", m.graph, m.node,
                static_cast<unsigned long long>(m.fast), static_cast<unsigned long long>(m.definitional));
  }
  std::printf("%s\n", r.ok() ? "PASS" : "FAIL");
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top-k structural hole spanners: discovery, tracking under edge deletions, benchmarks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->add_option("--family", gen.family, "pa or er")->check(CLI::IsMember({"pa", "er"}));
  gen_cmd->add_option("--n", gen.n, "Node count")->required();
  gen_cmd->add_option("--p", gen.p, "Edge probability (er)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output edge list")->required();

  TopkArgs topk;
  auto* topk_cmd = app.add_subcommand("topk", "Greedy Top-k selection on a static graph");
  topk_cmd->add_option("--input", topk.input, "Edge list")->required();
  topk_cmd->add_option("--k", topk.k, "Set size")->required()->check(CLI::PositiveNumber);
  topk_cmd->add_option("--emit", topk.emit, "scores, set or both")->check(CLI::IsMember({"scores", "set", "both"}));

  TrackArgs track;
  auto* track_cmd = app.add_subcommand("track", "Track the Top-k set through a deletion stream");
  track_cmd->add_option("--input", track.input, "Edge list")->required();
  track_cmd->add_option("--k", track.k, "Set size")->required()->check(CLI::PositiveNumber);
  track_cmd->add_option("--updates", track.updates, "Update stream ('- u v' lines)")->required();
  track_cmd->add_flag("--batch", track.batch, "Apply all events as one batch");
  track_cmd->add_flag("--literal", track.literal, "Rescore every affected node from scratch");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time tracking against static recomputation");
  bench_cmd->add_option("--input", bench.input, "Edge list")->required();
  bench_cmd->add_option("--k", bench.k, "Set size")->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--deletions", bench.deletions, "Edges to delete");
  bench_cmd->add_option("--seed", bench.seed, "Deletion sampling seed")->required();
  bench_cmd->add_flag("--batch", bench.batch, "Delete all sampled edges as one batch");
  bench_cmd->add_flag("--literal", bench.literal, "Rescore every affected node from scratch");
  bench_cmd->add_option("--report", bench.report, "Report path (.json or .tsv; the other is written alongside)")
      ->required();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export-gnn", "Write node features and SHS labels as CSV");
  export_cmd->add_option("--input", exp.input, "Edge list")->required();
  export_cmd->add_option("--k", exp.k, "Number of SHS labels")->required();
  export_cmd->add_option("--out", exp.out, "Output CSV")->required();
  export_cmd->add_option("--labels", exp.labels, "score or greedy")->check(CLI::IsMember({"score", "greedy"}));
  export_cmd->add_option("--updates", exp.updates, "Update stream; writes one snapshot per --every events");
  export_cmd->add_option("--every", exp.every, "Events per snapshot");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare fast and definitional scores on random graphs");
  oracle_cmd->add_option("--graphs", oracle.config.graphs, "Number of graphs");
  oracle_cmd->add_option("--max-n", oracle.config.max_n, "Largest node count")->check(CLI::Range(2, 4096));
  oracle_cmd->add_option("--seed", oracle.config.seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*topk_cmd) return run_topk(topk);
    if (*track_cmd) return run_track(track);
    if (*bench_cmd) return run_bench_cmd(bench);
    if (*export_cmd) return run_export(exp);
    if (*oracle_cmd) return run_oracle(oracle);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const UpdateError& e) {
    std::cerr << "update error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 4;
  }
  return 1;
}
