#include <gtest/gtest.h>

#include <sys/wait.h>

#include <filesystem>

#include "cli_harness.hpp"

namespace fs = std::filesystem;
using cli_harness::normalized;
using cli_harness::run;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("shs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }
  int cli(const std::string& args, const std::string& out_name) { return run(SHS_CLI_PATH, args, path(out_name)); }
  std::string q(const std::string& name) const { return "\"" + path(name).string() + "\""; }

  fs::path dir_;
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_F(CliTest, GenWritesEdgeList) {
  ASSERT_EQ(cli("gen --family pa --n 50 --seed 3 --out " + q("pa.edges"), "out.txt"), 0);
  EXPECT_NE(cli_harness::read_file(path("out.txt")).find("50\t49"), std::string::npos);
  ASSERT_EQ(cli("gen --family er --n 30 --p 1.5 --seed 3 --out " + q("er.edges"), "out.txt"), 2);
}

TEST_F(CliTest, TopkOnPath) {
  write(path("p5.edges"), "0 1\n1 2\n2 3\n3 4\n");
  ASSERT_EQ(cli("topk --input " + q("p5.edges") + " --k 2 --emit both", "out.tsv"), 0);
  EXPECT_EQ(cli_harness::read_file(path("out.tsv")),
            "node\tscore\n0\t4\n1\t7\n2\t8\n3\t7\n4\t4\n\nrank\tnode\tscore\n1\t2\t8\n2\t0\t1\n# objective\t1\n");
}

TEST_F(CliTest, TrackRejectsAdditionsWithLineNumber) {
  write(path("p5.edges"), "0 1\n1 2\n2 3\n3 4\n");
  write(path("up.txt"), "- 3 4\n+ 0 4\n");
  const std::string cmd = std::string("\"") + SHS_CLI_PATH + "\" track --input " + q("p5.edges") +
                          " --k 1 --updates " + q("up.txt") + " 2>" + q("err.txt") + " >/dev/null";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(cli_harness::read_file(path("err.txt")).find("line 2"), std::string::npos);
}

TEST_F(CliTest, TrackMissingEdgeFails) {
  write(path("p5.edges"), "0 1\n1 2\n2 3\n3 4\n");
  write(path("up.txt"), "- 3 4\n- 3 4\n");
  EXPECT_EQ(cli("track --input " + q("p5.edges") + " --k 1 --updates " + q("up.txt"), "out.tsv"), 3);
}

TEST_F(CliTest, TrackOutput) {
  write(path("p5.edges"), "0 1\n1 2\n2 3\n3 4\n");
  write(path("up.txt"), "- 1 2\n");
  ASSERT_EQ(cli("track --input " + q("p5.edges") + " --k 1 --updates " + q("up.txt"), "out.tsv"), 0);
  EXPECT_EQ(normalized(path("out.tsv")), "event\ttopk\tobjective\tmicros\ninit\t2\t2\t*\n- 1 2\t3\t1\t*\n");
}

TEST_F(CliTest, MissingInputFile) {
  EXPECT_EQ(cli("topk --input " + q("none.edges") + " --k 1", "out.tsv"), 4);
  EXPECT_NE(cli("topk --k 1", "out.tsv"), 0);
}

TEST_F(CliTest, ExportSnapshots) {
  write(path("g.edges"), "# nodes 5\n0 1\n1 2\n");
  write(path("up.txt"), "+ 0 2\n- 0 1\n+ 3 4\n");
  ASSERT_EQ(cli("export-gnn --input " + q("g.edges") + " --k 2 --out " + q("x.csv") + " --updates " + q("up.txt") +
                    " --every 2",
                "out.tsv"),
            0);
  EXPECT_EQ(cli_harness::read_file(path("x.snap002.edges")), "# nodes 5\n0 2\n1 2\n3 4\n");
  EXPECT_TRUE(fs::exists(path("x.snap000.csv")));
  EXPECT_TRUE(fs::exists(path("x.snap001.csv")));
  EXPECT_FALSE(fs::exists(path("x.snap003.csv")));
}

// Every command twice with the same seed, each run from its own directory;
// outputs must match once timing fields are removed.
TEST_F(CliTest, Deterministic) {
  ASSERT_EQ(cli("gen --family pa --n 300 --seed 5 --out " + q("pa.edges"), "gen.txt"), 0);
  ASSERT_EQ(cli("gen --family er --n 200 --p 0.03 --seed 5 --out " + q("er.edges"), "gen.txt"), 0);
  {
    std::ifstream in(path("er.edges"));
    std::ofstream del(path("del.txt"));
    std::string line;
    for (int taken = 0; taken < 9 && std::getline(in, line);) {
      if (line.starts_with("#")) continue;
      del << "- " << line << '\n';
      ++taken;
    }
  }
  const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
      {"gen --family pa --n 300 --seed 5 --out pa.edges", {"pa.edges", "gen.txt"}},
      {"topk --input " + q("pa.edges") + " --k 5 --emit both", {"topk.txt"}},
      {"track --input " + q("er.edges") + " --k 3 --updates " + q("del.txt"), {"track.txt"}},
      {"track --input " + q("er.edges") + " --k 3 --batch --updates " + q("del.txt"), {"batch.txt"}},
      {"bench --input " + q("pa.edges") + " --k 5 --deletions 20 --seed 3 --report bench.json",
       {"bench.json", "bench.tsv", "benchout.txt"}},
      {"bench --input " + q("er.edges") + " --k 1 --deletions 20 --seed 3 --batch --report b.tsv",
       {"b.json", "b.tsv", "bout.txt"}},
      {"export-gnn --input " + q("pa.edges") + " --k 10 --out f.csv", {"f.csv", "fout.txt"}},
      {"export-gnn --input " + q("er.edges") + " --k 10 --labels greedy --out s.csv --updates " +
           q("del.txt") + " --every 3",
       {"s.snap000.csv", "s.snap001.csv", "s.snap001.edges", "sout.txt"}},
      {"oracle-check --graphs 20 --max-n 40 --seed 9", {"oracle.txt"}},
  };
  for (const std::string dir : {"run1", "run2"}) {
    fs::create_directories(path(dir));
    for (const auto& [args, outputs] : runs) {
      const std::string capture = outputs.back().ends_with(".txt") ? outputs.back() : "stdout.txt";
      ASSERT_EQ(run(SHS_CLI_PATH, args, path(dir + "/" + capture), path(dir)), 0) << args;
    }
  }
  for (const auto& [args, outputs] : runs) {
    for (const auto& out : outputs) {
      const auto a = path("run1/" + out), b = path("run2/" + out);
      ASSERT_TRUE(fs::exists(a)) << a;
      EXPECT_EQ(normalized(a), normalized(b)) << out;
    }
  }
}
