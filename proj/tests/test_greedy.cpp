#include <gtest/gtest.h>

#include <random>

#include "shs/generators.hpp"
#include "shs/greedy.hpp"
#include "support.hpp"

using namespace shs;
using testing_support::make_graph;
using testing_support::pairs_of;
using testing_support::path;
using testing_support::star;

TEST(GreedyTopk, StarCenter) {
  const TopKSet set = greedy_topk(star(4), 1);
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.selections()[0], (Selection{0, 10}));
}

TEST(GreedyTopk, PathPicksMiddle) {
  const TopKSet set = greedy_topk(path(5), 1);
  EXPECT_EQ(set.selections(), (std::vector<Selection>{{2, 8}}));
}

TEST(GreedyTopk, SecondPickTieGoesToSmallestId) {
  const TopKSet set = greedy_topk(path(5), 2);
  EXPECT_EQ(set.selections(), (std::vector<Selection>{{2, 8}, {0, 1}}));
}

TEST(GreedyTopk, KZeroRejected) { EXPECT_THROW(greedy_topk(path(3), 0), InputError); }

TEST(GreedyTopk, KAboveNodeCountTruncates) {
  const TopKSet set = greedy_topk(path(3), 7);
  EXPECT_EQ(set.k(), 7u);
  EXPECT_EQ(set.size(), 3u);
  EXPECT_EQ(objective(path(3), set), 0u);
}

TEST(GreedyTopk, Deterministic) {
  const Graph g = generate(pa_spec(300, 9));
  EXPECT_EQ(greedy_topk(g, 10), greedy_topk(g, 10));
}

TEST(GreedyTopk, InputGraphUntouched) {
  const Graph g = generate(er_spec(60, 0.05, 2));
  const Graph copy = g;
  (void)greedy_topk(g, 5);
  EXPECT_EQ(g, copy);
}

TEST(Objective, Examples) {
  const Graph p5 = path(5);
  const std::vector<NodeId> middle{2};
  EXPECT_EQ(objective(p5, std::span<const NodeId>(middle)), 2u);
  EXPECT_EQ(objective(p5, std::span<const NodeId>()), 10u);
  const std::vector<NodeId> two{1, 3};
  EXPECT_EQ(objective(p5, std::span<const NodeId>(two)), 0u);
  const std::vector<NodeId> bad{9};
  EXPECT_THROW(objective(p5, std::span<const NodeId>(bad)), InputError);
}

// Each pick must be the smallest-id argmax of the brute-force residual
// scores given the earlier picks.
TEST(GreedyTopk, EveryStepIsResidualArgmax) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 32)(rng);
    const double p = std::uniform_real_distribution<double>(0.03, 0.3)(rng);
    const Graph g = generate(er_spec(n, p, rng()));
    const auto pairs = pairs_of(g);
    const TopKSet set = greedy_topk(g, 6);
    std::vector<char> removed(n, 0);
    for (const auto& pick : set.selections()) {
      const auto scores = oracle::scores(n, pairs, removed);
      NodeId best = 0;
      bool found = false;
      for (NodeId v = 0; v < n; ++v) {
        if (removed[v]) continue;
        if (!found || scores[v] > scores[best]) best = v, found = true;
      }
      ASSERT_EQ(pick.node, best);
      ASSERT_EQ(pick.score, scores[best]);
      removed[pick.node] = 1;
    }
    EXPECT_EQ(objective(g, set), oracle::connected_pairs(n, pairs, removed));
  }
}

TEST(GreedyTopk, KOneIsSmallestIdOracleArgmax) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate(er_spec(25, 0.1, seed));
    const auto scores = testing_support::oracle_scores(g);
    const auto best = std::max_element(scores.begin(), scores.end()) - scores.begin();
    EXPECT_EQ(greedy_topk(g, 1).selections()[0].node, static_cast<NodeId>(best));
  }
}

TEST(TopKSetMin, EqualScoresEvictLargestId) {
  TopKSet set(3);
  set.insert(4, 5);
  set.insert(9, 5);
  set.insert(1, 7);
  EXPECT_EQ(set.min().node, 9u);
  EXPECT_EQ(set.remove_min(), (Selection{9, 5}));
  EXPECT_EQ(set.min().node, 4u);
  EXPECT_FALSE(set.contains(9));
}
