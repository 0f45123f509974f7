// Copyright 2026 The mpkex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpkex/rank.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace mpkex {
namespace {

std::vector<std::size_t> order_of(const RankedList& r) {
  std::vector<std::size_t> out;
  for (const auto& e : r.entries) out.push_back(e.index);
  return out;
}

// Random multipartite graph over random candidates, adjusted half the time.
WeightedDigraph random_graph(std::mt19937_64& rng, std::size_t n) {
  const auto c = testing::random_candidates(rng, n);
  const auto topics =
      TopicPartition::from_assignment(testing::random_assignment(rng, n, 1 + rng() % n));
  auto g = build_multipartite(c, topics);
  if (rng() % 2) g = adjust_weights(g, c, topics, {1.1, AdjustmentVariant::Published});
  return g;
}

TEST(TextRankTest, SingleNode) {
  const auto r = textrank(WeightedDigraph(1));
  EXPECT_DOUBLE_EQ(r.scores[0], 0.15);
  EXPECT_TRUE(r.converged);
}

TEST(TextRankTest, SymmetricPair) {
  WeightedDigraph g(2);
  g.set_weight(0, 1, 3.0);
  g.set_weight(1, 0, 3.0);
  const auto r = textrank(g);
  EXPECT_NEAR(r.scores[0], 1.0, 1e-12);
  EXPECT_NEAR(r.scores[1], 1.0, 1e-12);
  EXPECT_EQ(order_of(r), (std::vector<std::size_t>{0, 1}));
}

TEST(TextRankTest, DanglingNodePassesNothingOn) {
  // 0 -> 1 only; node 1 has no out-edges.
  WeightedDigraph g(2);
  g.set_weight(0, 1, 1.0);
  const auto r = textrank(g);
  EXPECT_NEAR(r.scores[0], 0.15, 1e-12);
  EXPECT_NEAR(r.scores[1], 0.15 + 0.85 * 0.15, 1e-12);
}

TEST(TextRankTest, MatchesDenseOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_graph(rng, 1 + trial % 10);
    const auto r = textrank(g);
    ASSERT_TRUE(r.converged);
    const auto oracle = testing::dense_textrank(g, 0.85);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(r.scores[i], oracle[i], 1e-6);
    EXPECT_EQ(order_of(r), testing::oracle_order(oracle));
  }
}

TEST(TextRankTest, ScoresStayAboveFloor) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = textrank(random_graph(rng, 2 + trial % 20));
    for (double s : r.scores) {
      EXPECT_TRUE(std::isfinite(s));
      EXPECT_GE(s, 0.15 - 1e-12);
    }
  }
}

TEST(TextRankTest, OrderIsScaleInvariant) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 15);
    WeightedDigraph scaled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.has_edge(i, j)) scaled.set_weight(i, j, 37.5 * g.weight(i, j));
      }
    }
    const auto a = textrank(g);
    const auto b = textrank(scaled);
    const auto oracle = testing::dense_textrank(g, 0.85);
    // Order equality wherever the true scores are separated.
    EXPECT_EQ(order_of(a), testing::oracle_order(oracle));
    EXPECT_EQ(order_of(b), testing::oracle_order(oracle));
  }
}

TEST(TextRankTest, InitialScoresDoNotChangeFixedPoint) {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> init(0.01, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 2 + trial % 12);
    std::vector<double> start(g.size());
    for (auto& s : start) s = init(rng);
    const auto a = textrank(g);
    const auto b = textrank(g, {}, std::span<const double>(start));
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(a.scores[i], b.scores[i], 1e-6);
    // Orders agree up to ties within the convergence tolerance.
    EXPECT_EQ(testing::oracle_order(a.scores, 1e-6), testing::oracle_order(b.scores, 1e-6));
  }
}

TEST(TextRankTest, Deterministic) {
  std::mt19937_64 rng(21);
  const auto g = random_graph(rng, 30);
  const auto a = textrank(g);
  const auto b = textrank(g);
  EXPECT_EQ(a.scores, b.scores);
  EXPECT_EQ(a.iterations_used, b.iterations_used);
}

TEST(TextRankTest, IterationCapReportsNonConvergence) {
  WeightedDigraph g(3);
  g.set_weight(0, 1, 1.0);
  g.set_weight(0, 2, 3.0);
  g.set_weight(1, 2, 1.0);
  g.set_weight(2, 0, 1.0);
  const auto r = textrank(g, {.lambda = 0.85, .tol = 1e-12, .max_iter = 3});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations_used, 3u);
}

TEST(TextRankTest, Errors) {
  EXPECT_THROW(textrank(WeightedDigraph(0)), std::invalid_argument);
  EXPECT_THROW(textrank(WeightedDigraph(2), {.lambda = 1.0}), std::invalid_argument);
  WeightedDigraph g(2);
  g.set_weight(0, 1, std::numeric_limits<double>::infinity());
  EXPECT_THROW(textrank(g), std::domain_error);
  g.set_weight(0, 1, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(textrank(g), std::domain_error);
}

Candidate named(const std::string& surface, std::size_t pos) {
  Candidate c;
  c.key = stem_phrase(split_words(surface));
  c.surfaces = {surface, "ignored"};
  c.positions = {pos, pos + 50};
  c.first_offset = pos;
  c.length = c.key.stems.size();
  return c;
}

TEST(SelectTopTest, TruncatesAndLowercases) {
  const std::vector<Candidate> c = {named("Graph Model", 1), named("TextRank", 4)};
  RankedList r;
  r.entries = {{1, 2.0}, {0, 1.0}};
  EXPECT_EQ(select_top(r, c, 1), std::vector<std::string>{"textrank"});
  EXPECT_EQ(select_top(r, c, 10), (std::vector<std::string>{"textrank", "graph model"}));
  EXPECT_THROW(select_top(r, c, 0), std::invalid_argument);
}

TEST(SelectTopTest, TiesGoToEarlierCandidate) {
  const std::vector<Candidate> c = {named("first", 2), named("second", 9)};
  WeightedDigraph g(2);
  g.set_weight(0, 1, 1.0);
  g.set_weight(1, 0, 1.0);
  EXPECT_EQ(select_top(textrank(g), c, 2), (std::vector<std::string>{"first", "second"}));
}

}  // namespace
}  // namespace mpkex
