// Copyright 2026 The locdom Authors
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

// Randomized and exhaustive properties of the solver, cross-checked
// against the unpruned reference search.

#include <random>

#include "gtest/gtest.h"
#include "locdom/functigraph.hpp"
#include "locdom/generators.hpp"
#include "locdom/solver.hpp"

namespace locdom {
namespace {

FunctionMap random_map(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> t(n);
  for (auto& x : t) x = rng() % n;
  return FunctionMap(std::move(t));
}

TEST(PropertiesTest, SupersetsOfLocatingSetsStayLocating) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = random_connected_graph(n, rng);
    const VertexSet L = lambda_exact(g, {.threads = 1}).witness;
    VertexSet bigger = L;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) bigger.insert(v);
    }
    ASSERT_TRUE(is_locating_dominating(g, bigger)) << g.order() << " " << bigger.to_string();
    ++checked;
  }
}

TEST(PropertiesTest, LambdaRespectsBothLowerBounds) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = trial % 2 ? random_connected_graph(n, rng) : Functigraph(random_connected_graph(n, rng),
                                                                             random_map(n, rng))
                                                                     .graph();
    const std::size_t lambda = lambda_exact(g, {.threads = 1}).lambda;
    EXPECT_GE(lambda, info_lower_bound(g.order()));
    EXPECT_GE(lambda, twin_lower_bound(twin_partition(g)));
  }
}

TEST(PropertiesTest, RelabelingDoesNotChangeLambda) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const Graph g = random_connected_graph(n, rng);
    const auto perm = random_permutation(n, rng);
    const Graph h = g.permuted(perm);
    const auto rg = lambda_exact(g, {.threads = 1});
    const auto rh = lambda_exact(h, {.threads = 1});
    EXPECT_EQ(rg.lambda, rh.lambda);
    VertexSet image(n);
    for (Vertex v : rg.witness.members()) image.insert(perm[v]);
    EXPECT_TRUE(is_locating_dominating(h, image));
  }
}

TEST(PropertiesTest, ExactMatchesOracleOnAllSmallConnectedGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n, false)) {
      const std::size_t want = lambda_oracle(g).lambda;
      ASSERT_EQ(lambda_exact(g, {.threads = 1}).lambda, want);
      ASSERT_EQ(lambda_exact(g, {.use_twin_pruning = false, .threads = 1}).lambda, want);
    }
  }
  for (const Graph& g : connected_graphs(6, true)) {
    const std::size_t want = lambda_oracle(g).lambda;
    ASSERT_EQ(lambda_exact(g, {.threads = 1}).lambda, want);
    ASSERT_EQ(lambda_exact(g, {.use_twin_pruning = false, .threads = 1}).lambda, want);
  }
}

TEST(PropertiesTest, ExactMatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 7 + rng() % 4;
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = random_connected_graph(n, rng, p);
    const std::size_t want = lambda_oracle(g).lambda;
    EXPECT_EQ(lambda_exact(g, {.threads = 1}).lambda, want);
    EXPECT_EQ(lambda_exact(g, {.use_twin_pruning = false, .threads = 1}).lambda, want);
  }
}

TEST(PropertiesTest, ExactMatchesOracleOnRandomFunctigraphs) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = Functigraph(random_connected_graph(n, rng), random_map(n, rng)).graph();
    EXPECT_EQ(lambda_exact(g, {.threads = 1}).lambda, lambda_oracle(g).lambda);
  }
}

TEST(PropertiesTest, FunctigraphLambdaWithinRange) {
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const Graph& base : connected_graphs(n, true)) {
      for_each_map(n, [&](const FunctionMap& f) {
        const std::size_t lambda = lambda_exact(Functigraph(base, f).graph(), {.threads = 1}).lambda;
        EXPECT_GE(lambda, 3u);
        EXPECT_LE(lambda, 2 * n - 2);
      });
    }
  }
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 5 + rng() % 3;
    const std::size_t lambda =
        lambda_exact(Functigraph(random_connected_graph(n, rng), random_map(n, rng)).graph(), {.threads = 1}).lambda;
    EXPECT_GE(lambda, 3u);
    EXPECT_LE(lambda, 2 * n - 2);
  }
}

}  // namespace
}  // namespace locdom
