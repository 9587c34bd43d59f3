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

#include "locdom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <random>

#include "gtest/gtest.h"
#include "locdom/solver.hpp"
#include "support/brute.hpp"

namespace locdom {
namespace {

std::vector<Vertex> targets_of(const FunctionMap& f) { return {f.targets().begin(), f.targets().end()}; }

TEST(FamilyTest, CompleteGraph) {
  const Graph g = complete_graph(5);
  EXPECT_EQ(g.edge_count(), 10u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_EQ(complete_graph(1).edge_count(), 0u);
}

TEST(FamilyTest, StarPathCycle) {
  const Graph s = star_graph(6);
  EXPECT_EQ(s.degree(0), 5u);
  for (Vertex v = 1; v < 6; ++v) EXPECT_EQ(s.degree(v), 1u);
  EXPECT_EQ(path_graph(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  const Graph c = cycle_graph(5);
  EXPECT_EQ(c.edge_count(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c.degree(v), 2u);
  EXPECT_THROW(star_graph(1), InputError);
  EXPECT_THROW(cycle_graph(2), InputError);
  EXPECT_THROW(path_graph(0), InputError);
}

TEST(FamilyTest, HGraphRemovesLeadingMatching) {
  const Graph h = h_graph(4, 2);
  // K_4 minus {01, 23} is the 4-cycle 0-2-1-3.
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(h.degree(v), 2u);
  const Graph h7 = h_graph(7, 2);
  EXPECT_EQ(h7.edge_count(), 21u - 2u);
  EXPECT_FALSE(h7.adjacent(0, 1));
  EXPECT_FALSE(h7.adjacent(2, 3));
  EXPECT_TRUE(h7.adjacent(1, 2));
  EXPECT_THROW(h_graph(2, 1), InputError);
  EXPECT_THROW(h_graph(5, 3), InputError);
  EXPECT_THROW(h_graph(5, 0), InputError);
}

TEST(FamilyTest, HGraphTwinInventory) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const TwinPartition tp = twin_partition(h_graph(n, i));
      std::size_t pairs = 0, adjacent = 0;
      for (const auto& c : tp.classes) {
        if (c.kind == TwinKind::kNonAdjacent) {
          ++pairs;
          EXPECT_EQ(c.members.size(), 2u);
          const auto m = c.members.members();
          EXPECT_EQ(m[0] % 2, 0u);
          EXPECT_EQ(m[1], m[0] + 1);
          EXPECT_LT(m[1], 2 * i);
        } else if (c.kind == TwinKind::kAdjacent) {
          ++adjacent;
          EXPECT_EQ(c.members.size(), n - 2 * i);
          EXPECT_EQ(c.members.members().front(), 2 * i);
        }
      }
      EXPECT_EQ(pairs, i) << n << "," << i;
      EXPECT_EQ(adjacent, n - 2 * i >= 2 ? 1u : 0u) << n << "," << i;
    }
  }
}

TEST(FamilyTest, TargetKind) {
  EXPECT_EQ(h_graph_target_kind(2, 0), TargetKind::kTwinPair);
  EXPECT_EQ(h_graph_target_kind(2, 3), TargetKind::kTwinPair);
  EXPECT_EQ(h_graph_target_kind(2, 4), TargetKind::kSaturated);
  // Kind agrees with the degree in h_graph.
  for (std::size_t n = 4; n <= 9; ++n) {
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const Graph h = h_graph(n, i);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(h_graph_target_kind(i, v) == TargetKind::kSaturated, h.degree(v) == n - 1);
      }
    }
  }
}

TEST(FamilyTest, PendantGapGraph) {
  const Graph g2 = pendant_gap_graph(2);
  EXPECT_EQ(g2.order(), 4u);
  EXPECT_EQ(g2.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
  const Graph g3 = pendant_gap_graph(3);
  EXPECT_EQ(g3.order(), 5u);
  EXPECT_EQ(g3.degree(0), 3u);
  for (std::size_t t = 2; t <= 7; ++t) {
    EXPECT_EQ(testing::brute_lambda(testing::to_adj_list(pendant_gap_graph(t))), t);
  }
  EXPECT_THROW(pendant_gap_graph(1), InputError);
}

TEST(FamilyTest, MakeFamilyAndNames) {
  for (Family f : {Family::kComplete, Family::kStar, Family::kPath, Family::kCycle, Family::kPendantGap,
                   Family::kHGraph}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("wheel"), InputError);
  EXPECT_EQ(make_family({.kind = Family::kHGraph, .n = 7, .i = 2}), h_graph(7, 2));
  EXPECT_EQ(make_family({.kind = Family::kPendantGap, .t = 3}), pendant_gap_graph(3));
  EXPECT_EQ(make_family({.kind = Family::kStar, .n = 4}), star_graph(4));
}

TEST(FamilyTest, FamiliesAreConnected) {
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_TRUE(testing::bfs_connected(testing::to_adj_list(complete_graph(n))));
    EXPECT_TRUE(testing::bfs_connected(testing::to_adj_list(path_graph(n))));
    if (n >= 2) EXPECT_TRUE(testing::bfs_connected(testing::to_adj_list(star_graph(n))));
    if (n >= 3) EXPECT_TRUE(testing::bfs_connected(testing::to_adj_list(cycle_graph(n))));
    for (std::size_t i = 1; i <= n / 2; ++i) {
      if (n == 2) continue;
      EXPECT_TRUE(testing::bfs_connected(testing::to_adj_list(h_graph(n, i))));
    }
  }
}

TEST(MapTest, Constructors) {
  EXPECT_EQ(targets_of(constant_map(5, 0)), (std::vector<Vertex>{0, 0, 0, 0, 0}));
  EXPECT_EQ(targets_of(identity_map(3)), (std::vector<Vertex>{0, 1, 2}));
  const std::vector<Vertex> perm{2, 0, 1};
  EXPECT_EQ(targets_of(permutation_map(perm)), perm);
  EXPECT_EQ(targets_of(signature_map(Signature{{3, 2}})), (std::vector<Vertex>{0, 0, 0, 1, 1}));
  EXPECT_THROW(constant_map(3, 3), InputError);
  const std::vector<Vertex> not_perm{0, 0, 1};
  EXPECT_THROW(permutation_map(not_perm), InputError);
  EXPECT_THROW(signature_map(Signature{{2, 3}}), InputError);
  EXPECT_THROW(signature_map(Signature{}), InputError);
}

TEST(MapTest, SignatureExamples) {
  const auto a = classify(signature_map(Signature{{4, 3, 2}}));
  EXPECT_EQ(a.image_size, 3u);
  EXPECT_EQ(a.matchings, 0u);
  const auto b = classify(signature_map(Signature{{3, 2, 1, 1, 1, 1}}));
  EXPECT_EQ(b.image_size, 6u);
  EXPECT_EQ(b.matchings, 4u);
}

TEST(PartitionsTest, CountsMatchPartitionNumbers) {
  // p(n) for n = 1..10.
  const std::size_t expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(partitions(n).size(), expected[n - 1]) << n;
}

TEST(PartitionsTest, ReverseLexicographicAndRoundTrip) {
  EXPECT_EQ(partitions(4), (std::vector<Signature>{{{4}}, {{3, 1}}, {{2, 2}}, {{2, 1, 1}}, {{1, 1, 1, 1}}}));
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto ps = partitions(n);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      EXPECT_NO_THROW(ps[j].validate(n));
      EXPECT_EQ(preimage_signature(signature_map(ps[j])), ps[j]);
      if (j > 0) {
        EXPECT_TRUE(std::lexicographical_compare(ps[j].parts.begin(), ps[j].parts.end(), ps[j - 1].parts.begin(),
                                                 ps[j - 1].parts.end()));
      }
    }
  }
}

TEST(MapEnumerationTest, VisitsEveryMapOnce) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<Vertex>> seen;
    std::size_t calls = 0;
    for_each_map(n, [&](const FunctionMap& f) {
      ++calls;
      seen.insert(targets_of(f));
    });
    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= n;
    EXPECT_EQ(calls, total);
    EXPECT_EQ(seen.size(), total);
  }
  EXPECT_THROW(for_each_map(9, [](const FunctionMap&) {}), InputError);
}

// Canonical form by brute force over all relabelings, independent of the
// generator's own isomorphism reduction.
std::vector<Edge> brute_canonical(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    auto e = g.permuted(perm).edges();
    if (first || e < best) best = e;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(ConnectedGraphsTest, LabeledCounts) {
  const std::size_t expected[] = {1, 1, 4, 38, 728, 26704};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto gs = connected_graphs(n, false);
    EXPECT_EQ(gs.size(), expected[n - 1]) << n;
    for (const Graph& g : gs) ASSERT_TRUE(testing::bfs_connected(testing::to_adj_list(g)));
  }
}

TEST(ConnectedGraphsTest, IsomorphismClassCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto gs = connected_graphs(n, true);
    EXPECT_EQ(gs.size(), expected[n - 1]) << n;
    std::set<std::vector<Edge>> canon;
    for (const Graph& g : gs) canon.insert(brute_canonical(g));
    EXPECT_EQ(canon.size(), gs.size()) << "duplicate classes at n=" << n;
  }
}

TEST(RandomTest, ConnectedAndReproducible) {
  std::mt19937_64 a(123), b(123);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 15;
    const Graph ga = random_connected_graph(n, a);
    EXPECT_EQ(ga, random_connected_graph(n, b));
    EXPECT_TRUE(testing::bfs_connected(testing::to_adj_list(ga)));
  }
  std::mt19937_64 rng(5);
  auto p = random_permutation(20, rng);
  std::sort(p.begin(), p.end());
  for (Vertex v = 0; v < 20; ++v) EXPECT_EQ(p[v], v);
}

}  // namespace
}  // namespace locdom
