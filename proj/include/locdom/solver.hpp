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

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

// N(u) ∩ L for a vertex outside L. Throws InputError if u is in L or out
// of range.
VertexSet trace(const Graph& g, const VertexSet& L, Vertex u);

// True iff every vertex outside L has a nonempty trace and no two outside
// vertices share a trace. L = V(G) is vacuously locating-dominating.
bool is_locating_dominating(const Graph& g, const VertexSet& L);

// Smallest c with order - c <= 2^c - 1: outside vertices need pairwise
// distinct nonempty subsets of a c-element set.
std::size_t info_lower_bound(std::size_t order);

// Sum of (m - 1) over twin classes of size m >= 2.
std::size_t twin_lower_bound(const TwinPartition& tp);

// Lowest-indexed m - 1 members of every twin class of size m >= 2. Any
// permutation of a twin class is an automorphism, so some minimum
// locating-dominating set contains this set.
VertexSet forced_set(const TwinPartition& tp, std::size_t order);

struct SolveOptions {
  bool use_twin_pruning = true;
  // Rescan cardinality lambda in lexicographic order after the search so
  // the witness is the lexicographically least minimum set.
  bool deterministic_witness = false;
  // Worker count; 0 means default_threads().
  unsigned threads = 0;
};

struct SolveStats {
  std::uint64_t sets_tested = 0;
  // Cardinalities below the starting lower bound that were never enumerated.
  std::size_t pruned_cardinalities_skipped = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  std::size_t lambda = 0;
  VertexSet witness;
  SolveStats stats;
};

// LD_THREADS if set and nonzero, otherwise the hardware concurrency.
unsigned default_threads();

// Exact location-domination number by ascending-cardinality subset search
// starting at max(info_lower_bound, twin_lower_bound).
SolveResult lambda_exact(const Graph& g, const SolveOptions& opts = {});

inline constexpr std::size_t kOracleMaxOrder = 24;

// Unpruned reference: all subsets in ascending cardinality, lexicographic
// within a cardinality, checked with a naive trace comparison. Single
// threaded. Throws InputError above kOracleMaxOrder vertices.
SolveResult lambda_oracle(const Graph& g);

}  // namespace locdom
