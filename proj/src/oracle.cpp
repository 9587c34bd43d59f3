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

// Reference solver. Deliberately shares nothing with lambda_exact beyond
// Graph::adjacent: no kernels, no bounds, no twin reasoning, no threads.

#include <set>
#include <string>
#include <vector>

#include "locdom/error.hpp"
#include "locdom/solver.hpp"

namespace locdom {

namespace {

bool naive_locating(const Graph& g, const std::vector<bool>& in) {
  const std::size_t n = g.order();
  std::set<std::vector<Vertex>> traces;
  for (Vertex u = 0; u < n; ++u) {
    if (in[u]) continue;
    std::vector<Vertex> t;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v] && g.adjacent(u, v)) t.push_back(v);
    }
    if (t.empty()) return false;
    if (!traces.insert(std::move(t)).second) return false;
  }
  return true;
}

}  // namespace

SolveResult lambda_oracle(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  if (n == 0) throw InputError("graph order must be at least 1");
  if (n > kOracleMaxOrder) {
    throw InputError("oracle is limited to " + std::to_string(kOracleMaxOrder) +
                     " vertices, got " + std::to_string(n));
  }

  SolveResult result;
  for (std::size_t c = 0; c <= n; ++c) {
    // Lexicographic c-subsets of [0, n).
    std::vector<Vertex> idx(c);
    for (std::size_t j = 0; j < c; ++j) idx[j] = j;
    while (true) {
      std::vector<bool> in(n, false);
      for (Vertex v : idx) in[v] = true;
      ++result.stats.sets_tested;
      if (naive_locating(g, in)) {
        result.lambda = c;
        result.witness = VertexSet(n, idx);
        result.stats.elapsed = std::chrono::steady_clock::now() - start;
        return result;
      }
      std::size_t j = c;
      while (j > 0 && idx[j - 1] == n - c + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t t = j; t < c; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  // Unreachable: the full vertex set always qualifies.
  throw std::logic_error("oracle found no locating-dominating set");
}

}  // namespace locdom
