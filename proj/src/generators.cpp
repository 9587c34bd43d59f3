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
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "locdom/error.hpp"

namespace locdom {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kComplete:
      return "complete";
    case Family::kStar:
      return "star";
    case Family::kPath:
      return "path";
    case Family::kCycle:
      return "cycle";
    case Family::kPendantGap:
      return "pendant_gap";
    case Family::kHGraph:
      return "h_graph";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kComplete, Family::kStar, Family::kPath, Family::kCycle,
                   Family::kPendantGap, Family::kHGraph}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

Graph make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case Family::kComplete:
      return complete_graph(spec.n);
    case Family::kStar:
      return star_graph(spec.n);
    case Family::kPath:
      return path_graph(spec.n);
    case Family::kCycle:
      return cycle_graph(spec.n);
    case Family::kPendantGap:
      return pendant_gap_graph(spec.t);
    case Family::kHGraph:
      return h_graph(spec.n, spec.i);
  }
  throw InputError("unknown family");
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph pendant_gap_graph(std::size_t t) {
  require(t >= 2, "pendant gap graph needs t >= 2");
  std::vector<Edge> edges = {{0, 1}, {1, 2}};
  for (Vertex p = 3; p <= t + 1; ++p) edges.emplace_back(0, p);
  return Graph(t + 2, edges);
}

Graph h_graph(std::size_t n, std::size_t i) {
  require(n >= 2, "h_graph needs n >= 2");
  require(i >= 1 && i <= n / 2, "h_graph needs 1 <= i <= floor(n/2)");
  require(!(n == 2 && i == 1), "h_graph(2,1) is edgeless");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool removed = v == u + 1 && u % 2 == 0 && v < 2 * i;
      if (!removed) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::string_view to_string(TargetKind k) {
  return k == TargetKind::kSaturated ? "saturated" : "twin-pair";
}

TargetKind h_graph_target_kind(std::size_t i, Vertex target) {
  return target < 2 * i ? TargetKind::kTwinPair : TargetKind::kSaturated;
}

FunctionMap constant_map(std::size_t n, Vertex target) {
  require(n >= 1, "map needs n >= 1");
  require(target < n, "constant target " + std::to_string(target) + " outside [0, " +
                          std::to_string(n) + ")");
  return FunctionMap(std::vector<Vertex>(n, target));
}

FunctionMap identity_map(std::size_t n) {
  require(n >= 1, "map needs n >= 1");
  std::vector<Vertex> t(n);
  std::iota(t.begin(), t.end(), Vertex{0});
  return FunctionMap(std::move(t));
}

FunctionMap permutation_map(std::span<const Vertex> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    require(p < perm.size() && !seen[p], "not a permutation of [0, " + std::to_string(perm.size()) + ")");
    seen[p] = true;
  }
  return FunctionMap(std::vector<Vertex>(perm.begin(), perm.end()));
}

FunctionMap signature_map(const Signature& sig) {
  sig.validate(sig.total());
  std::vector<Vertex> t;
  t.reserve(sig.total());
  for (std::size_t block = 0; block < sig.parts.size(); ++block) {
    t.insert(t.end(), sig.parts[block], block);
  }
  return FunctionMap(std::move(t));
}

std::vector<Signature> partitions(std::size_t n) {
  std::vector<Signature> out;
  if (n == 0) return out;
  // Reverse-lexicographic successor: find the rightmost part > 1, lower it,
  // and refill the tail greedily with parts no larger than it.
  std::vector<std::size_t> cur{n};
  while (true) {
    out.push_back(Signature{cur});
    std::size_t ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) break;
    const std::size_t part = --cur.back();
    std::size_t rem = ones + 1;
    while (rem > 0) {
      const std::size_t take = std::min(part, rem);
      cur.push_back(take);
      rem -= take;
    }
  }
  return out;
}

void for_each_map(std::size_t n, const std::function<void(const FunctionMap&)>& fn) {
  require(n >= 1 && n <= 8, "map enumeration supports 1 <= n <= 8");
  std::vector<Vertex> t(n, 0);
  while (true) {
    fn(FunctionMap(t));
    std::size_t j = n;
    while (j > 0 && t[j - 1] == n - 1) {
      t[j - 1] = 0;
      --j;
    }
    if (j == 0) return;
    ++t[j - 1];
  }
}

namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Upper-triangle adjacency bits under the relabeling perm; the minimum over
// all permutations is a complete isomorphism invariant.
std::uint64_t adjacency_code(const Graph& g, std::span<const Vertex> perm,
                             std::span<const Edge> pairs) {
  std::vector<Vertex> inv(perm.size());
  for (Vertex u = 0; u < perm.size(); ++u) inv[perm[u]] = u;
  std::uint64_t code = 0;
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if (g.adjacent(inv[pairs[b].first], inv[pairs[b].second])) code |= std::uint64_t{1} << b;
  }
  return code;
}

std::uint64_t canonical_code(const Graph& g, std::span<const Edge> pairs) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, adjacency_code(g, perm, pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n, bool up_to_isomorphism) {
  require(n >= 1, "connected_graphs needs n >= 1");
  require(n <= (up_to_isomorphism ? 6u : 7u), "connected_graphs order too large for enumeration");
  const auto pairs = all_pairs(n);
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1u) edges.push_back(pairs[b]);
    }
    if (edges.size() + 1 < n) continue;
    Graph g(n, edges);
    if (!is_connected(g)) continue;
    if (up_to_isomorphism && !seen.insert(canonical_code(g, pairs)).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

Graph random_connected_graph(std::size_t n, std::mt19937_64& rng, double p) {
  require(n >= 1 && n <= kMaxOrder, "random graph order out of range");
  require(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]");
  std::bernoulli_distribution coin(p);
  const auto pairs = all_pairs(n);
  while (true) {
    std::vector<Edge> edges;
    for (const Edge& e : pairs) {
      if (coin(rng)) edges.push_back(e);
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace locdom
