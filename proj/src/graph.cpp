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

#include "locdom/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "locdom/error.hpp"

namespace locdom {

Graph::Graph(std::size_t order, std::span<const Edge> edges) {
  if (order == 0) throw InputError("graph order must be at least 1");
  if (order > kMaxOrder) {
    throw InputError("graph order " + std::to_string(order) + " exceeds maximum " +
                     std::to_string(kMaxOrder));
  }
  rows_.assign(order, Bits128{});
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(order) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }
}

void Graph::check_vertex(Vertex u) const {
  if (u >= order()) {
    throw InputError("vertex " + std::to_string(u) + " out of range [0, " +
                     std::to_string(order()) + ")");
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const Bits128& r : rows_) twice += r.count();
  return twice / 2;
}

std::size_t Graph::degree(Vertex u) const {
  check_vertex(u);
  return rows_[u].count();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].test(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for_each_bit(rows_[u], [&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw InputError("permutation length does not match graph order");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) throw InputError("not a permutation of [0, n)");
    seen[p] = true;
  }
  Graph out;
  out.rows_.assign(n, Bits128{});
  for (Vertex u = 0; u < n; ++u) {
    for_each_bit(rows_[u], [&](std::size_t v) { out.rows_[perm[u]].set(perm[v]); });
  }
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex u, bool closed) {
  if (u >= g.order()) {
    throw InputError("vertex " + std::to_string(u) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
  }
  VertexSet s = VertexSet::from_bits(g.order(), g.rows()[u]);
  if (closed) s.insert(u);
  return s;
}

bool is_connected(const Graph& g) {
  const auto rows = g.rows();
  Bits128 all = Bits128::prefix(g.order());
  Bits128 reached{};
  reached.set(0);
  Bits128 frontier = reached;
  while (!frontier.none()) {
    Bits128 next{};
    for_each_bit(frontier, [&](std::size_t u) { next = next | rows[u]; });
    frontier = next & ~reached;
    reached = reached | next;
  }
  return reached == all;
}

std::string_view to_string(TwinKind kind) {
  switch (kind) {
    case TwinKind::kAdjacent:
      return "adjacent";
    case TwinKind::kNonAdjacent:
      return "non-adjacent";
    case TwinKind::kSingleton:
      return "singleton";
  }
  return "?";
}

namespace {

struct KeyLess {
  bool operator()(Bits128 a, Bits128 b) const { return encoding_less(a, b); }
};

}  // namespace

TwinPartition twin_partition(const Graph& g) {
  const std::size_t n = g.order();
  const auto rows = g.rows();

  // Group by closed neighborhood first, then open. A vertex cannot have both
  // an adjacent and a non-adjacent twin in a simple graph.
  std::map<Bits128, Bits128, KeyLess> by_closed;
  std::map<Bits128, Bits128, KeyLess> by_open;
  for (Vertex u = 0; u < n; ++u) {
    Bits128 closed = rows[u];
    closed.set(u);
    by_closed[closed].set(u);
    by_open[rows[u]].set(u);
  }

  std::vector<TwinClass> classes;
  Bits128 assigned{};
  for (Vertex u = 0; u < n; ++u) {
    if (assigned.test(u)) continue;
    Bits128 closed = rows[u];
    closed.set(u);
    TwinClass c{VertexSet(n), TwinKind::kSingleton};
    if (Bits128 grp = by_closed[closed]; grp.count() >= 2) {
      c = {VertexSet::from_bits(n, grp), TwinKind::kAdjacent};
    } else if (Bits128 grp2 = by_open[rows[u]]; grp2.count() >= 2) {
      c = {VertexSet::from_bits(n, grp2), TwinKind::kNonAdjacent};
    } else {
      c.members.insert(u);
    }
    assigned = assigned | c.members.bits();
    classes.push_back(std::move(c));
  }
  return TwinPartition{std::move(classes)};
}

}  // namespace locdom
