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

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "locdom/bits.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on dense vertex indices [0, order).
// Adjacency is stored as one 128-bit row per vertex.
class Graph {
 public:
  // Throws InputError for order 0 or above kMaxOrder, self-loops,
  // out-of-range endpoints. Repeated edges are merged; strict file
  // parsers reject them before reaching here.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) pairs with u < v, sorted.
  std::vector<Edge> edges() const;

  std::span<const Bits128> rows() const { return rows_; }

  // Relabels vertex u as perm[u].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  Graph() = default;
  void check_vertex(Vertex u) const;

  std::vector<Bits128> rows_;
};

// N(u) when closed is false, N[u] otherwise.
VertexSet neighborhood(const Graph& g, Vertex u, bool closed);

bool is_connected(const Graph& g);

enum class TwinKind { kAdjacent, kNonAdjacent, kSingleton };

std::string_view to_string(TwinKind kind);

struct TwinClass {
  VertexSet members;
  TwinKind kind;

  friend bool operator==(const TwinClass&, const TwinClass&) = default;
};

// Maximal twin classes, ordered by smallest member. Every vertex lies in
// exactly one class.
struct TwinPartition {
  std::vector<TwinClass> classes;

  friend bool operator==(const TwinPartition&, const TwinPartition&) = default;
};

TwinPartition twin_partition(const Graph& g);

}  // namespace locdom
