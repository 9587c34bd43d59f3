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
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

// f: V(G1) -> V(G2) for a base graph of order n. targets[u] is the copy-2
// index hit by copy-1 vertex u. Not required to be injective or surjective.
class FunctionMap {
 public:
  explicit FunctionMap(std::vector<Vertex> targets);

  std::size_t size() const { return targets_.size(); }
  Vertex operator()(Vertex u) const { return targets_[u]; }
  std::span<const Vertex> targets() const { return targets_; }

  friend bool operator==(const FunctionMap&, const FunctionMap&) = default;

 private:
  std::vector<Vertex> targets_;
};

// Two copies of a base graph joined by the cross edges u -- n + f(u).
// Copy 1 occupies [0, n), copy 2 occupies [n, 2n).
class Functigraph {
 public:
  // Throws InputError when the map length differs from the base order or
  // the base graph is disconnected.
  Functigraph(const Graph& base, FunctionMap map);

  const Graph& graph() const { return graph_; }
  const Graph& base() const { return base_; }
  const FunctionMap& map() const { return map_; }
  std::size_t base_order() const { return base_.order(); }

  Vertex copy1(Vertex u) const { return u; }
  Vertex copy2(Vertex v) const { return base_order() + v; }

 private:
  Graph base_;
  FunctionMap map_;
  Graph graph_;
};

inline Functigraph build_functigraph(const Graph& base, FunctionMap map) {
  return Functigraph(base, std::move(map));
}

// Preimage sizes over the image, non-increasing; parts sum to n.
struct Signature {
  std::vector<std::size_t> parts;

  std::size_t image_size() const { return parts.size(); }
  std::size_t total() const;
  // Throws InputError unless parts are positive, non-increasing and sum to n.
  void validate(std::size_t n) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature preimage_signature(const FunctionMap& f);

// A cross edge (u, n + v) where u is the only preimage of v.
struct FunctiMatching {
  Vertex copy1;
  Vertex copy2;

  friend bool operator==(const FunctiMatching&, const FunctiMatching&) = default;
};

struct FunctiMatchings {
  std::vector<FunctiMatching> edges;  // ascending by copy-2 endpoint
  std::size_t count() const { return edges.size(); }
};

FunctiMatchings functi_matchings(const FunctionMap& f);

enum class FunctionKind { kConstant, kBijective, kMidNoMatching, kMidWithMatching };

std::string_view to_string(FunctionKind kind);

struct FunctionClass {
  FunctionKind kind;
  std::size_t image_size;  // k
  std::size_t matchings;   // p
};

FunctionClass classify(const FunctionMap& f);
FunctionClass classify(const Signature& sig);

}  // namespace locdom
