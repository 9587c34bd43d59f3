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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "locdom/bits.hpp"
#include "locdom/error.hpp"

namespace locdom {

using Vertex = std::size_t;

// A subset of [0, universe) for a graph of order `universe`. Binary set
// operations require both operands to share a universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(check_universe(universe)) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members)
      : universe_(check_universe(universe)) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_ = Bits128::prefix(universe);
    return s;
  }
  static VertexSet from_bits(std::size_t universe, Bits128 bits) {
    VertexSet s(universe);
    s.bits_ = bits & Bits128::prefix(universe);
    return s;
  }

  std::size_t universe() const { return universe_; }
  Bits128 bits() const { return bits_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return v < universe_ && bits_.test(v); }
  void insert(Vertex v) {
    check_vertex(v);
    bits_.set(v);
  }
  void erase(Vertex v) {
    check_vertex(v);
    bits_.reset(v);
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each_bit(bits_, [&](std::size_t i) { out.push_back(i); });
    return out;
  }

  VertexSet complement() const { return from_bits(universe_, ~bits_); }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    same_universe(a, b);
    return from_bits(a.universe_, a.bits_ | b.bits_);
  }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    same_universe(a, b);
    return from_bits(a.universe_, a.bits_ & b.bits_);
  }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    same_universe(a, b);
    return from_bits(a.universe_, a.bits_ & ~b.bits_);
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(*this, other);
    return (bits_ & ~other.bits_).none();
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

  // Lexicographic on the ascending member lists; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    Bits128 x = a.bits_;
    Bits128 y = b.bits_;
    while (!x.none() && !y.none()) {
      const std::size_t mx = lowest(x);
      const std::size_t my = lowest(y);
      if (mx != my) return mx <=> my;
      x.reset(mx);
      y.reset(my);
    }
    return y.none() <=> x.none();
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each_bit(bits_, [&](std::size_t i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    return s + "}";
  }

 private:
  static std::size_t check_universe(std::size_t u) {
    if (u > kMaxOrder) {
      throw InputError("vertex set universe " + std::to_string(u) + " exceeds maximum order " +
                       std::to_string(kMaxOrder));
    }
    return u;
  }
  void check_vertex(Vertex v) const {
    if (v >= universe_) {
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(universe_) + ")");
    }
  }
  static void same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) throw InputError("vertex sets over different universes");
  }
  static std::size_t lowest(Bits128 b) {
    return b.lo != 0 ? static_cast<std::size_t>(std::countr_zero(b.lo))
                     : 64 + static_cast<std::size_t>(std::countr_zero(b.hi));
  }

  std::size_t universe_ = 0;
  Bits128 bits_{};
};

}  // namespace locdom
