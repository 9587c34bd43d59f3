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

#include <bit>
#include <cstddef>
#include <cstdint>

namespace locdom {

inline constexpr std::size_t kMaxOrder = 128;

// Fixed-width 128-bit word pair. This is the in-memory layout shared by
// VertexSet, graph adjacency rows and the trace kernels; keep it a
// 16-byte standard-layout aggregate so rows can be loaded as vectors.
struct alignas(16) Bits128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  constexpr bool test(std::size_t i) const {
    return i < 64 ? ((lo >> i) & 1u) != 0 : ((hi >> (i - 64)) & 1u) != 0;
  }
  constexpr void set(std::size_t i) {
    if (i < 64) {
      lo |= std::uint64_t{1} << i;
    } else {
      hi |= std::uint64_t{1} << (i - 64);
    }
  }
  constexpr void reset(std::size_t i) {
    if (i < 64) {
      lo &= ~(std::uint64_t{1} << i);
    } else {
      hi &= ~(std::uint64_t{1} << (i - 64));
    }
  }
  constexpr bool none() const { return (lo | hi) == 0; }
  constexpr std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi));
  }

  // Mask with bits [0, n) set.
  static constexpr Bits128 prefix(std::size_t n) {
    Bits128 b;
    if (n >= 128) {
      b.lo = b.hi = ~std::uint64_t{0};
    } else if (n >= 64) {
      b.lo = ~std::uint64_t{0};
      b.hi = n == 64 ? 0 : (~std::uint64_t{0} >> (128 - n));
    } else {
      b.lo = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    }
    return b;
  }

  friend constexpr Bits128 operator&(Bits128 a, Bits128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend constexpr Bits128 operator|(Bits128 a, Bits128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend constexpr Bits128 operator^(Bits128 a, Bits128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  friend constexpr Bits128 operator~(Bits128 a) { return {~a.lo, ~a.hi}; }
  friend constexpr bool operator==(Bits128 a, Bits128 b) = default;
};

static_assert(sizeof(Bits128) == 16);

// Total order on the raw encoding (hi word first). Used only for sorting
// traces; not the lexicographic order on member lists.
constexpr bool encoding_less(Bits128 a, Bits128 b) {
  return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
}

// Calls fn(i) for every set bit, ascending.
template <class Fn>
constexpr void for_each_bit(Bits128 b, Fn&& fn) {
  for (std::uint64_t w = b.lo; w != 0; w &= w - 1) {
    fn(static_cast<std::size_t>(std::countr_zero(w)));
  }
  for (std::uint64_t w = b.hi; w != 0; w &= w - 1) {
    fn(static_cast<std::size_t>(64 + std::countr_zero(w)));
  }
}

}  // namespace locdom
