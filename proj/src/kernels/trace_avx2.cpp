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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstdint>

#include "locdom/kernels.hpp"

namespace locdom::kernels {

namespace {

// movemask of a 64-bit-lane zero compare over two rows -> 2-bit row mask.
// Lanes 0,1 belong to the first row, lanes 2,3 to the second; a row is
// empty when both of its lanes compare equal to zero.
inline std::uint64_t empty_pair(__m256i t) {
  const __m256i zero = _mm256_setzero_si256();
  const int m = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(t, zero)));
  const int both = m & (m >> 1);
  return static_cast<std::uint64_t>((both & 1) | ((both >> 1) & 2));
}

}  // namespace

Bits128 traces_avx2(std::span<const Bits128> rows, Bits128 members, std::span<Bits128> traces) {
  const std::size_t n = rows.size();
  const __m128i m128 = _mm_set_epi64x(static_cast<long long>(members.hi),
                                      static_cast<long long>(members.lo));
  const __m256i m = _mm256_broadcastsi128_si256(m128);

  const auto* src = reinterpret_cast<const __m256i*>(rows.data());
  auto* dst = reinterpret_cast<__m256i*>(traces.data());

  Bits128 empty{};
  std::size_t u = 0;
  for (; u + 4 <= n; u += 4) {
    const __m256i a = _mm256_and_si256(_mm256_loadu_si256(src + u / 2), m);
    const __m256i b = _mm256_and_si256(_mm256_loadu_si256(src + u / 2 + 1), m);
    _mm256_storeu_si256(dst + u / 2, a);
    _mm256_storeu_si256(dst + u / 2 + 1, b);
    const std::uint64_t e = empty_pair(a) | (empty_pair(b) << 2);
    if (u < 64) {
      empty.lo |= e << u;
    } else {
      empty.hi |= e << (u - 64);
    }
  }
  for (; u < n; ++u) {
    const Bits128 t = rows[u] & members;
    traces[u] = t;
    if (t.none()) empty.set(u);
  }
  return empty & ~members;
}

}  // namespace locdom::kernels
