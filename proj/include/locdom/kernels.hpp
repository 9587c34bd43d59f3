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

#include <span>
#include <string_view>

#include "locdom/bits.hpp"

// Inner loop of every locating-domination test: intersect each adjacency
// row with the candidate set and find outside vertices whose intersection
// is empty. A scalar reference and vector variants share one signature;
// the active variant is chosen once at startup from the CPU's features.
namespace locdom::kernels {

// For every u < rows.size(): traces[u] = rows[u] & members.
// Returns the set of vertices u with u not in members and traces[u] empty
// (the undominated outside vertices). traces.size() must be >= rows.size().
using TraceFn = Bits128 (*)(std::span<const Bits128> rows, Bits128 members,
                            std::span<Bits128> traces);

Bits128 traces_scalar(std::span<const Bits128> rows, Bits128 members, std::span<Bits128> traces);

#if defined(LOCDOM_HAVE_AVX2)
Bits128 traces_avx2(std::span<const Bits128> rows, Bits128 members, std::span<Bits128> traces);
#endif

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

// True if the variant was compiled in and the running CPU supports it.
bool available(Isa isa);

// Variant in use. Defaults to the widest available one; the environment
// variable LOCDOM_KERNEL=scalar forces the reference path.
Isa active();

// Overrides the active variant (tests and benchmarks). Throws InputError
// if unavailable.
void set_active(Isa isa);

TraceFn resolve(Isa isa);

inline Bits128 traces(std::span<const Bits128> rows, Bits128 members, std::span<Bits128> out) {
  return resolve(active())(rows, members, out);
}

}  // namespace locdom::kernels
