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

#include <atomic>
#include <cstdlib>
#include <string>

#include "locdom/error.hpp"
#include "locdom/kernels.hpp"

namespace locdom::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("LOCDOM_KERNEL"); env != nullptr && std::string(env) == "scalar") {
    return Isa::kScalar;
  }
  return available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& slot() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "?";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(LOCDOM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa active() { return slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (!available(isa)) {
    throw InputError("trace kernel '" + std::string(to_string(isa)) + "' is not available");
  }
  slot().store(isa, std::memory_order_relaxed);
}

TraceFn resolve(Isa isa) {
#if defined(LOCDOM_HAVE_AVX2)
  if (isa == Isa::kAvx2) return &traces_avx2;
#endif
  (void)isa;
  return &traces_scalar;
}

}  // namespace locdom::kernels
