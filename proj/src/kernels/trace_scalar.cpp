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

#include "locdom/kernels.hpp"

namespace locdom::kernels {

Bits128 traces_scalar(std::span<const Bits128> rows, Bits128 members, std::span<Bits128> traces) {
  Bits128 empty{};
  for (std::size_t u = 0; u < rows.size(); ++u) {
    const Bits128 t = rows[u] & members;
    traces[u] = t;
    if (t.none()) empty.set(u);
  }
  return empty & ~members;
}

}  // namespace locdom::kernels
