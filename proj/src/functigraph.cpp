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

#include "locdom/functigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "locdom/error.hpp"

namespace locdom {

FunctionMap::FunctionMap(std::vector<Vertex> targets) : targets_(std::move(targets)) {
  if (targets_.empty()) throw InputError("function map must cover at least one vertex");
  const std::size_t n = targets_.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (targets_[u] >= n) {
      throw InputError("map target " + std::to_string(targets_[u]) + " for vertex " +
                       std::to_string(u) + " outside [0, " + std::to_string(n) + ")");
    }
  }
}

namespace {

Graph join(const Graph& base, const FunctionMap& map) {
  const std::size_t n = base.order();
  if (map.size() != n) {
    throw InputError("map length " + std::to_string(map.size()) + " does not match base order " +
                     std::to_string(n));
  }
  if (!is_connected(base)) throw InputError("functigraph base graph must be connected");
  if (2 * n > kMaxOrder) {
    throw InputError("functigraph of order " + std::to_string(2 * n) + " exceeds maximum " +
                     std::to_string(kMaxOrder));
  }
  std::vector<Edge> edges;
  const auto base_edges = base.edges();
  edges.reserve(2 * base_edges.size() + n);
  for (const auto& [u, v] : base_edges) {
    edges.emplace_back(u, v);
    edges.emplace_back(n + u, n + v);
  }
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, n + map(u));
  return Graph(2 * n, edges);
}

}  // namespace

Functigraph::Functigraph(const Graph& base, FunctionMap map)
    : base_(base), map_(std::move(map)), graph_(join(base_, map_)) {}

std::size_t Signature::total() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

void Signature::validate(std::size_t n) const {
  if (parts.empty()) throw InputError("signature has no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InputError("signature parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw InputError("signature parts must be non-increasing");
  }
  if (total() != n) {
    throw InputError("signature parts sum to " + std::to_string(total()) + ", expected " +
                     std::to_string(n));
  }
}

namespace {

std::vector<std::size_t> preimage_counts(const FunctionMap& f) {
  std::vector<std::size_t> counts(f.size(), 0);
  for (Vertex t : f.targets()) ++counts[t];
  return counts;
}

}  // namespace

Signature preimage_signature(const FunctionMap& f) {
  Signature sig;
  for (std::size_t c : preimage_counts(f)) {
    if (c > 0) sig.parts.push_back(c);
  }
  std::sort(sig.parts.begin(), sig.parts.end(), std::greater<>());
  return sig;
}

FunctiMatchings functi_matchings(const FunctionMap& f) {
  const auto counts = preimage_counts(f);
  const std::size_t n = f.size();
  FunctiMatchings out;
  for (Vertex u = 0; u < n; ++u) {
    if (counts[f(u)] == 1) out.edges.push_back({u, n + f(u)});
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const FunctiMatching& a, const FunctiMatching& b) { return a.copy2 < b.copy2; });
  return out;
}

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kConstant:
      return "constant";
    case FunctionKind::kBijective:
      return "bijective";
    case FunctionKind::kMidNoMatching:
      return "mid-no-matching";
    case FunctionKind::kMidWithMatching:
      return "mid-with-matching";
  }
  return "?";
}

FunctionClass classify(const Signature& sig) {
  const std::size_t n = sig.total();
  const std::size_t k = sig.image_size();
  const auto p = static_cast<std::size_t>(std::count(sig.parts.begin(), sig.parts.end(), 1));
  FunctionKind kind;
  if (k == 1) {
    kind = FunctionKind::kConstant;
  } else if (k == n) {
    kind = FunctionKind::kBijective;
  } else {
    kind = p == 0 ? FunctionKind::kMidNoMatching : FunctionKind::kMidWithMatching;
  }
  return {kind, k, p};
}

FunctionClass classify(const FunctionMap& f) { return classify(preimage_signature(f)); }

}  // namespace locdom
