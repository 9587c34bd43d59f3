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
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "locdom/functigraph.hpp"
#include "locdom/graph.hpp"

namespace locdom {

enum class Family { kComplete, kStar, kPath, kCycle, kPendantGap, kHGraph };

std::string_view to_string(Family f);
// Accepts the names printed by to_string ("complete", "star", "path",
// "cycle", "pendant_gap", "h_graph"). Throws InputError otherwise.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family kind = Family::kComplete;
  std::size_t n = 0;  // complete, star, path, cycle, h_graph
  std::size_t i = 0;  // h_graph
  std::size_t t = 0;  // pendant_gap
};

Graph make_family(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
// Center is vertex 0.
Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);
// n >= 3.
Graph cycle_graph(std::size_t n);

// Path 0-1-2 with t - 1 pendants 3..t+1 hanging off vertex 0.
Graph pendant_gap_graph(std::size_t t);

// K_n minus the matching {0,1},{2,3},...,{2i-2,2i-1}. Pair j (0-based) is
// the non-adjacent twin pair {2j, 2j+1}; vertices 2i..n-1 stay saturated.
Graph h_graph(std::size_t n, std::size_t i);

// Copy-2 target kind of a constant map on h_graph(n, i).
enum class TargetKind { kSaturated, kTwinPair };
std::string_view to_string(TargetKind k);
TargetKind h_graph_target_kind(std::size_t i, Vertex target);

FunctionMap constant_map(std::size_t n, Vertex target);
FunctionMap identity_map(std::size_t n);
FunctionMap permutation_map(std::span<const Vertex> perm);
// Block [0, s_1) maps to 0, the next s_2 vertices to 1, and so on.
FunctionMap signature_map(const Signature& sig);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Signature> partitions(std::size_t n);

// Calls fn for every map [0,n) -> [0,n) in lexicographic order of targets.
void for_each_map(std::size_t n, const std::function<void(const FunctionMap&)>& fn);

// Connected graphs on n vertices. Labeled enumeration covers n <= 7;
// isomorphism-class representatives (minimal adjacency code) n <= 6.
std::vector<Graph> connected_graphs(std::size_t n, bool up_to_isomorphism);

// Uniform over labeled connected graphs when p = 0.5 (rejection sampling
// on G(n, p)).
Graph random_connected_graph(std::size_t n, std::mt19937_64& rng, double p = 0.5);

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace locdom
