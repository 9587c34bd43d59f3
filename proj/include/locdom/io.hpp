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

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "locdom/functigraph.hpp"
#include "locdom/graph.hpp"
#include "locdom/solver.hpp"
#include "locdom/theorems.hpp"

// File formats:
//   Graph JSON        {"n": 5, "edges": [[0,1],[1,2]]}   u < v, no repeats
//   Functigraph JSON  {"base": <Graph JSON>, "map": [t_0, ..., t_{n-1}]}
//   Edge list text    one "u v" pair per line, '#' starts a comment; an
//                     optional line holding a single integer fixes the
//                     order (otherwise max index + 1)
// All parsers throw InputError on malformed input.
namespace locdom::io {

using json = nlohmann::json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json functigraph_to_json(const Functigraph& fg);
Functigraph functigraph_from_json(const json& j);

Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// "constant:<v>", "perm:<a,b,...>", "signature:<s1,s2,...>", "identity".
FunctionMap parse_map_spec(std::string_view spec, std::size_t n);

// A graph, plus a map when the input was a functigraph document.
struct Input {
  Graph graph;
  std::optional<FunctionMap> map;
};

// JSON when the first non-blank character is '{', otherwise edge list. A
// JSON document with a "map" key is read as a functigraph.
Input parse_input(std::string_view text);

std::string read_file(const std::string& path);

json solve_result_to_json(const SolveResult& r);
json twin_partition_to_json(const TwinPartition& tp);
json report_to_json(const theorems::Report& report);

}  // namespace locdom::io
