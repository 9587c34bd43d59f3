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

#include "locdom/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "locdom/error.hpp"
#include "locdom/generators.hpp"

namespace locdom::io {

namespace {

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < 0) throw InputError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(x);
}

std::size_t parse_uint(std::string_view s, const char* what) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::size_t> parse_uint_list(std::string_view s, const char* what) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_uint(s.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  if (!j.contains("n")) throw InputError("graph JSON is missing \"n\"");
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw InputError("graph JSON needs an \"edges\" array");
  }
  const std::size_t n = as_index(j["n"], "\"n\"");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a [u, v] pair");
    const std::size_t u = as_index(e[0], "edge endpoint");
    const std::size_t v = as_index(e[1], "edge endpoint");
    if (u >= v) {
      throw InputError("edge [" + std::to_string(u) + "," + std::to_string(v) + "] must have u < v");
    }
    if (!seen.insert({u, v}).second) {
      throw InputError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

json functigraph_to_json(const Functigraph& fg) {
  json map = json::array();
  for (Vertex t : fg.map().targets()) map.push_back(t);
  return json{{"base", graph_to_json(fg.base())}, {"map", std::move(map)}};
}

Functigraph functigraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("map")) {
    throw InputError("functigraph JSON needs \"base\" and \"map\"");
  }
  if (!j["map"].is_array()) throw InputError("\"map\" must be an array");
  std::vector<Vertex> targets;
  for (const json& t : j["map"]) targets.push_back(as_index(t, "map target"));
  return Functigraph(graph_from_json(j["base"]), FunctionMap(std::move(targets)));
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t max_index = 0;
  bool any_vertex = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = " on line " + std::to_string(line_no);
    if (tok.size() == 1) {
      if (declared) throw InputError("order declared twice" + where);
      declared = parse_uint(tok[0], "order");
      continue;
    }
    if (tok.size() != 2) throw InputError("expected 'u v'" + where);
    std::size_t u = parse_uint(tok[0], "vertex");
    std::size_t v = parse_uint(tok[1], "vertex");
    if (u == v) throw InputError("self-loop" + where);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw InputError("duplicate edge" + where);
    edges.emplace_back(u, v);
    max_index = std::max(max_index, v);
    any_vertex = true;
  }
  const std::size_t n = declared ? *declared : (any_vertex ? max_index + 1 : 0);
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

FunctionMap parse_map_spec(std::string_view spec, std::size_t n) {
  if (spec == "identity") return identity_map(n);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("map spec '" + std::string(spec) + "' must be kind:args or identity");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (kind == "constant") return constant_map(n, parse_uint(args, "constant target"));
  if (kind == "perm") {
    const auto perm = parse_uint_list(args, "permutation entry");
    if (perm.size() != n) {
      throw InputError("permutation has " + std::to_string(perm.size()) + " entries, graph has " +
                       std::to_string(n) + " vertices");
    }
    return permutation_map(perm);
  }
  if (kind == "signature") {
    Signature sig{parse_uint_list(args, "signature part")};
    sig.validate(n);
    return signature_map(sig);
  }
  throw InputError("unknown map kind '" + std::string(kind) + "'");
}

Input parse_input(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("map")) {
      Functigraph fg = functigraph_from_json(j);
      return Input{fg.base(), fg.map()};
    }
    return Input{graph_from_json(j), std::nullopt};
  }
  return Input{parse_edge_list(text), std::nullopt};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json solve_result_to_json(const SolveResult& r) {
  return json{{"lambda", r.lambda},
              {"witness", r.witness.members()},
              {"stats",
               {{"sets_tested", r.stats.sets_tested},
                {"pruned_cardinalities_skipped", r.stats.pruned_cardinalities_skipped},
                {"elapsed_ms", std::chrono::duration<double, std::milli>(r.stats.elapsed).count()}}}};
}

json twin_partition_to_json(const TwinPartition& tp) {
  json classes = json::array();
  for (const auto& c : tp.classes) {
    classes.push_back({{"kind", std::string(to_string(c.kind))}, {"members", c.members.members()}});
  }
  return json{{"classes", std::move(classes)}};
}

json report_to_json(const theorems::Report& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"case_id", r.case_id},
                    {"n", r.n},
                    {"params", r.params},
                    {"predicted", r.predicted.to_string()},
                    {"computed", r.computed.to_string()},
                    {"match", r.match},
                    {"millis", r.millis},
                    {"witness", r.witness}});
  }
  return json{{"rows", std::move(rows)},
              {"summary",
               {{"total", report.rows.size()},
                {"matched", report.matched()},
                {"mismatched", report.mismatched()}}}};
}

}  // namespace locdom::io
