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

#include <random>

#include "gtest/gtest.h"
#include "locdom/generators.hpp"

namespace locdom::io {
namespace {

std::vector<Vertex> targets_of(const FunctionMap& f) { return {f.targets().begin(), f.targets().end()}; }

TEST(GraphJsonTest, Shape) {
  EXPECT_EQ(graph_to_json(path_graph(3)).dump(), R"({"edges":[[0,1],[1,2]],"n":3})");
}

TEST(GraphJsonTest, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(1 + rng() % 20, rng);
    EXPECT_EQ(graph_from_json(json::parse(graph_to_json(g).dump())), g);
  }
}

TEST(GraphJsonTest, Rejects) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":3})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges":[]})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":3,"edges":[[1,0]]})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":3,"edges":[[0,1],[0,1]]})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":3,"edges":[[0,5]]})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":-1,"edges":[]})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":3,"edges":[[0]]})")), InputError);
  EXPECT_THROW(graph_from_json(json::parse(R"([1,2])")), InputError);
}

TEST(FunctigraphJsonTest, RoundTrip) {
  const Functigraph fg(star_graph(4), constant_map(4, 0));
  const json j = functigraph_to_json(fg);
  EXPECT_EQ(j["map"], json::parse("[0,0,0,0]"));
  const Functigraph back = functigraph_from_json(j);
  EXPECT_EQ(back.base(), fg.base());
  EXPECT_EQ(back.map(), fg.map());
  EXPECT_THROW(functigraph_from_json(json::parse(R"({"base":{"n":2,"edges":[[0,1]]},"map":[0]})")),
               InputError);
}

TEST(EdgeListTest, ParseAndEmit) {
  const Graph g = parse_edge_list("# triangle with a tail\n0 1\n1 2\n2 0\n2 3\n");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(to_edge_list(path_graph(3)), "3\n0 1\n1 2\n");
  EXPECT_EQ(parse_edge_list("5\n0 1\n").order(), 5u);
  EXPECT_THROW(parse_edge_list("0 0\n"), InputError);
  EXPECT_THROW(parse_edge_list("0 1\n1 0\n"), InputError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), InputError);
  EXPECT_THROW(parse_edge_list("a b\n"), InputError);
  EXPECT_THROW(parse_edge_list(""), InputError);
}

TEST(MapSpecTest, Kinds) {
  EXPECT_EQ(targets_of(parse_map_spec("constant:2", 4)), (std::vector<Vertex>{2, 2, 2, 2}));
  EXPECT_EQ(targets_of(parse_map_spec("identity", 3)), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(targets_of(parse_map_spec("perm:2,0,1", 3)), (std::vector<Vertex>{2, 0, 1}));
  EXPECT_EQ(targets_of(parse_map_spec("signature:3,2", 5)), (std::vector<Vertex>{0, 0, 0, 1, 1}));
  EXPECT_THROW(parse_map_spec("constant:4", 4), InputError);
  EXPECT_THROW(parse_map_spec("perm:0,0,1", 3), InputError);
  EXPECT_THROW(parse_map_spec("perm:0,1", 3), InputError);
  EXPECT_THROW(parse_map_spec("signature:2,3", 5), InputError);
  EXPECT_THROW(parse_map_spec("signature:3,1", 5), InputError);
  EXPECT_THROW(parse_map_spec("random", 5), InputError);
  EXPECT_THROW(parse_map_spec("bogus:1", 5), InputError);
}

TEST(ParseInputTest, Detection) {
  const Input a = parse_input(R"({"n":2,"edges":[[0,1]]})");
  EXPECT_EQ(a.graph, complete_graph(2));
  EXPECT_FALSE(a.map.has_value());
  const Input b = parse_input(R"(  {"base":{"n":2,"edges":[[0,1]]},"map":[1,1]})");
  ASSERT_TRUE(b.map.has_value());
  EXPECT_EQ(targets_of(*b.map), (std::vector<Vertex>{1, 1}));
  const Input c = parse_input("0 1\n");
  EXPECT_EQ(c.graph, complete_graph(2));
  EXPECT_THROW(parse_input("{\"n\": 2, "), InputError);
}

TEST(ResultJsonTest, Fields) {
  SolveResult r;
  r.lambda = 2;
  r.witness = VertexSet(3, {0, 1});
  r.stats.sets_tested = 5;
  r.stats.pruned_cardinalities_skipped = 1;
  const json j = solve_result_to_json(r);
  EXPECT_EQ(j["lambda"], 2);
  EXPECT_EQ(j["witness"], json::parse("[0,1]"));
  EXPECT_EQ(j["stats"]["sets_tested"], 5);
  EXPECT_EQ(j["stats"]["pruned_cardinalities_skipped"], 1);
  EXPECT_TRUE(j["stats"]["elapsed_ms"].is_number());
}

TEST(TwinJsonTest, Fields) {
  const json j = twin_partition_to_json(twin_partition(star_graph(3)));
  EXPECT_EQ(j.dump(), R"({"classes":[{"kind":"singleton","members":[0]},{"kind":"non-adjacent","members":[1,2]}]})");
}

TEST(ReportJsonTest, Summary) {
  theorems::Report rep;
  rep.rows.push_back({.case_id = "x", .n = 3, .predicted = {3, 3}, .computed = {3, 3}, .match = true});
  rep.rows.push_back({.case_id = "y", .n = 4, .predicted = {3, 6}, .computed = {7, 7}, .match = false});
  const json j = report_to_json(rep);
  EXPECT_EQ(j["summary"]["total"], 2);
  EXPECT_EQ(j["summary"]["matched"], 1);
  EXPECT_EQ(j["summary"]["mismatched"], 1);
  EXPECT_EQ(j["rows"][1]["predicted"], "[3,6]");
}

}  // namespace
}  // namespace locdom::io
