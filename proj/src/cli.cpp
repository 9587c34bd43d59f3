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

#include "locdom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "locdom/error.hpp"
#include "locdom/generators.hpp"
#include "locdom/io.hpp"
#include "locdom/solver.hpp"
#include "locdom/theorems.hpp"

namespace locdom::cli {

namespace {

struct GraphArgs {
  std::string graph_path = "-";
  std::string map_spec;
  bool functigraph = false;
  bool json = false;
};

void add_graph_options(CLI::App* sub, GraphArgs& a) {
  sub->add_option("--graph", a.graph_path, "Graph or functigraph file (JSON or edge list); '-' for stdin");
  sub->add_option("--map", a.map_spec,
                  "Build the functigraph with this map: constant:<v>, perm:<list>, signature:<list>, identity");
  sub->add_flag("--functigraph", a.functigraph, "Require a functigraph (map from the file or --map)");
  sub->add_flag("--json", a.json, "Emit JSON");
}

// The graph the command operates on: the functigraph when a map is present.
Graph load_target(const GraphArgs& a, std::istream& in) {
  std::string text;
  if (a.graph_path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = io::read_file(a.graph_path);
  }
  io::Input input = io::parse_input(text);
  if (!a.map_spec.empty()) {
    if (input.map) throw InputError("--map given for an input that already carries a map");
    input.map = io::parse_map_spec(a.map_spec, input.graph.order());
  }
  if (a.functigraph && !input.map) throw InputError("--functigraph needs a map (in the file or via --map)");
  if (input.map) return Functigraph(input.graph, *input.map).graph();
  return input.graph;
}

void print_result(const SolveResult& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << io::solve_result_to_json(r).dump() << "\n";
    return;
  }
  out << "lambda=" << r.lambda << "\n"
      << "witness=" << r.witness.to_string() << "\n"
      << "sets_tested=" << r.stats.sets_tested << "\n";
}

void write_to(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << data;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact locating-dominating sets for graphs and functigraphs", "locdom"};
  app.require_subcommand(1);

  GraphArgs lambda_args;
  bool no_prune = false;
  bool deterministic = false;
  auto* lambda_cmd = app.add_subcommand("lambda", "Location-domination number (pruned exact search)");
  add_graph_options(lambda_cmd, lambda_args);
  lambda_cmd->add_flag("--no-prune", no_prune, "Disable twin-class pruning");
  lambda_cmd->add_flag("--deterministic-witness", deterministic, "Return the lexicographically least witness");

  GraphArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Location-domination number (unpruned reference)");
  add_graph_options(oracle_cmd, oracle_args);

  GraphArgs twins_args;
  auto* twins_cmd = app.add_subcommand("twins", "Maximal twin classes");
  add_graph_options(twins_cmd, twins_args);

  std::string family;
  std::size_t gen_n = 0;
  std::size_t gen_i = 0;
  std::size_t gen_t = 0;
  std::string gen_out = "-";
  std::string gen_format = "json";
  auto* gen_cmd = app.add_subcommand("gen", "Emit a family graph");
  gen_cmd->add_option("--family", family, "complete|star|path|cycle|pendant_gap|h_graph")->required();
  gen_cmd->add_option("--n", gen_n, "Order");
  gen_cmd->add_option("--i", gen_i, "Removed matching size (h_graph)");
  gen_cmd->add_option("--t", gen_t, "Gap parameter (pendant_gap)");
  gen_cmd->add_option("-o,--output", gen_out, "Output file; '-' for stdout");
  gen_cmd->add_option("--format", gen_format, "json|edges")->check(CLI::IsMember({"json", "edges"}));

  theorems::VerifyConfig vc;
  bool no_gap = false;
  std::string csv_path;
  std::string json_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check every closed-form prediction against the solver");
  verify_cmd->add_option("--nmax-complete", vc.n_max_complete, "Largest complete-graph order");
  verify_cmd->add_option("--nmax-hi", vc.n_max_hi, "Largest h_graph order");
  verify_cmd->add_option("--nmax-bounds", vc.n_max_bounds, "Largest order for the exhaustive bounds sweep");
  verify_cmd->add_option("--gap-tmax", vc.t_max, "Largest pendant gap parameter");
  verify_cmd->add_flag("--no-gap", no_gap, "Skip the pendant gap sweep");
  verify_cmd->add_option("--csv", csv_path, "Write the report as CSV ('-' for stdout)");
  verify_cmd->add_option("--json", json_path, "Write the report as JSON ('-' for stdout)");

  std::vector<const char*> argv{"locdom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*lambda_cmd) {
      SolveOptions opts;
      opts.use_twin_pruning = !no_prune;
      opts.deterministic_witness = deterministic;
      print_result(lambda_exact(load_target(lambda_args, in), opts), lambda_args.json, out);
      return kExitOk;
    }
    if (*oracle_cmd) {
      print_result(lambda_oracle(load_target(oracle_args, in)), oracle_args.json, out);
      return kExitOk;
    }
    if (*twins_cmd) {
      const TwinPartition tp = twin_partition(load_target(twins_args, in));
      if (twins_args.json) {
        out << io::twin_partition_to_json(tp).dump() << "\n";
      } else {
        for (const auto& c : tp.classes) out << to_string(c.kind) << " " << c.members.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*gen_cmd) {
      FamilySpec spec{parse_family(family), gen_n, gen_i, gen_t};
      const Graph g = make_family(spec);
      write_to(gen_out, gen_format == "json" ? io::graph_to_json(g).dump() + "\n" : io::to_edge_list(g), out);
      return kExitOk;
    }
    if (*verify_cmd) {
      vc.include_gap_lemma = !no_gap;
      const theorems::Report report = theorems::verify_suite(vc);
      if (!csv_path.empty()) write_to(csv_path, theorems::to_csv(report), out);
      if (!json_path.empty()) write_to(json_path, io::report_to_json(report).dump(2) + "\n", out);
      std::ostream& summary = (csv_path == "-" || json_path == "-") ? err : out;
      for (const auto& r : report.rows) {
        if (!r.match) {
          summary << "MISMATCH " << r.case_id << " n=" << r.n << " " << r.params
                  << " predicted=" << r.predicted.to_string() << " computed=" << r.computed.to_string()
                  << " witness=" << r.witness << "\n";
        }
      }
      summary << "verify: " << report.matched() << "/" << report.rows.size() << " rows match\n";
      return report.all_match() ? kExitOk : kExitMismatch;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace locdom::cli
