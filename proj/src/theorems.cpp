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

#include "locdom/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "locdom/error.hpp"
#include "locdom/solver.hpp"

namespace locdom::theorems {

std::size_t predicted_lambda_complete(std::size_t n, const Signature& sig) {
  if (n < 2) throw InputError("complete-graph prediction needs n >= 2");
  sig.validate(n);
  const FunctionClass fc = classify(sig);
  const std::size_t k = fc.image_size;
  switch (fc.kind) {
    case FunctionKind::kConstant:
      return n == 2 ? 2 : 2 * n - 3;
    case FunctionKind::kBijective:
      return n <= 3 ? n : n - 1;
    case FunctionKind::kMidNoMatching:
      // 1 < k < n with every part >= 2 already forces n >= 4.
      return 2 * n - k - 2;
    case FunctionKind::kMidWithMatching:
      // The only n = 3 instance with 1 < k < n is (2,1), which has a matching.
      return n == 3 ? 3 : 2 * n - k - 2;
  }
  throw std::logic_error("unhandled function class");
}

std::size_t predicted_lambda_hi(std::size_t n, std::size_t i, TargetKind target) {
  if (n < 4) throw InputError("h_graph prediction needs n >= 4");
  if (i < 1 || i > n / 2) throw InputError("h_graph prediction needs 1 <= i <= floor(n/2)");
  if (target == TargetKind::kSaturated && n <= 2 * i) {
    throw InputError("h_graph(" + std::to_string(n) + "," + std::to_string(i) +
                     ") has no saturated vertex");
  }
  // n = 4 is its own case; the general saturated formula would give 3 at i = 1.
  if (n == 4) return 4;
  if (i + 1 <= n / 2) return target == TargetKind::kSaturated ? 2 * n - 2 * i - 3 : 2 * n - 2 * i - 2;
  return n % 2 == 0 ? n - 1 : 2 * (n / 2);
}

std::string Interval::to_string() const {
  if (is_point()) return std::to_string(lo);
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

BoundsPrediction predicted_bounds_functigraph(std::size_t n) {
  if (n < 3) throw InputError("functigraph bounds need n >= 3");
  return BoundsPrediction{Interval{3, 2 * n - 2}, Functigraph(path_graph(3), identity_map(3)),
                          Functigraph(star_graph(n), constant_map(n, 0))};
}

std::size_t Report::matched() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.match; }));
}

namespace {

using Task = std::function<ReportRow()>;

SolveResult solve(const Graph& g) {
  SolveOptions opts;
  opts.threads = 1;
  opts.deterministic_witness = true;
  return lambda_exact(g, opts);
}

std::string signature_string(const Signature& sig) {
  std::string s = "(";
  for (std::size_t j = 0; j < sig.parts.size(); ++j) {
    if (j > 0) s += ",";
    s += std::to_string(sig.parts[j]);
  }
  return s + ")";
}

std::string complete_case_id(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kConstant:
      return "complete-constant";
    case FunctionKind::kBijective:
      return "complete-bijective";
    case FunctionKind::kMidNoMatching:
      return "complete-mid-no-matching";
    case FunctionKind::kMidWithMatching:
      return "complete-mid-matching";
  }
  return "complete";
}

std::string hi_case_id(std::size_t n, std::size_t i, TargetKind kind) {
  if (n == 4) return "hi-n4";
  if (i + 1 <= n / 2) return kind == TargetKind::kSaturated ? "hi-saturated" : "hi-twin-pair";
  return n % 2 == 0 ? "hi-even-half" : "hi-odd-half";
}

ReportRow point_row(std::string id, std::size_t n, std::string params, std::size_t predicted,
                    const SolveResult& r) {
  ReportRow row;
  row.case_id = std::move(id);
  row.n = n;
  row.params = std::move(params);
  row.predicted = Interval::point(predicted);
  row.computed = Interval::point(r.lambda);
  row.match = row.predicted == row.computed;
  row.witness = r.witness.to_string();
  return row;
}

void add_complete_sweep(std::vector<Task>& tasks, std::size_t n_max) {
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const Signature& sig : partitions(n)) {
      tasks.push_back([n, sig] {
        const Functigraph fg(complete_graph(n), signature_map(sig));
        const FunctionClass fc = classify(sig);
        return point_row(complete_case_id(fc.kind), n,
                         "sig=" + signature_string(sig) + " k=" + std::to_string(fc.image_size) +
                             " p=" + std::to_string(fc.matchings),
                         predicted_lambda_complete(n, sig), solve(fg.graph()));
      });
    }
  }
}

// Matching-count lower bound and the equality-iff-k=n-1 property, both for
// K_n with n >= 4. Both follow from the 1 < k < n analysis and hold for
// every non-bijective map; bijective maps are excluded because there
// lambda = n - 1 while p = n and lambda(K_n) = n - 1 as well.
void add_corollary_sweep(std::vector<Task>& tasks, std::size_t n_max) {
  for (std::size_t n = 4; n <= n_max; ++n) {
    for (const Signature& sig : partitions(n)) {
      if (sig.image_size() == n) continue;
      tasks.push_back([n, sig] {
        const Functigraph fg(complete_graph(n), signature_map(sig));
        const FunctionClass fc = classify(sig);
        const SolveResult r = solve(fg.graph());
        ReportRow row;
        row.case_id = "corollary-matching-bound";
        row.n = n;
        row.params = "sig=" + signature_string(sig) + " p=" + std::to_string(fc.matchings);
        row.predicted = Interval{fc.matchings, 2 * n};
        row.computed = Interval::point(r.lambda);
        row.match = row.predicted.contains(row.computed);
        row.witness = r.witness.to_string();
        return row;
      });
      tasks.push_back([n, sig] {
        const Functigraph fg(complete_graph(n), signature_map(sig));
        const FunctionClass fc = classify(sig);
        const SolveResult rf = solve(fg.graph());
        const SolveResult rg = solve(complete_graph(n));
        ReportRow row;
        row.case_id = "corollary-equal-iff";
        row.n = n;
        row.params = "sig=" + signature_string(sig) + " k=" + std::to_string(fc.image_size) +
                     " flag=lambda(G)==lambda(F)";
        row.predicted = Interval::point(fc.image_size == n - 1 ? 1 : 0);
        row.computed = Interval::point(rg.lambda == rf.lambda ? 1 : 0);
        row.match = row.predicted == row.computed;
        row.witness = rf.witness.to_string();
        return row;
      });
    }
  }
}

void add_hi_sweep(std::vector<Task>& tasks, std::size_t n_max) {
  for (std::size_t n = 4; n <= n_max; ++n) {
    for (std::size_t i = 1; i <= n / 2; ++i) {
      for (Vertex target = 0; target < n; ++target) {
        tasks.push_back([n, i, target] {
          const TargetKind kind = h_graph_target_kind(i, target);
          const Functigraph fg(h_graph(n, i), constant_map(n, target));
          return point_row(hi_case_id(n, i, kind), n,
                           "i=" + std::to_string(i) + " target=" + std::to_string(target) +
                               " kind=" + std::string(to_string(kind)),
                           predicted_lambda_hi(n, i, kind), solve(fg.graph()));
        });
      }
    }
  }
}

void add_bounds_sweep(std::vector<Task>& tasks, std::size_t n_max_bounds, std::size_t n_max_sharp) {
  for (std::size_t n = 3; n <= n_max_bounds; ++n) {
    const auto bases = connected_graphs(n, /*up_to_isomorphism=*/true);
    for (std::size_t gi = 0; gi < bases.size(); ++gi) {
      tasks.push_back([n, gi, base = bases[gi]] {
        Interval seen{~std::size_t{0}, 0};
        std::string witness;
        for_each_map(n, [&](const FunctionMap& f) {
          const SolveResult r = solve(Functigraph(base, f).graph());
          seen.lo = std::min(seen.lo, r.lambda);
          if (r.lambda >= seen.hi) {
            seen.hi = r.lambda;
            witness = r.witness.to_string();
          }
        });
        ReportRow row;
        row.case_id = "bounds-range";
        row.n = n;
        row.params = "base=" + std::to_string(gi) + " edges=" + std::to_string(base.edge_count()) +
                     " maps=all";
        row.predicted = predicted_bounds_functigraph(n).range;
        row.computed = seen;
        row.match = row.predicted.contains(row.computed);
        row.witness = witness;
        return row;
      });
    }
  }
  tasks.push_back([] {
    const BoundsPrediction b = predicted_bounds_functigraph(3);
    return point_row("bounds-sharp-lower", 3, "base=path(3) map=identity", b.range.lo,
                     solve(b.lower_witness.graph()));
  });
  for (std::size_t n = 3; n <= n_max_sharp; ++n) {
    tasks.push_back([n] {
      const BoundsPrediction b = predicted_bounds_functigraph(n);
      return point_row("bounds-sharp-upper", n, "base=star(" + std::to_string(n) + ") map=constant:0",
                       b.range.hi, solve(b.upper_witness.graph()));
    });
  }
}

void add_gap_sweep(std::vector<Task>& tasks, std::size_t t_max) {
  for (std::size_t t = 2; t <= t_max; ++t) {
    tasks.push_back([t] {
      const Graph g = pendant_gap_graph(t);
      return point_row("gap-base", g.order(), "t=" + std::to_string(t), t, solve(g));
    });
    tasks.push_back([t] {
      const Graph g = pendant_gap_graph(t);
      const Functigraph fg(g, constant_map(g.order(), 0));
      return point_row("gap-functigraph", g.order(), "t=" + std::to_string(t) + " map=constant:0",
                       2 * t, solve(fg.graph()));
    });
  }
}

void check_config(const VerifyConfig& c) {
  if (c.n_max_complete > 10) throw InputError("--nmax-complete is limited to 10");
  if (c.n_max_hi > 12) throw InputError("--nmax-hi is limited to 12");
  if (c.n_max_bounds > 6) throw InputError("--nmax-bounds is limited to 6");
  if (c.t_max > 20) throw InputError("--gap-tmax is limited to 20");
}

}  // namespace

Report verify_suite(const VerifyConfig& config) {
  check_config(config);
  std::vector<Task> tasks;
  add_complete_sweep(tasks, config.n_max_complete);
  add_corollary_sweep(tasks, config.n_max_complete);
  add_hi_sweep(tasks, config.n_max_hi);
  if (config.n_max_bounds >= 3) {
    add_bounds_sweep(tasks, config.n_max_bounds, std::max<std::size_t>(config.n_max_bounds, config.n_max_complete));
  }
  if (config.include_gap_lemma) add_gap_sweep(tasks, config.t_max);

  Report report;
  report.rows.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next.fetch_add(1); j < tasks.size(); j = next.fetch_add(1)) {
      const auto start = std::chrono::steady_clock::now();
      ReportRow row = tasks[j]();
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.rows[j] = std::move(row);
    }
  };
  const unsigned threads = config.threads == 0 ? default_threads() : config.threads;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < std::max(1u, threads); ++t) workers.emplace_back(worker);
  }
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "case_id,n,params,predicted,computed,match,millis\n";
  for (const ReportRow& r : report.rows) {
    char millis[32];
    std::snprintf(millis, sizeof(millis), "%.3f", r.millis);
    os << csv_field(r.case_id) << ',' << r.n << ',' << csv_field(r.params) << ','
       << csv_field(r.predicted.to_string()) << ',' << csv_field(r.computed.to_string()) << ','
       << (r.match ? "true" : "false") << ',' << millis << '\n';
  }
  return os.str();
}

}  // namespace locdom::theorems
