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
#include <string>
#include <vector>

#include "locdom/functigraph.hpp"
#include "locdom/generators.hpp"

// Closed-form location-domination numbers for functigraph families, and a
// harness that checks each formula against the exact solver.
namespace locdom::theorems {

// Functigraph of K_n under any map with preimage signature `sig`:
//   constant (k = 1):          2 for n = 2, else 2n - 3
//   bijective (k = n):         n for n <= 3, else n - 1
//   1 < k < n, no matchings:   2n - k - 2
//   1 < k < n, with matchings: 3 for n = 3, else 2n - k - 2
// Throws InputError for n < 2 or a signature that is not a partition of n.
std::size_t predicted_lambda_complete(std::size_t n, const Signature& sig);

// Functigraph of h_graph(n, i) under a constant map whose target has the
// given kind. Throws InputError outside n >= 4, 1 <= i <= n/2, or for a
// saturated target when no saturated vertex exists (n = 2i).
std::size_t predicted_lambda_hi(std::size_t n, std::size_t i, TargetKind target);

// Closed range [lo, hi]; a point when lo == hi.
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  static Interval point(std::size_t v) { return {v, v}; }
  bool is_point() const { return lo == hi; }
  bool contains(std::size_t v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BoundsPrediction {
  Interval range;
  // Attains range.lo: path P_3 with the identity map.
  Functigraph lower_witness;
  // Attains range.hi: the star on n vertices, every vertex sent to the
  // copy-2 center.
  Functigraph upper_witness;
};

// [3, 2n - 2] for every connected base graph of order n >= 3.
BoundsPrediction predicted_bounds_functigraph(std::size_t n);

struct VerifyConfig {
  std::size_t n_max_complete = 7;
  std::size_t n_max_hi = 9;
  std::size_t n_max_bounds = 5;
  bool include_gap_lemma = true;
  std::size_t t_max = 4;
  unsigned threads = 0;  // 0 = default_threads()
};

struct ReportRow {
  std::string case_id;
  std::size_t n = 0;
  std::string params;
  Interval predicted;
  Interval computed;
  bool match = false;
  double millis = 0.0;
  std::string witness;
};

struct Report {
  std::vector<ReportRow> rows;

  std::size_t matched() const;
  std::size_t mismatched() const { return rows.size() - matched(); }
  bool all_match() const { return matched() == rows.size(); }
};

// Runs every sweep enabled by config. Rows come back in a fixed order
// (sweep, then n, then parameters ascending) regardless of scheduling.
Report verify_suite(const VerifyConfig& config);

// CSV with header case_id,n,params,predicted,computed,match,millis.
std::string to_csv(const Report& report);

}  // namespace locdom::theorems
