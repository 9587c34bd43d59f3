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

#include "locdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "locdom/error.hpp"
#include "locdom/kernels.hpp"

namespace locdom {

VertexSet trace(const Graph& g, const VertexSet& L, Vertex u) {
  if (L.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  if (u >= g.order()) throw InputError("vertex " + std::to_string(u) + " out of range");
  if (L.contains(u)) throw InputError("trace is defined only for vertices outside the set");
  return VertexSet::from_bits(g.order(), g.rows()[u] & L.bits());
}

namespace {

// Reusable checker bound to one graph; owns its scratch buffers so each
// worker thread holds its own instance.
class LocatingChecker {
 public:
  explicit LocatingChecker(const Graph& g)
      : rows_(g.rows()),
        all_(Bits128::prefix(g.order())),
        traces_(g.order()),
        kernel_(kernels::resolve(kernels::active())) {
    seen_.reserve(g.order());
  }

  bool operator()(Bits128 members) {
    const std::size_t inside = members.count();
    const std::size_t outside = rows_.size() - inside;
    if (outside == 0) return true;
    // Not enough distinct nonempty subsets of the set to go around.
    if (inside < 64 && outside > (std::uint64_t{1} << inside) - 1) return false;

    if (!kernel_(rows_, members, traces_).none()) return false;

    // Insert traces of outside vertices into a sorted buffer; a repeat
    // aborts immediately.
    seen_.clear();
    bool distinct = true;
    const Bits128 out = all_ & ~members;
    for_each_bit(out, [&](std::size_t u) {
      if (!distinct) return;
      const Bits128 t = traces_[u];
      auto it = std::lower_bound(seen_.begin(), seen_.end(), t, encoding_less);
      if (it != seen_.end() && *it == t) {
        distinct = false;
        return;
      }
      seen_.insert(it, t);
    });
    return distinct;
  }

 private:
  std::span<const Bits128> rows_;
  Bits128 all_;
  std::vector<Bits128> traces_;
  std::vector<Bits128> seen_;
  kernels::TraceFn kernel_;
};

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t num = r * (n - k + i);
    if (r != 0 && num / r != n - k + i) return std::numeric_limits<std::uint64_t>::max();
    r = num / i;
  }
  return r;
}

// Enumerates r-subsets of pool (by position) whose first chosen position
// is `first`, in lexicographic order. Calls visit(bits) until it returns
// true (hit) or `stop()` returns true. Returns the hit, if any.
template <class Visit, class Stop>
std::optional<Bits128> enumerate_with_first(std::span<const Vertex> pool, std::size_t r,
                                            std::size_t first, Bits128 base, Visit&& visit,
                                            Stop&& stop) {
  const std::size_t p = pool.size();
  Bits128 head = base;
  head.set(pool[first]);
  if (r == 1) {
    return visit(head) ? std::optional<Bits128>(head) : std::nullopt;
  }
  // Remaining r - 1 positions chosen from (first, p).
  const std::size_t rest = r - 1;
  std::vector<std::size_t> idx(rest);
  for (std::size_t j = 0; j < rest; ++j) idx[j] = first + 1 + j;
  std::uint32_t tick = 0;
  while (true) {
    if ((++tick & 0x3ff) == 0 && stop()) return std::nullopt;
    Bits128 m = head;
    for (std::size_t j : idx) m.set(pool[j]);
    if (visit(m)) return m;
    // Advance to the next combination.
    std::size_t j = rest;
    while (j > 0 && idx[j - 1] == p - rest + (j - 1)) --j;
    if (j == 0) return std::nullopt;
    ++idx[j - 1];
    for (std::size_t t = j; t < rest; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Searches all sets base ∪ S, S an r-subset of pool, for a locating-
// dominating one. Among hits, returns the one whose leading pool position
// is smallest; within a leading position, the lexicographically first.
std::optional<Bits128> search_cardinality(const Graph& g, std::span<const Vertex> pool,
                                          std::size_t r, Bits128 base, unsigned threads,
                                          std::uint64_t& tested) {
  if (r == 0) {
    LocatingChecker check(g);
    ++tested;
    return check(base) ? std::optional<Bits128>(base) : std::nullopt;
  }
  if (r > pool.size()) return std::nullopt;
  const std::size_t firsts = pool.size() - r + 1;

  constexpr std::uint64_t kParallelThreshold = 4096;
  if (threads <= 1 || binomial(pool.size(), r) < kParallelThreshold) {
    LocatingChecker check(g);
    for (std::size_t first = 0; first < firsts; ++first) {
      auto hit = enumerate_with_first(
          pool, r, first, base,
          [&](Bits128 m) {
            ++tested;
            return check(m);
          },
          [] { return false; });
      if (hit) return hit;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> total{0};
  std::mutex mu;
  std::optional<Bits128> best;

  auto worker = [&] {
    LocatingChecker check(g);
    std::uint64_t local = 0;
    while (true) {
      const std::size_t first = next.fetch_add(1);
      if (first >= firsts || first > best_first.load()) break;
      auto hit = enumerate_with_first(
          pool, r, first, base,
          [&](Bits128 m) {
            ++local;
            return check(m);
          },
          [&] { return best_first.load() < first; });
      if (hit) {
        std::lock_guard lock(mu);
        if (first < best_first.load()) {
          best_first.store(first);
          best = hit;
        }
        break;
      }
    }
    total += local;
  };

  const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(threads, firsts));
  {
    std::vector<std::jthread> pool_threads;
    pool_threads.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool_threads.emplace_back(worker);
  }
  tested += total.load();
  return best;
}

}  // namespace

bool is_locating_dominating(const Graph& g, const VertexSet& L) {
  if (L.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  LocatingChecker check(g);
  return check(L.bits());
}

std::size_t info_lower_bound(std::size_t order) {
  for (std::size_t c = 0;; ++c) {
    if (c >= 63) return c;
    if (order <= c || order - c <= (std::uint64_t{1} << c) - 1) return c;
  }
}

std::size_t twin_lower_bound(const TwinPartition& tp) {
  std::size_t bound = 0;
  for (const auto& c : tp.classes) {
    if (c.members.size() >= 2) bound += c.members.size() - 1;
  }
  return bound;
}

VertexSet forced_set(const TwinPartition& tp, std::size_t order) {
  VertexSet forced(order);
  for (const auto& c : tp.classes) {
    const auto members = c.members.members();
    if (members.size() < 2) continue;
    for (std::size_t j = 0; j + 1 < members.size(); ++j) forced.insert(members[j]);
  }
  return forced;
}

unsigned default_threads() {
  if (const char* env = std::getenv("LD_THREADS"); env != nullptr) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SolveResult lambda_exact(const Graph& g, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  if (n == 0) throw InputError("graph order must be at least 1");
  const unsigned threads = opts.threads == 0 ? default_threads() : opts.threads;

  const TwinPartition tp = twin_partition(g);
  const std::size_t lower = std::max(info_lower_bound(n), twin_lower_bound(tp));

  VertexSet forced(n);
  if (opts.use_twin_pruning) forced = forced_set(tp, n);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (!forced.contains(v)) pool.push_back(v);
  }

  SolveResult result;
  result.stats.pruned_cardinalities_skipped = lower;
  std::optional<Bits128> hit;
  for (std::size_t c = std::max(lower, forced.size()); c <= n && !hit; ++c) {
    hit = search_cardinality(g, pool, c - forced.size(), forced.bits(), threads,
                             result.stats.sets_tested);
    if (hit) result.lambda = c;
  }
  // V(G) is always locating-dominating, so the loop terminates with a hit.
  result.witness = VertexSet::from_bits(n, *hit);

  if (opts.deterministic_witness) {
    std::vector<Vertex> everyone(n);
    for (Vertex v = 0; v < n; ++v) everyone[v] = v;
    auto lex = search_cardinality(g, everyone, result.lambda, Bits128{}, 1, result.stats.sets_tested);
    result.witness = VertexSet::from_bits(n, *lex);
  }
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace locdom
