// Copyright 2026 The tdv Authors
//
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

#include "tdv/solver.hpp"

#include <atomic>
#include <bit>
#include <thread>

#include "tdv/errors.hpp"

namespace tdv {

namespace {

// Bits 0..h inclusive.
constexpr std::uint64_t mask_through(int h) {
  return h >= 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (h + 1)) - 1);
}

// Bits lo..63.
constexpr std::uint64_t mask_from(int lo) {
  return lo >= 64 ? 0 : (~std::uint64_t{0} << lo);
}

// Depth-first enumeration of the k-subsets (as bit masks over 0-based
// vertex indices) that totally dominate the graph, restricted to subsets
// whose smallest element is a fixed leading vertex. Members are chosen in
// increasing order, so completed sets appear in lexicographic order of
// their ascending member lists.
//
// Pruning: the lowest vertex u not yet dominated must receive a neighbor
// from the remaining (strictly increasing) picks, so the next pick can be
// at most the highest remaining neighbor of u; when one pick is left it
// must be a common neighbor of everything still undominated.
struct Enumerator {
  const std::uint64_t* adj;
  int n;
  std::uint64_t full;
  bool record_sets;

  std::uint64_t count = 0;
  std::uint64_t* per_vertex;              // length n
  std::vector<std::uint64_t>* sets;

  void found(std::uint64_t chosen) {
    ++count;
    for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) {
      ++per_vertex[std::countr_zero(rest)];
    }
    if (record_sets) sets->push_back(chosen);
  }

  void extend(std::uint64_t chosen, std::uint64_t dominated, int picks_left,
              int next_min) {
    if (picks_left == 0) {
      if (dominated == full) found(chosen);
      return;
    }
    const std::uint64_t range = mask_from(next_min) & full;
    std::uint64_t candidates;
    const std::uint64_t undominated = full & ~dominated;
    if (undominated != 0) {
      const int u = std::countr_zero(undominated);
      const std::uint64_t helpers = adj[u] & range;
      if (helpers == 0) return;
      candidates = range & mask_through(63 - std::countl_zero(helpers));
      if (picks_left == 1) {
        for (std::uint64_t rest = undominated; rest != 0 && candidates != 0;
             rest &= rest - 1) {
          candidates &= adj[std::countr_zero(rest)];
        }
        if (candidates == 0) return;
      }
    } else {
      // Already a dominating superset; only reachable while probing a k
      // below the optimum, where it cannot occur, but kept total.
      candidates = range;
    }
    candidates &= mask_through(n - picks_left);  // leave room for later picks
    while (candidates != 0) {
      const int c = std::countr_zero(candidates);
      candidates &= candidates - 1;
      extend(chosen | (std::uint64_t{1} << c), dominated | adj[c],
             picks_left - 1, c + 1);
    }
  }
};

struct LeadResult {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> per_vertex;
  std::vector<std::uint64_t> sets;
};

// Enumerates all dominating k-subsets, partitioned by leading vertex.
// Workers pull leading vertices from a shared counter; the partition
// makes the merged result independent of scheduling.
LeadResult enumerate_k(const Graph& g, int k, bool record_sets, int threads) {
  const int n = g.order();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) adj[static_cast<std::size_t>(v) - 1] = g.neighbor_mask(v);
  const std::uint64_t full = g.full_mask();

  std::vector<LeadResult> partial(static_cast<std::size_t>(n));
  auto run_lead = [&](int lead) {
    auto& out = partial[static_cast<std::size_t>(lead)];
    out.per_vertex.assign(static_cast<std::size_t>(n), 0);
    if (lead > n - k) return;  // no room for k ascending picks
    Enumerator e{adj.data(), n, full, record_sets, 0, out.per_vertex.data(), &out.sets};
    e.extend(std::uint64_t{1} << lead, adj[static_cast<std::size_t>(lead)], k - 1, lead + 1);
    out.count = e.count;
  };

  const int workers = std::min(threads, n);
  if (workers <= 1) {
    for (int lead = 0; lead < n; ++lead) run_lead(lead);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (int lead = next.fetch_add(1); lead < n; lead = next.fetch_add(1)) {
          run_lead(lead);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  LeadResult total;
  total.per_vertex.assign(static_cast<std::size_t>(n), 0);
  for (const auto& part : partial) {
    total.count += part.count;
    for (int i = 0; i < n; ++i) {
      total.per_vertex[static_cast<std::size_t>(i)] += part.per_vertex[static_cast<std::size_t>(i)];
    }
    total.sets.insert(total.sets.end(), part.sets.begin(), part.sets.end());
  }
  return total;
}

}  // namespace

bool is_tds(const Graph& g, const VertexSet& s) {
  if (!s.subset_of(VertexSet::full(g.order()))) {
    throw InputError("set is not a subset of the vertex set");
  }
  for (int v = 1; v <= g.order(); ++v) {
    if ((g.neighbor_mask(v) & s.mask()) == 0) return false;
  }
  return true;
}

TdvReport solve(const Graph& g, const SolveOptions& options) {
  if (options.threads < 1) throw InputError("thread count must be at least 1");
  if (int isolated = g.first_isolated_vertex(); isolated != 0) {
    throw NoTdsError(isolated);
  }

  const int n = g.order();
  // Connected graphs on >= 3 vertices always admit a set of size at most
  // floor(2n/3); overrunning that bound means the search itself is broken.
  const int cutoff = (n >= 3 && g.is_connected()) ? (2 * n) / 3 : n;
  for (int k = 2; k <= cutoff; ++k) {
    LeadResult result = enumerate_k(g, k, options.want_tdm, options.threads);
    if (result.count == 0) continue;

    TdvReport report;
    report.gamma_t = k;
    report.tau = result.count;
    report.tdv = std::move(result.per_vertex);
    if (options.want_tdm) {
      std::vector<VertexSet> sets;
      sets.reserve(result.sets.size());
      for (std::uint64_t mask : result.sets) sets.push_back(VertexSet::from_mask(mask));
      report.tdm = std::move(sets);
    }
    return report;
  }
  throw InternalError("no total dominating set of size <= " +
                      std::to_string(cutoff) + " on a graph of order " +
                      std::to_string(n));
}

int gamma_t(const Graph& g) { return solve(g).gamma_t; }

std::uint64_t tau(const Graph& g) { return solve(g).tau; }

std::vector<std::uint64_t> tdv_all(const Graph& g) { return solve(g).tdv; }

std::vector<VertexSet> enumerate_min_tds(const Graph& g) {
  SolveOptions options;
  options.want_tdm = true;
  return std::move(*solve(g, options).tdm);
}

}  // namespace tdv
