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

#ifndef TDV_SOLVER_HPP
#define TDV_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tdv/graph.hpp"
#include "tdv/vertex_set.hpp"

namespace tdv {

/// Exact solution bundle for one graph:
///   gamma_t  minimum size of a total dominating set,
///   tau      number of minimum total dominating sets,
///   tdv[i]   number of minimum sets containing vertex i+1,
///   tdm      every minimum set, in canonical (lexicographic) order,
///            present only when requested.
///
/// Always satisfies sum(tdv) == tau * gamma_t and 0 <= tdv[i] <= tau.
struct TdvReport {
  int gamma_t = 0;
  std::uint64_t tau = 0;
  std::vector<std::uint64_t> tdv;
  std::optional<std::vector<VertexSet>> tdm;

  std::uint64_t tdv_of(int v) const { return tdv.at(static_cast<std::size_t>(v) - 1); }
};

struct SolveOptions {
  bool want_tdm = false;  // materialize the full set list
  int threads = 1;        // worker threads; the result never depends on this
};

/// True iff every vertex of g has a neighbor in s (members of s included).
/// s must be a subset of the vertex set.
bool is_tds(const Graph& g, const VertexSet& s);

/// Exact computation by k-subset enumeration with pruning: try k = 2, 3,
/// ... and stop at the first k admitting a hit, enumerating that k fully.
/// Work may be split across threads by leading vertex; the merged report
/// is identical for every thread count. Raises NoTdsError when the graph
/// has an isolated vertex (or a single vertex).
TdvReport solve(const Graph& g, const SolveOptions& options = {});

int gamma_t(const Graph& g);

/// Count of minimum total dominating sets, without materializing them.
std::uint64_t tau(const Graph& g);

std::vector<std::uint64_t> tdv_all(const Graph& g);

/// Every minimum total dominating set, in canonical order (lexicographic
/// on ascending member lists).
std::vector<VertexSet> enumerate_min_tds(const Graph& g);

}  // namespace tdv

#endif  // TDV_SOLVER_HPP
