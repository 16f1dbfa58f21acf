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

#ifndef TDV_TESTS_REFERENCE_SOLVER_HPP
#define TDV_TESTS_REFERENCE_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tdv/graph.hpp"

namespace tdv::testing {

struct ReferenceSolution {
  int gamma_t = 0;  // 0 when no total dominating set exists
  std::uint64_t tau = 0;
  std::vector<std::uint64_t> tdv;               // index v-1
  std::vector<std::vector<int>> sets;           // sorted members, lex order
};

// Oracle for the enumeration solver: scans every subset of the vertex set
// and tests domination against adjacency lists rebuilt from the edge
// list, so none of the solver's mask pruning machinery is shared.
// Feasible up to n around 18.
inline ReferenceSolution reference_solve(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }

  auto dominates = [&](const std::vector<int>& members) {
    for (int v = 1; v <= n; ++v) {
      bool covered = false;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (std::find(members.begin(), members.end(), w) != members.end()) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  };

  ReferenceSolution result;
  result.tdv.assign(static_cast<std::size_t>(n), 0);
  int best = n + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> members;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      members.push_back(__builtin_ctzll(rest) + 1);
    }
    if (static_cast<int>(members.size()) > best) continue;
    if (!dominates(members)) continue;
    if (static_cast<int>(members.size()) < best) {
      best = static_cast<int>(members.size());
      result.sets.clear();
    }
    result.sets.push_back(std::move(members));
  }
  if (best > n) return result;  // gamma_t stays 0: no set exists

  result.gamma_t = best;
  result.tau = result.sets.size();
  for (const auto& set : result.sets) {
    for (int v : set) ++result.tdv[static_cast<std::size_t>(v) - 1];
  }
  std::sort(result.sets.begin(), result.sets.end());
  return result;
}

}  // namespace tdv::testing

#endif  // TDV_TESTS_REFERENCE_SOLVER_HPP
