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

#ifndef TDV_FORMULAS_HPP
#define TDV_FORMULAS_HPP

#include <cstdint>
#include <span>

namespace tdv {

// Closed forms for paths, cycles, complete multipartite graphs, and
// perfect matchings. Pure integer functions of the parameters; each one
// agrees exactly with the enumeration solver on its whole domain (the
// test suites cross-check them). All raise InputError below the minimum
// order.

/// n/2 when n % 4 == 0, floor(n/2) + 1 otherwise. Requires n >= 2.
std::uint64_t gamma_t_path(std::int64_t n);

/// Same dispatch as gamma_t_path. Requires n >= 3.
std::uint64_t gamma_t_cycle(std::int64_t n);

/// Number of minimum total dominating sets of the path P_n, n >= 2:
/// 1, floor(n/4), (floor(n/4)+1)^2, floor(n/4)+2 as n % 4 = 0, 1, 2, 3.
std::uint64_t tau_path(std::int64_t n);

/// Number of minimum total dominating sets of the cycle C_n, n >= 3:
/// 4 when n % 4 == 0, n when n is odd, (n/2)^2 when n % 4 == 2.
std::uint64_t tau_cycle(std::int64_t n);

/// Per-vertex count for C_n (constant over vertices by symmetry):
/// 2, floor(n/2)+1, (n/2)*((n+2)/4) as n % 4 = 0, odd, 2.
std::uint64_t tdv_cycle(std::int64_t n);

/// Per-vertex count for P_n at vertex v (1 <= v <= n). Writing
/// k = floor(n/4) and v = 4q + r with 0 <= r < 4:
///   n%4==0:  0, 0, 1, 1                                  for r = 0, 1, 2, 3
///   n%4==1:  q, 0, k-q, k
///   n%4==2:  (k+1)q, (k+1)(q+1), (k+1)(k+1-q), (k+1)(k-q)
///   n%4==3:  0, q+1, k+2, k+1-q
/// Symmetric under v -> n+1-v.
std::uint64_t tdv_path(std::int64_t n, std::int64_t v);

/// Complete multipartite graph with the given part sizes (>= 2 parts,
/// each >= 1): tau = ((sum a)^2 - sum a^2) / 2.
std::uint64_t multipartite_tau(std::span<const int> parts);

/// TDV of any vertex in part `part_index` (1-based): (sum a) - a_j.
std::uint64_t multipartite_tdv(std::span<const int> parts, int part_index);

/// TDV of any vertex of mK_2 and of its complement (m >= 2, order
/// n = 2m): (1, n-2). The two values always sum to n-1.
struct MatchingComplementTdv {
  std::uint64_t in_matching;
  std::uint64_t in_complement;
};
MatchingComplementTdv mk2_complement_tdv(int m);

/// Exact binomial coefficient for 0 <= n <= 64 (fits 64 bits).
std::uint64_t binomial(int n, int k);

}  // namespace tdv

#endif  // TDV_FORMULAS_HPP
