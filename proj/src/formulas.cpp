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

#include "tdv/formulas.hpp"

#include <array>

#include "tdv/errors.hpp"

namespace tdv {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw InputError(message);
}

constexpr std::uint64_t u64(std::int64_t v) { return static_cast<std::uint64_t>(v); }

}  // namespace

std::uint64_t gamma_t_path(std::int64_t n) {
  require(n >= 2, "path needs n >= 2");
  return n % 4 == 0 ? u64(n / 2) : u64(n / 2 + 1);
}

std::uint64_t gamma_t_cycle(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  return n % 4 == 0 ? u64(n / 2) : u64(n / 2 + 1);
}

std::uint64_t tau_path(std::int64_t n) {
  require(n >= 2, "path needs n >= 2");
  const std::uint64_t k = u64(n / 4);
  switch (n % 4) {
    case 0: return 1;
    case 1: return k;
    case 2: return (k + 1) * (k + 1);
    default: return k + 2;
  }
}

std::uint64_t tau_cycle(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  switch (n % 4) {
    case 0: return 4;
    case 2: return u64(n / 2) * u64(n / 2);
    default: return u64(n);
  }
}

std::uint64_t tdv_cycle(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  switch (n % 4) {
    case 0: return 2;
    case 2: return u64(n / 2) * u64((n + 2) / 4);  // both divisions exact here
    default: return u64(n / 2 + 1);
  }
}

std::uint64_t tdv_path(std::int64_t n, std::int64_t v) {
  require(n >= 2, "path needs n >= 2");
  require(v >= 1 && v <= n, "vertex out of range");
  const std::uint64_t k = u64(n / 4);
  const std::uint64_t q = u64(v / 4);
  const std::int64_t r = v % 4;
  switch (n % 4) {
    case 0:
      return r == 2 || r == 3 ? 1 : 0;
    case 1:
      switch (r) {
        case 0: return q;
        case 1: return 0;
        case 2: return k - q;
        default: return k;
      }
    case 2:
      switch (r) {
        case 0: return (k + 1) * q;
        case 1: return (k + 1) * (q + 1);
        case 2: return (k + 1) * (k + 1 - q);
        default: return (k + 1) * (k - q);
      }
    default:
      switch (r) {
        case 0: return 0;
        case 1: return q + 1;
        case 2: return k + 2;
        default: return k + 1 - q;
      }
  }
}

std::uint64_t multipartite_tau(std::span<const int> parts) {
  require(parts.size() >= 2, "multipartite graph needs at least 2 parts");
  std::uint64_t sum = 0, sum_sq = 0;
  for (int a : parts) {
    require(a >= 1, "multipartite part sizes must be positive");
    sum += u64(a);
    sum_sq += u64(a) * u64(a);
  }
  return (sum * sum - sum_sq) / 2;
}

std::uint64_t multipartite_tdv(std::span<const int> parts, int part_index) {
  require(parts.size() >= 2, "multipartite graph needs at least 2 parts");
  require(part_index >= 1 && static_cast<std::size_t>(part_index) <= parts.size(),
          "part index out of range");
  std::uint64_t sum = 0;
  for (int a : parts) {
    require(a >= 1, "multipartite part sizes must be positive");
    sum += u64(a);
  }
  return sum - u64(parts[static_cast<std::size_t>(part_index) - 1]);
}

MatchingComplementTdv mk2_complement_tdv(int m) {
  require(m >= 2, "needs m >= 2 so the complement has no isolated vertex");
  return {1, u64(2 * m - 2)};
}

std::uint64_t binomial(int n, int k) {
  require(n >= 0 && n <= 64, "binomial is tabulated for 0 <= n <= 64");
  if (k < 0 || k > n) return 0;
  // Pascal's triangle; every entry through row 64 fits in 64 bits.
  static const auto table = []() {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[static_cast<std::size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j) {
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      }
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace tdv
