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

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "reference_solver.hpp"
#include "tdv/errors.hpp"
#include "tdv/family.hpp"
#include "tdv/graph.hpp"
#include "tdv/random.hpp"
#include "tdv/solver.hpp"

using tdv::Graph;
using tdv::SolveOptions;
using tdv::TdvReport;
using tdv::VertexSet;
using tdv::testing::reference_solve;

namespace {

std::vector<std::vector<int>> as_member_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const VertexSet& s : sets) out.push_back(s.members());
  std::sort(out.begin(), out.end());
  return out;
}

void check_against_reference(const Graph& g) {
  INFO("graph: ", g.name().empty() ? "(unnamed)" : g.name());
  const auto expected = reference_solve(g);
  REQUIRE(expected.gamma_t > 0);
  SolveOptions options;
  options.want_tdm = true;
  const TdvReport got = tdv::solve(g, options);
  CHECK(got.gamma_t == expected.gamma_t);
  CHECK(got.tau == expected.tau);
  CHECK(got.tdv == expected.tdv);
  CHECK(as_member_lists(*got.tdm) == expected.sets);
}

}  // namespace

TEST_CASE("total domination membership test") {
  const Graph p4 = tdv::generate("path:4");
  CHECK(tdv::is_tds(p4, VertexSet::of({2, 3})));
  CHECK_FALSE(tdv::is_tds(p4, VertexSet::of({1, 2})));  // vertex 4 misses out
  CHECK_FALSE(tdv::is_tds(p4, VertexSet::of({1, 3})));
  CHECK_FALSE(tdv::is_tds(p4, {}));

  const Graph c5 = tdv::generate("cycle:5");
  CHECK(tdv::is_tds(c5, VertexSet::of({1, 2, 3})));
  CHECK_FALSE(tdv::is_tds(c5, VertexSet::of({1, 3})));

  CHECK_THROWS_AS(tdv::is_tds(p4, VertexSet::of({5})), tdv::InputError);
}

TEST_CASE("minimum sizes on the basic families") {
  CHECK(tdv::gamma_t(tdv::generate("path:4")) == 2);
  CHECK(tdv::gamma_t(tdv::generate("cycle:5")) == 3);
  CHECK(tdv::gamma_t(tdv::generate("queen:4x4")) == 2);
  CHECK(tdv::gamma_t(tdv::generate("queen:3x3")) == 2);
}

TEST_CASE("enumeration returns the canonical set lists") {
  const auto p6 = tdv::enumerate_min_tds(tdv::generate("path:6"));
  REQUIRE(p6.size() == 4);
  const std::vector<std::vector<int>> expected_p6 = {
      {1, 2, 4, 5}, {1, 2, 5, 6}, {2, 3, 4, 5}, {2, 3, 5, 6}};
  std::vector<std::vector<int>> got;
  for (const auto& s : p6) got.push_back(s.members());
  CHECK(got == expected_p6);
  for (std::size_t i = 1; i < p6.size(); ++i) {
    CHECK(VertexSet::lex_less(p6[i - 1], p6[i]));
  }

  const auto c4 = tdv::enumerate_min_tds(tdv::generate("cycle:4"));
  REQUIRE(c4.size() == 4);
  CHECK(as_member_lists(c4) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

  const auto k3 = tdv::enumerate_min_tds(tdv::generate("complete:3"));
  CHECK(as_member_lists(k3) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("set counts") {
  CHECK(tdv::tau(tdv::generate("path:6")) == 4);
  CHECK(tdv::tau(tdv::generate("cycle:5")) == 5);
  CHECK(tdv::tau(tdv::generate("cycle:6")) == 9);
  CHECK(tdv::tau(tdv::generate("cycle:10")) == 25);
}

TEST_CASE("per-vertex values") {
  CHECK(tdv::tdv_all(tdv::generate("path:4")) == std::vector<std::uint64_t>{0, 1, 1, 0});
  CHECK(tdv::tdv_all(tdv::generate("path:6")) ==
        std::vector<std::uint64_t>{2, 4, 2, 2, 4, 2});

  // 3x3 board: the center belongs to 8 minimum sets, the others to 4.
  const auto q3 = tdv::tdv_all(tdv::generate("queen:3x3"));
  for (int v = 1; v <= 9; ++v) {
    CHECK(q3[static_cast<std::size_t>(v) - 1] == (v == 5 ? 8u : 4u));
  }
}

TEST_CASE("bundled reports on the built-in example graphs") {
  const TdvReport f1a = tdv::solve(tdv::generate("figure:1a"));
  CHECK(f1a.gamma_t == 2);
  CHECK(f1a.tau == 3);

  const TdvReport f1b = tdv::solve(tdv::generate("figure:1b"));
  CHECK(f1b.gamma_t == 6);
  CHECK(f1b.tau == 2);

  const TdvReport m3 = tdv::solve(tdv::generate("mk2:3"));
  CHECK(m3.gamma_t == 6);
  CHECK(m3.tau == 1);
  CHECK(m3.tdv == std::vector<std::uint64_t>(6, 1));

  // Reports without tdm do not carry the set list.
  CHECK_FALSE(tdv::solve(tdv::generate("path:6")).tdm.has_value());
}

TEST_CASE("unsolvable graphs raise NoTdsError naming an isolated vertex") {
  const Graph single = Graph::from_edge_list(1, {});
  CHECK_THROWS_AS(tdv::solve(single), tdv::NoTdsError);

  const Graph with_isolated = Graph::from_edge_list(3, {{1, 2}});
  try {
    tdv::solve(with_isolated);
    FAIL("expected NoTdsError");
  } catch (const tdv::NoTdsError& e) {
    CHECK(e.isolated_vertex() == 3);
  }

  CHECK_THROWS_AS(tdv::gamma_t(tdv::generate("complete:3").complement()), tdv::NoTdsError);
  CHECK_THROWS_AS(tdv::tau(with_isolated), tdv::NoTdsError);
  CHECK_THROWS_AS(tdv::tdv_all(with_isolated), tdv::NoTdsError);
  CHECK_THROWS_AS(tdv::enumerate_min_tds(with_isolated), tdv::NoTdsError);
}

TEST_CASE("solver matches the exhaustive reference on the families") {
  for (int n = 2; n <= 10; ++n) check_against_reference(tdv::generate("path:" + std::to_string(n)));
  for (int n = 3; n <= 10; ++n) check_against_reference(tdv::generate("cycle:" + std::to_string(n)));
  for (int n = 2; n <= 7; ++n) check_against_reference(tdv::generate("complete:" + std::to_string(n)));
  for (int l = 1; l <= 6; ++l) check_against_reference(tdv::generate("star:" + std::to_string(l)));
  for (int a = 3; a <= 4; ++a) check_against_reference(tdv::generate("extstar:" + std::to_string(a)));
  for (int m = 1; m <= 4; ++m) check_against_reference(tdv::generate("mk2:" + std::to_string(m)));
  for (int n = 4; n <= 9; ++n) check_against_reference(tdv::generate("lowersharp:" + std::to_string(n)));
  for (int n = 5; n <= 9; ++n) check_against_reference(tdv::generate("uppersharp:" + std::to_string(n)));
  for (const char* token : {"queen:3x3", "figure:1a", "figure:1b", "figure:4a",
                            "figure:5", "kpartite:2,3", "kpartite:1,2,2",
                            "kpartite:2,2,2", "kpartite:3,4"}) {
    check_against_reference(tdv::generate(token));
  }
}

TEST_CASE("solver matches the exhaustive reference on random graphs") {
  for (std::uint64_t seed = 1; seed <= 27; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const double p = 0.25 + 0.05 * static_cast<double>(seed % 5);
    check_against_reference(tdv::random_connected_graph(n, p, seed));
  }
  // Disconnected but solvable inputs, via unions of random pieces.
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph a = tdv::random_connected_graph(4 + static_cast<int>(seed % 3), 0.5, seed);
    const Graph b = tdv::random_connected_graph(3 + static_cast<int>(seed % 4), 0.5, seed + 100);
    check_against_reference(Graph::disjoint_union(a, b));
  }
}

TEST_CASE("value table sums to tau times gamma_t") {
  for (std::uint64_t seed = 30; seed <= 50; ++seed) {
    const Graph g = tdv::random_connected_graph(10, 0.3, seed);
    const TdvReport rep = tdv::solve(g);
    std::uint64_t sum = 0;
    for (std::uint64_t value : rep.tdv) sum += value;
    CHECK(sum == rep.tau * static_cast<std::uint64_t>(rep.gamma_t));
    for (std::uint64_t value : rep.tdv) CHECK(value <= rep.tau);
  }
}

TEST_CASE("relabeling permutes the value table") {
  std::mt19937 shuffle_rng(7);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    const Graph g = tdv::random_connected_graph(n, 0.4, seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), shuffle_rng);

    const TdvReport before = tdv::solve(g);
    const TdvReport after = tdv::solve(g.relabeled(perm));
    CHECK(after.gamma_t == before.gamma_t);
    CHECK(after.tau == before.tau);
    for (int v = 1; v <= n; ++v) {
      CHECK(after.tdv_of(perm[static_cast<std::size_t>(v) - 1]) == before.tdv_of(v));
    }
  }
}

TEST_CASE("disjoint unions compose") {
  const auto pairs = {
      std::pair<const char*, const char*>{"path:4", "path:4"},
      std::pair<const char*, const char*>{"cycle:5", "complete:4"},
      std::pair<const char*, const char*>{"path:3", "star:3"},
  };
  for (auto [ta, tb] : pairs) {
    const Graph a = tdv::generate(ta);
    const Graph b = tdv::generate(tb);
    const TdvReport ra = tdv::solve(a);
    const TdvReport rb = tdv::solve(b);
    const TdvReport ru = tdv::solve(Graph::disjoint_union(a, b));
    CHECK(ru.gamma_t == ra.gamma_t + rb.gamma_t);
    CHECK(ru.tau == ra.tau * rb.tau);
    for (int v = 1; v <= a.order(); ++v) {
      CHECK(ru.tdv_of(v) == ra.tdv_of(v) * rb.tau);
    }
    for (int v = 1; v <= b.order(); ++v) {
      CHECK(ru.tdv_of(a.order() + v) == rb.tdv_of(v) * ra.tau);
    }
  }
  CHECK(tdv::gamma_t(Graph::disjoint_union(tdv::generate("path:4"),
                                           tdv::generate("path:4"))) == 4);
}

TEST_CASE("thread count never changes the report") {
  for (const char* token : {"path:13", "cycle:14", "queen:4x4", "figure:1b"}) {
    const Graph g = tdv::generate(token);
    SolveOptions one;
    one.want_tdm = true;
    SolveOptions eight = one;
    eight.threads = 8;
    const TdvReport a = tdv::solve(g, one);
    const TdvReport b = tdv::solve(g, eight);
    CHECK(a.gamma_t == b.gamma_t);
    CHECK(a.tau == b.tau);
    CHECK(a.tdv == b.tdv);
    CHECK(*a.tdm == *b.tdm);
  }
  SolveOptions bad;
  bad.threads = 0;
  CHECK_THROWS_AS(tdv::solve(tdv::generate("path:4"), bad), tdv::InputError);
}

TEST_CASE("disconnected graphs use the full search range") {
  // gamma_t = n here, far beyond the connected-case bound of 2n/3.
  const TdvReport m4 = tdv::solve(tdv::generate("mk2:4"));
  CHECK(m4.gamma_t == 8);
  CHECK(m4.tau == 1);

  const TdvReport k2 = tdv::solve(tdv::generate("path:2"));
  CHECK(k2.gamma_t == 2);
  CHECK(k2.tau == 1);
}
