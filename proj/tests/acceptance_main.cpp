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

// Acceptance suite. Every comparison is exact integer equality; each
// criterion also carries a wall-clock budget where one is defined. Prints
// one PASS/FAIL line per criterion and exits nonzero on any failure.
//
// Usage: tdv_acceptance [path-to-cli-binary]
// The CLI path is needed only by the determinism criterion.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "subprocess.hpp"
#include "tdv/checks.hpp"
#include "tdv/family.hpp"
#include "tdv/formulas.hpp"
#include "tdv/graph.hpp"
#include "tdv/random.hpp"
#include "tdv/solver.hpp"

namespace {

using tdv::CheckReport;
using tdv::Graph;
using tdv::TdvReport;
namespace tags = tdv::check_tags;

struct Failures {
  std::vector<std::string> lines;

  void add(const std::string& line) { lines.push_back(line); }

  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }

  void expect_eq(std::uint64_t expected, std::uint64_t got, const std::string& what) {
    if (expected != got) {
      add(what + ": expected " + std::to_string(expected) + ", got " +
          std::to_string(got));
    }
  }
};

std::string g_cli_path;
bool g_all_passed = true;

void run_criterion(int number, const std::string& title, long budget_ms,
                   const std::function<void(Failures&)>& body) {
  Failures failures;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(failures);
  } catch (const std::exception& e) {
    failures.add(std::string("unexpected error: ") + e.what());
  }
  const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  if (budget_ms > 0 && elapsed_ms > budget_ms) {
    failures.add("exceeded the " + std::to_string(budget_ms) + " ms budget (" +
                 std::to_string(elapsed_ms) + " ms)");
  }
  const bool passed = failures.lines.empty();
  g_all_passed = g_all_passed && passed;
  std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << title << " (" << elapsed_ms << " ms)\n";
  for (const std::string& line : failures.lines) {
    std::cout << "      - " << line << "\n";
  }
}

Graph family(const std::string& token) { return tdv::generate(token); }

std::int64_t closed_neighborhood_sum(const Graph& g, const TdvReport& rep, int v0) {
  std::int64_t sum = 0;
  for (int v : g.closed_neighbors(v0).members()) {
    sum += static_cast<std::int64_t>(rep.tdv_of(v));
  }
  return sum;
}

// 1. Path formulas match enumeration for n = 2..22, reproducing the
//    published P4 and P6 tables verbatim.
void criterion_paths(Failures& f) {
  for (int n = 2; n <= 22; ++n) {
    const std::string label = "path:" + std::to_string(n);
    const TdvReport rep = tdv::solve(family(label));
    f.expect_eq(tdv::gamma_t_path(n), static_cast<std::uint64_t>(rep.gamma_t),
                label + " gamma_t");
    f.expect_eq(tdv::tau_path(n), rep.tau, label + " tau");
    for (int v = 1; v <= n; ++v) {
      f.expect_eq(tdv::tdv_path(n, v), rep.tdv_of(v),
                  label + " tdv[" + std::to_string(v) + "]");
    }
  }
  const TdvReport p4 = tdv::solve(family("path:4"));
  f.expect_eq(1, p4.tau, "path:4 tau");
  f.expect(p4.tdv == std::vector<std::uint64_t>{0, 1, 1, 0}, "path:4 tdv table");
  const TdvReport p6 = tdv::solve(family("path:6"));
  f.expect_eq(4, p6.tau, "path:6 tau");
  f.expect(p6.tdv == std::vector<std::uint64_t>{2, 4, 2, 2, 4, 2}, "path:6 tdv table");
}

// 2. Cycle formulas match enumeration for n = 3..22, reproducing the
//    published C4 and C5 values.
void criterion_cycles(Failures& f) {
  for (int n = 3; n <= 22; ++n) {
    const std::string label = "cycle:" + std::to_string(n);
    const TdvReport rep = tdv::solve(family(label));
    f.expect_eq(tdv::gamma_t_cycle(n), static_cast<std::uint64_t>(rep.gamma_t),
                label + " gamma_t");
    f.expect_eq(tdv::tau_cycle(n), rep.tau, label + " tau");
    const std::uint64_t constant = tdv::tdv_cycle(n);
    for (int v = 1; v <= n; ++v) {
      f.expect_eq(constant, rep.tdv_of(v), label + " tdv[" + std::to_string(v) + "]");
    }
  }
  const TdvReport c4 = tdv::solve(family("cycle:4"));
  f.expect_eq(4, c4.tau, "cycle:4 tau");
  f.expect_eq(2, c4.tdv_of(1), "cycle:4 tdv");
  const TdvReport c5 = tdv::solve(family("cycle:5"));
  f.expect_eq(5, c5.tau, "cycle:5 tau");
  f.expect_eq(3, c5.tdv_of(1), "cycle:5 tdv");
}

// 3. Multipartite formulas match enumeration for every composition of
//    every total up to 9 into at least two positive parts.
void criterion_multipartite(Failures& f) {
  for (int total = 2; total <= 9; ++total) {
    for (unsigned cuts = 1; cuts < (1u << (total - 1)); ++cuts) {
      std::vector<int> parts;
      int current = 1;
      for (int pos = 1; pos < total; ++pos) {
        if ((cuts >> (pos - 1)) & 1u) {
          parts.push_back(current);
          current = 0;
        }
        ++current;
      }
      parts.push_back(current);

      std::string label = "kpartite:";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        label += (i ? "," : "") + std::to_string(parts[i]);
      }
      tdv::FamilySpec spec;
      spec.kind = tdv::FamilySpec::Kind::multipartite;
      spec.parts = parts;
      const TdvReport rep = tdv::solve(tdv::generate(spec));
      f.expect_eq(2, static_cast<std::uint64_t>(rep.gamma_t), label + " gamma_t");
      f.expect_eq(tdv::multipartite_tau(parts), rep.tau, label + " tau");
      int vertex = 1;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::uint64_t expected =
            tdv::multipartite_tdv(parts, static_cast<int>(j) + 1);
        for (int i = 0; i < parts[j]; ++i, ++vertex) {
          f.expect_eq(expected, rep.tdv_of(vertex),
                      label + " tdv[" + std::to_string(vertex) + "]");
        }
      }
    }
  }
}

// 4. Queen boards: published center/periphery values, exactly.
void criterion_queens(Failures& f) {
  const TdvReport q3 = tdv::solve(family("queen:3x3"));
  f.expect_eq(2, static_cast<std::uint64_t>(q3.gamma_t), "queen:3x3 gamma_t");
  for (int v = 1; v <= 9; ++v) {
    f.expect_eq(v == 5 ? 8 : 4, q3.tdv_of(v),
                "queen:3x3 tdv[" + std::to_string(v) + "]");
  }

  const TdvReport q4 = tdv::solve(family("queen:4x4"));
  f.expect_eq(2, static_cast<std::uint64_t>(q4.gamma_t), "queen:4x4 gamma_t");
  for (int v = 1; v <= 16; ++v) {
    const bool center = v == 6 || v == 7 || v == 10 || v == 11;
    f.expect_eq(center ? 3 : 1, q4.tdv_of(v),
                "queen:4x4 tdv[" + std::to_string(v) + "]");
  }
}

// 5. Figure graphs: counts and closed-neighborhood sums at the hub.
void criterion_figures(Failures& f) {
  {
    const Graph g = family("figure:1a");
    const TdvReport rep = tdv::solve(g);
    f.expect_eq(2, static_cast<std::uint64_t>(rep.gamma_t), "figure:1a gamma_t");
    f.expect_eq(3, rep.tau, "figure:1a tau");
    f.expect_eq(6, static_cast<std::uint64_t>(closed_neighborhood_sum(g, rep, 1)),
                "figure:1a closed-neighborhood sum at the hub");
  }
  {
    const Graph g = family("figure:1b");
    const TdvReport rep = tdv::solve(g);
    f.expect_eq(6, static_cast<std::uint64_t>(rep.gamma_t), "figure:1b gamma_t");
    f.expect_eq(2, rep.tau, "figure:1b tau");
    f.expect_eq(8, static_cast<std::uint64_t>(closed_neighborhood_sum(g, rep, 1)),
                "figure:1b closed-neighborhood sum at the hub");
  }
  {
    const Graph g = family("figure:5");
    const TdvReport rep = tdv::solve(g);
    f.expect_eq(2, static_cast<std::uint64_t>(rep.gamma_t), "figure:5 gamma_t");
    f.expect_eq(1, rep.tau, "figure:5 tau");
    // The maximum-degree vertex is unique and sits in no minimum set.
    int max_vertex = 1;
    for (int v = 2; v <= g.order(); ++v) {
      if (g.degree(v) > g.degree(max_vertex)) max_vertex = v;
    }
    int with_max = 0;
    for (int v = 1; v <= g.order(); ++v) {
      if (g.degree(v) == g.degree(max_vertex)) ++with_max;
    }
    f.expect_eq(1, static_cast<std::uint64_t>(with_max),
                "figure:5 unique maximum-degree vertex");
    f.expect_eq(0, rep.tdv_of(max_vertex), "figure:5 tdv at the maximum-degree vertex");
  }
}

// 6. Meta-invariant: run_all never reports FAIL across the corpus.
void criterion_checks_corpus(Failures& f) {
  std::vector<Graph> corpus;
  for (int n = 2; n <= 22; ++n) corpus.push_back(family("path:" + std::to_string(n)));
  for (int n = 3; n <= 22; ++n) corpus.push_back(family("cycle:" + std::to_string(n)));
  for (int n = 2; n <= 9; ++n) corpus.push_back(family("complete:" + std::to_string(n)));
  for (int l = 1; l <= 8; ++l) corpus.push_back(family("star:" + std::to_string(l)));
  for (int n = 4; n <= 12; ++n) corpus.push_back(family("lowersharp:" + std::to_string(n)));
  for (int n = 5; n <= 12; ++n) corpus.push_back(family("uppersharp:" + std::to_string(n)));
  for (int m = 1; m <= 5; ++m) {
    Graph g = family("mk2:" + std::to_string(m));
    Graph co = g.complement();
    co.set_name("mk2:" + std::to_string(m) + " complement");
    corpus.push_back(std::move(g));
    corpus.push_back(std::move(co));
  }
  for (const char* token : {"figure:1a", "figure:1b", "figure:4a", "figure:5"}) {
    corpus.push_back(family(token));
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const double p = 0.25 + 0.05 * static_cast<double>(seed % 6);
    Graph g = tdv::random_connected_graph(n, p, seed);
    g.set_name("random seed " + std::to_string(seed));
    corpus.push_back(std::move(g));
  }

  for (const Graph& g : corpus) {
    for (const CheckReport& report : tdv::run_all(g)) {
      f.expect(!report.failed(), g.name() + " check " + report.check_id +
                                     " failed (" + report.note + ")");
    }
  }
}

// 7. Sharpness witnesses, including the exhaustive scan for n <= 8.
void criterion_sharpness(Failures& f) {
  const CheckReport lower = tdv::check_neighborhood_sum_bounds(family("path:8"), 1);
  f.expect(lower.passed() && lower.has_tag(tags::kLowerTight),
           "path:8 end-vertex should attain the lower bound");

  const CheckReport ub1 = tdv::check_neighborhood_sum_bounds(family("star:3"), 1);
  f.expect(ub1.passed() && ub1.has_tag(tags::kUb1Tight),
           "star:3 hub should attain tau * gamma_t");

  const CheckReport ub2 = tdv::check_neighborhood_sum_bounds(family("uppersharp:6"), 3);
  f.expect(ub2.passed() && ub2.has_tag(tags::kUb2Tight),
           "uppersharp:6 degree-2 vertex should attain tau * (1 + deg)");

  const CheckReport cap = tdv::check_tau_gamma2_upper(family("kpartite:2,2,2"));
  f.expect(cap.passed() && cap.has_tag(tags::kUpperTight),
           "the 4-regular graph on 6 vertices should attain C(6,2) - 3");

  for (int n : {3, 4, 5}) {
    const CheckReport range = tdv::check_tau_range(family("complete:" + std::to_string(n)));
    f.expect(range.passed() && range.has_tag(tags::kUpperTight),
             "complete:" + std::to_string(n) + " should attain the tau cap");
  }

  for (int n = 3; n <= 8; ++n) {
    const tdv::TauRangeScan scan = tdv::scan_tau_range_upper_tight(n);
    const std::size_t expected = n <= 5 ? 1 : 0;
    f.expect_eq(expected, scan.tight.size(),
                "tau-cap-tight graph count over all graphs of order " + std::to_string(n));
    for (const Graph& g : scan.tight) {
      f.expect(g == family("complete:" + std::to_string(n)),
               "a non-complete graph of order " + std::to_string(n) + " attains the tau cap");
    }
  }
}

// 8. CLI determinism: --threads 1 and --threads 8 produce identical JSON.
void criterion_cli_determinism(Failures& f) {
  if (g_cli_path.empty()) {
    f.add("CLI binary path missing (pass it as argv[1])");
    return;
  }
  const std::vector<std::string> corpus = {
      "path:6",      "path:13",     "cycle:8",    "cycle:13",  "kpartite:2,3",
      "kpartite:1,2,3", "star:5",   "mk2:3",      "queen:3x3", "queen:4x4",
      "figure:1a",   "figure:1b",   "figure:4a",  "figure:5",  "lowersharp:9",
      "uppersharp:9", "complete:7", "extstar:4",
  };
  for (const std::string& spec : corpus) {
    const std::string base = tdv::testing::shell_quote(g_cli_path) + " solve " + spec +
                             " --json --tdm --checks --threads ";
    const auto one = tdv::testing::run_command(base + "1");
    const auto eight = tdv::testing::run_command(base + "8");
    f.expect(one.exit_code == 0, spec + ": exit code " + std::to_string(one.exit_code));
    f.expect(one.output == eight.output, spec + ": output differs across thread counts");
    f.expect(!one.output.empty(), spec + ": empty output");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  run_criterion(1, "path formulas vs. enumeration, n = 2..22", 30000, criterion_paths);
  run_criterion(2, "cycle formulas vs. enumeration, n = 3..22", 60000, criterion_cycles);
  run_criterion(3, "multipartite formulas vs. enumeration, totals <= 9", 10000,
                criterion_multipartite);
  run_criterion(4, "queen boards reproduce the published value tables", 1000,
                criterion_queens);
  run_criterion(5, "figure graphs reproduce the published counts", 1000,
                criterion_figures);
  run_criterion(6, "property checks never fail across the corpus", 300000,
                criterion_checks_corpus);
  run_criterion(7, "sharpness witnesses, with the exhaustive scan to order 8", 0,
                criterion_sharpness);
  run_criterion(8, "CLI JSON identical across thread counts", 0,
                criterion_cli_determinism);

  std::cout << (g_all_passed ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES present")
            << "\n";
  return g_all_passed ? 0 : 1;
}
