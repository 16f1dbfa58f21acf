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

#ifndef TDV_CHECKS_HPP
#define TDV_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdv/graph.hpp"
#include "tdv/vertex_set.hpp"

namespace tdv {

// Machine-checkable verdicts for the identities, bounds, and sharpness
// facts that hold for the tau/TDV invariants. Every check is a theorem:
// a FAIL verdict on any graph the solver can handle indicates a bug in
// this library, never a property of the graph.

enum class Verdict { pass, fail, not_applicable };

const char* verdict_name(Verdict v);

/// Tightness / qualification tags attached to reports.
namespace check_tags {
inline constexpr const char* kLowerTight = "lower-tight";
inline constexpr const char* kUpperTight = "upper-tight";
inline constexpr const char* kUb1Tight = "ub1-tight";   // sum == tau * gamma_t
inline constexpr const char* kUb2Tight = "ub2-tight";   // sum == tau * (1 + deg)
inline constexpr const char* kTight = "tight";
inline constexpr const char* kEquality = "equality";
inline constexpr const char* kMatching = "mk2";
}  // namespace check_tags

struct CheckReport {
  std::string check_id;
  Verdict verdict = Verdict::not_applicable;
  std::int64_t lhs = 0;  // left side of the checked relation
  std::int64_t rhs = 0;  // right side
  std::optional<VertexSet> witness;  // failure or sharpness witness
  std::vector<std::string> tags;
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
  bool has_tag(const std::string& tag) const;
};

/// sum over v of TDV(v) equals tau * gamma_t.
CheckReport check_sum_identity(const Graph& g);

/// tau <= sum over N[v0] of TDV <= min(tau * gamma_t, tau * (1 + deg v0)).
/// Tags record which of the three bounds is attained.
CheckReport check_neighborhood_sum_bounds(const Graph& g, int v0);

/// For a support vertex s (neighbor of a degree-1 vertex):
/// sum over N[s] of TDV >= 2 tau.
CheckReport check_support_vertex(const Graph& g, int s);

/// For a spanning subgraph h of g with gamma_t(h) == gamma_t(g):
/// tau(h) <= tau(g). Reports not-applicable when a precondition is unmet.
CheckReport check_subgraph_tau(const Graph& h, const Graph& g);

/// For connected g on n >= 3 vertices: 1 <= tau <= C(n, floor(n/2)).
CheckReport check_tau_range(const Graph& g);

/// When g and its complement both lack isolated vertices:
/// gamma_t(g) + gamma_t(complement) <= n + 2, with equality exactly for
/// perfect matchings (on either side). Equality is cross-checked.
CheckReport check_complement_gamma(const Graph& g);

/// When gamma_t(g) == 2: TDV(v) <= deg(v) for every vertex.
CheckReport check_gamma2_degree_bound(const Graph& g);

/// Dispatch on max degree D:
///   D == n-1: gamma_t == 2; TDV(v) <= n-1 with equality iff deg(v) == n-1.
///   D == n-2: gamma_t == 2; TDV(v) <= n-2; at each degree-(n-2) vertex v,
///             TDV(v) == deg(w) where w is the unique non-neighbor of v.
///   D == n-3 (n >= 4): disconnected: gamma_t == 4 and TDV(v) == n-3 at
///             max-degree vertices; connected: gamma_t in {2, 3}, with
///             TDV(v) <= n-3 (gamma_t 2) or
///             TDV(v) <= floor((n-3)^2 / 4) + 2(n-4) (gamma_t 3).
CheckReport check_max_degree_cases(const Graph& g);

/// When gamma_t(g) == 2 and max degree <= n-2:
/// tau <= C(n, 2) - ceil(n/2).
CheckReport check_tau_gamma2_upper(const Graph& g);

/// Runs every single-graph check above, in a fixed order. Checks whose
/// preconditions are unmet report not_applicable; unexpected errors are
/// converted into FAIL reports rather than thrown.
std::vector<CheckReport> run_all(const Graph& g);

bool is_support_vertex(const Graph& g, int v);

/// Exhaustive scan of all labeled graphs on n vertices (3 <= n <= 8) for
/// connected graphs attaining tau == C(n, floor(n/2)). A graph can attain
/// the bound only if every degree exceeds floor(n/2) (a size count:
/// otherwise some gamma_t-size subset misses a neighborhood), which is
/// what makes the scan tractable; survivors are settled with the solver.
/// Orders above 8 are not scanned.
struct TauRangeScan {
  std::uint64_t graphs_scanned = 0;
  std::uint64_t candidates = 0;   // graphs passing the degree filter
  std::vector<Graph> tight;       // graphs attaining the upper bound
};
TauRangeScan scan_tau_range_upper_tight(int n);

}  // namespace tdv

#endif  // TDV_CHECKS_HPP
