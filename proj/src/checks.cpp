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

#include "tdv/checks.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "tdv/errors.hpp"
#include "tdv/formulas.hpp"
#include "tdv/solver.hpp"

namespace tdv {

namespace {

namespace ids {
constexpr const char* kSumIdentity = "sum-identity";
constexpr const char* kNeighborhoodSum = "neighborhood-sum-bounds";
constexpr const char* kSupportVertex = "support-vertex-sum";
constexpr const char* kSubgraphTau = "subgraph-tau";
constexpr const char* kTauRange = "tau-range";
constexpr const char* kComplementGamma = "complement-gamma";
constexpr const char* kGamma2Degree = "gamma2-degree-bound";
constexpr const char* kMaxDegreeCases = "max-degree-cases";
constexpr const char* kTauGamma2Upper = "tau-gamma2-upper";
}  // namespace ids

CheckReport base_report(const char* id) {
  CheckReport r;
  r.check_id = id;
  return r;
}

CheckReport not_applicable(const char* id, std::string why) {
  CheckReport r = base_report(id);
  r.verdict = Verdict::not_applicable;
  r.note = std::move(why);
  return r;
}

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::int64_t neighborhood_sum(const Graph& g, const TdvReport& rep, int v0) {
  std::int64_t sum = 0;
  for (int v : g.closed_neighbors(v0).members()) sum += i64(rep.tdv_of(v));
  return sum;
}

bool is_perfect_matching(const Graph& g) {
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return true;
}

// ---- single-report bodies, sharing one solved report -------------------

CheckReport sum_identity_body(const Graph&, const TdvReport& rep) {
  CheckReport r = base_report(ids::kSumIdentity);
  std::int64_t sum = 0;
  for (std::uint64_t c : rep.tdv) sum += i64(c);
  r.lhs = sum;
  r.rhs = i64(rep.tau) * rep.gamma_t;
  r.verdict = r.lhs == r.rhs ? Verdict::pass : Verdict::fail;
  return r;
}

CheckReport neighborhood_sum_body(const Graph& g, const TdvReport& rep, int v0) {
  CheckReport r = base_report(ids::kNeighborhoodSum);
  const std::int64_t sum = neighborhood_sum(g, rep, v0);
  const std::int64_t lower = i64(rep.tau);
  const std::int64_t ub1 = i64(rep.tau) * rep.gamma_t;
  const std::int64_t ub2 = i64(rep.tau) * (1 + g.degree(v0));
  r.lhs = sum;
  r.rhs = std::min(ub1, ub2);
  r.note = "lower bound tau = " + std::to_string(lower);
  r.verdict = (lower <= sum && sum <= r.rhs) ? Verdict::pass : Verdict::fail;
  if (sum == lower) r.tags.push_back(check_tags::kLowerTight);
  if (sum == ub1) r.tags.push_back(check_tags::kUb1Tight);
  if (sum == ub2) r.tags.push_back(check_tags::kUb2Tight);
  if (r.failed()) r.witness = VertexSet::of({v0});
  return r;
}

CheckReport neighborhood_sum_all_body(const Graph& g, const TdvReport& rep) {
  CheckReport all = base_report(ids::kNeighborhoodSum);
  all.verdict = Verdict::pass;
  all.note = "all v0";
  std::int64_t best = -1;
  for (int v0 = 1; v0 <= g.order(); ++v0) {
    CheckReport one = neighborhood_sum_body(g, rep, v0);
    if (one.failed()) {
      one.note = "violated at v0 = " + std::to_string(v0);
      return one;
    }
    for (const auto& tag : one.tags) {
      if (!all.has_tag(tag)) all.tags.push_back(tag);
    }
    if (one.lhs > best) {
      best = one.lhs;
      all.lhs = one.lhs;
      all.rhs = one.rhs;
    }
  }
  return all;
}

CheckReport support_vertex_body(const Graph& g, const TdvReport& rep, int s) {
  CheckReport r = base_report(ids::kSupportVertex);
  if (!is_support_vertex(g, s)) {
    return not_applicable(ids::kSupportVertex,
                          "vertex " + std::to_string(s) + " is not a support vertex");
  }
  r.lhs = neighborhood_sum(g, rep, s);
  r.rhs = 2 * i64(rep.tau);
  r.verdict = r.lhs >= r.rhs ? Verdict::pass : Verdict::fail;
  if (r.lhs == r.rhs) r.tags.push_back(check_tags::kTight);
  if (r.failed()) r.witness = VertexSet::of({s});
  return r;
}

CheckReport support_vertex_all_body(const Graph& g, const TdvReport& rep) {
  CheckReport all = base_report(ids::kSupportVertex);
  bool any = false;
  std::int64_t slack = -1;
  for (int s = 1; s <= g.order(); ++s) {
    if (!is_support_vertex(g, s)) continue;
    any = true;
    CheckReport one = support_vertex_body(g, rep, s);
    if (one.failed()) {
      one.note = "violated at support vertex " + std::to_string(s);
      return one;
    }
    if (slack < 0 || one.lhs - one.rhs < slack) {
      slack = one.lhs - one.rhs;
      all.lhs = one.lhs;
      all.rhs = one.rhs;
    }
  }
  if (!any) return not_applicable(ids::kSupportVertex, "no support vertices");
  all.verdict = Verdict::pass;
  all.note = "all support vertices";
  if (all.lhs == all.rhs) all.tags.push_back(check_tags::kTight);
  return all;
}

CheckReport tau_range_body(const Graph& g, const TdvReport& rep) {
  const int n = g.order();
  if (n < 3) return not_applicable(ids::kTauRange, "needs at least 3 vertices");
  if (!g.is_connected()) return not_applicable(ids::kTauRange, "graph is disconnected");
  CheckReport r = base_report(ids::kTauRange);
  r.lhs = i64(rep.tau);
  r.rhs = i64(binomial(n, n / 2));
  r.verdict = (r.lhs >= 1 && r.lhs <= r.rhs) ? Verdict::pass : Verdict::fail;
  if (r.lhs == 1) r.tags.push_back(check_tags::kLowerTight);
  if (r.lhs == r.rhs) r.tags.push_back(check_tags::kUpperTight);
  return r;
}

CheckReport complement_gamma_body(const Graph& g, const TdvReport& rep) {
  const int n = g.order();
  if (g.max_degree() > n - 2) {
    return not_applicable(ids::kComplementGamma, "a vertex dominates everything (max degree n-1)");
  }
  const Graph co = g.complement();
  if (co.has_isolated_vertex()) {
    return not_applicable(ids::kComplementGamma, "complement has an isolated vertex");
  }
  CheckReport r = base_report(ids::kComplementGamma);
  const int sum = rep.gamma_t + solve(co).gamma_t;
  r.lhs = sum;
  r.rhs = n + 2;
  const bool equality = sum == n + 2;
  const bool matching = is_perfect_matching(g) || is_perfect_matching(co);
  if (equality) r.tags.push_back(check_tags::kEquality);
  if (matching) r.tags.push_back(check_tags::kMatching);
  if (sum > n + 2) {
    r.verdict = Verdict::fail;
  } else if (equality != matching) {
    // Equality holds exactly for perfect matchings (either side).
    r.verdict = Verdict::fail;
    r.note = equality ? "equality without a perfect matching"
                      : "perfect matching without equality";
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

CheckReport gamma2_degree_body(const Graph& g, const TdvReport& rep) {
  if (rep.gamma_t != 2) {
    return not_applicable(ids::kGamma2Degree, "gamma_t is not 2");
  }
  CheckReport r = base_report(ids::kGamma2Degree);
  r.verdict = Verdict::pass;
  std::int64_t worst = std::numeric_limits<std::int64_t>::min();
  for (int v = 1; v <= g.order(); ++v) {
    const std::int64_t value = i64(rep.tdv_of(v));
    const std::int64_t deg = g.degree(v);
    if (value > deg) {
      r.verdict = Verdict::fail;
      r.lhs = value;
      r.rhs = deg;
      r.witness = VertexSet::of({v});
      r.note = "violated at vertex " + std::to_string(v);
      return r;
    }
    if (value == deg && !r.has_tag(check_tags::kTight)) {
      r.tags.push_back(check_tags::kTight);
      r.witness = VertexSet::of({v});
    }
    if (value - deg > worst) {
      worst = value - deg;
      r.lhs = value;
      r.rhs = deg;
    }
  }
  return r;
}

CheckReport max_degree_body(const Graph& g, const TdvReport& rep) {
  const int n = g.order();
  const int max_deg = g.max_degree();
  if (max_deg < n - 3 || (max_deg == n - 3 && n < 4)) {
    return not_applicable(ids::kMaxDegreeCases,
                          "max degree not in {n-1, n-2, n-3} (or order below 4)");
  }
  CheckReport r = base_report(ids::kMaxDegreeCases);
  auto fail_at = [&r](int v, std::string why) {
    r.verdict = Verdict::fail;
    if (v >= 1) r.witness = VertexSet::of({v});
    r.note = std::move(why);
  };

  if (max_deg == n - 1) {
    r.note = "max degree n-1";
    if (rep.gamma_t != 2) {
      fail_at(0, "expected gamma_t = 2");
      return r;
    }
    for (int v = 1; v <= n; ++v) {
      const std::int64_t value = i64(rep.tdv_of(v));
      if (value > n - 1) {
        fail_at(v, "value exceeds n-1");
        r.lhs = value;
        r.rhs = n - 1;
        return r;
      }
      const bool at_cap = value == n - 1;
      const bool dominating = g.degree(v) == n - 1;
      if (at_cap != dominating) {
        fail_at(v, "value reaches n-1 exactly at vertices of degree n-1");
        r.lhs = value;
        r.rhs = n - 1;
        return r;
      }
      if (dominating) {
        r.lhs = value;
        r.rhs = n - 1;
      }
    }
    r.verdict = Verdict::pass;
    return r;
  }

  if (max_deg == n - 2) {
    r.note = "max degree n-2";
    if (rep.gamma_t != 2) {
      fail_at(0, "expected gamma_t = 2");
      return r;
    }
    bool first = true;
    for (int v = 1; v <= n; ++v) {
      const std::int64_t value = i64(rep.tdv_of(v));
      if (value > n - 2) {
        fail_at(v, "value exceeds n-2");
        r.lhs = value;
        r.rhs = n - 2;
        return r;
      }
      if (g.degree(v) != n - 2) continue;
      const VertexSet non_neighbors = VertexSet::full(n) - g.closed_neighbors(v);
      const int w = non_neighbors.min();
      if (value != g.degree(w)) {
        fail_at(v, "value differs from the degree of the non-neighbor");
        r.lhs = value;
        r.rhs = g.degree(w);
        return r;
      }
      if (first) {
        r.lhs = value;
        r.rhs = g.degree(w);
        first = false;
      }
    }
    r.verdict = Verdict::pass;
    return r;
  }

  // max degree n-3
  if (!g.is_connected()) {
    r.note = "max degree n-3, disconnected";
    if (rep.gamma_t != 4) {
      fail_at(0, "expected gamma_t = 4");
      r.lhs = rep.gamma_t;
      r.rhs = 4;
      return r;
    }
    for (int v = 1; v <= n; ++v) {
      if (g.degree(v) != max_deg) continue;
      const std::int64_t value = i64(rep.tdv_of(v));
      r.lhs = value;
      r.rhs = n - 3;
      if (value != n - 3) {
        fail_at(v, "value at a max-degree vertex must equal n-3");
        return r;
      }
    }
    r.verdict = Verdict::pass;
    return r;
  }

  r.note = "max degree n-3, connected, gamma_t = " + std::to_string(rep.gamma_t);
  if (rep.gamma_t != 2 && rep.gamma_t != 3) {
    fail_at(0, "expected gamma_t in {2, 3}");
    r.lhs = rep.gamma_t;
    return r;
  }
  const std::int64_t cap =
      rep.gamma_t == 2
          ? n - 3
          : static_cast<std::int64_t>(n - 3) * (n - 3) / 4 + 2 * (n - 4);
  std::int64_t largest = 0;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != max_deg) continue;
    const std::int64_t value = i64(rep.tdv_of(v));
    largest = std::max(largest, value);
    if (value > cap) {
      fail_at(v, "value at a max-degree vertex exceeds the case bound");
      r.lhs = value;
      r.rhs = cap;
      return r;
    }
  }
  r.lhs = largest;
  r.rhs = cap;
  r.verdict = Verdict::pass;
  return r;
}

CheckReport tau_gamma2_upper_body(const Graph& g, const TdvReport& rep) {
  const int n = g.order();
  if (rep.gamma_t != 2) {
    return not_applicable(ids::kTauGamma2Upper, "gamma_t is not 2");
  }
  if (g.max_degree() > n - 2) {
    return not_applicable(ids::kTauGamma2Upper, "max degree exceeds n-2");
  }
  CheckReport r = base_report(ids::kTauGamma2Upper);
  r.lhs = i64(rep.tau);
  r.rhs = i64(binomial(n, 2)) - (n + 1) / 2;
  r.verdict = r.lhs <= r.rhs ? Verdict::pass : Verdict::fail;
  if (r.lhs == r.rhs) r.tags.push_back(check_tags::kUpperTight);
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool CheckReport::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool is_support_vertex(const Graph& g, int v) {
  for (int w : g.neighbors(v).members()) {
    if (g.degree(w) == 1) return true;
  }
  return false;
}

CheckReport check_sum_identity(const Graph& g) {
  return sum_identity_body(g, solve(g));
}

CheckReport check_neighborhood_sum_bounds(const Graph& g, int v0) {
  g.neighbors(v0);  // validates v0
  return neighborhood_sum_body(g, solve(g), v0);
}

CheckReport check_support_vertex(const Graph& g, int s) {
  g.neighbors(s);  // validates s
  if (!is_support_vertex(g, s)) {
    return not_applicable(ids::kSupportVertex,
                          "vertex " + std::to_string(s) + " is not a support vertex");
  }
  return support_vertex_body(g, solve(g), s);
}

CheckReport check_subgraph_tau(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) {
    return not_applicable(ids::kSubgraphTau, "vertex sets differ");
  }
  for (int v = 1; v <= h.order(); ++v) {
    if ((h.neighbor_mask(v) & ~g.neighbor_mask(v)) != 0) {
      return not_applicable(ids::kSubgraphTau, "h is not a subgraph of g");
    }
  }
  if (h.has_isolated_vertex() || g.has_isolated_vertex()) {
    return not_applicable(ids::kSubgraphTau, "isolated vertex present");
  }
  const TdvReport rh = solve(h);
  const TdvReport rg = solve(g);
  if (rh.gamma_t != rg.gamma_t) {
    return not_applicable(ids::kSubgraphTau, "precondition unmet: gamma_t differs");
  }
  CheckReport r = base_report(ids::kSubgraphTau);
  r.lhs = i64(rh.tau);
  r.rhs = i64(rg.tau);
  r.verdict = r.lhs <= r.rhs ? Verdict::pass : Verdict::fail;
  if (r.lhs == r.rhs) r.tags.push_back(check_tags::kTight);
  return r;
}

CheckReport check_tau_range(const Graph& g) { return tau_range_body(g, solve(g)); }

CheckReport check_complement_gamma(const Graph& g) {
  if (int isolated = g.first_isolated_vertex(); isolated != 0) {
    return not_applicable(ids::kComplementGamma,
                          "vertex " + std::to_string(isolated) + " is isolated");
  }
  return complement_gamma_body(g, solve(g));
}

CheckReport check_gamma2_degree_bound(const Graph& g) {
  return gamma2_degree_body(g, solve(g));
}

CheckReport check_max_degree_cases(const Graph& g) {
  const int n = g.order();
  const int max_deg = g.max_degree();
  if (max_deg < n - 3 || (max_deg == n - 3 && n < 4)) {
    return not_applicable(ids::kMaxDegreeCases,
                          "max degree not in {n-1, n-2, n-3} (or order below 4)");
  }
  return max_degree_body(g, solve(g));
}

CheckReport check_tau_gamma2_upper(const Graph& g) {
  return tau_gamma2_upper_body(g, solve(g));
}

std::vector<CheckReport> run_all(const Graph& g) {
  static constexpr const char* kOrder[] = {
      ids::kSumIdentity,    ids::kNeighborhoodSum, ids::kSupportVertex,
      ids::kTauRange,       ids::kComplementGamma, ids::kGamma2Degree,
      ids::kMaxDegreeCases, ids::kTauGamma2Upper,
  };

  std::vector<CheckReport> out;
  if (int isolated = g.first_isolated_vertex(); isolated != 0) {
    const std::string why =
        "no total dominating set: vertex " + std::to_string(isolated) + " is isolated";
    for (const char* id : kOrder) out.push_back(not_applicable(id, why));
    return out;
  }

  TdvReport rep;
  try {
    rep = solve(g);
  } catch (const std::exception& e) {
    for (const char* id : kOrder) {
      CheckReport r = base_report(id);
      r.verdict = Verdict::fail;
      r.note = std::string("solver error: ") + e.what();
      out.push_back(r);
    }
    return out;
  }

  const std::function<CheckReport()> bodies[] = {
      [&] { return sum_identity_body(g, rep); },
      [&] { return neighborhood_sum_all_body(g, rep); },
      [&] { return support_vertex_all_body(g, rep); },
      [&] { return tau_range_body(g, rep); },
      [&] { return complement_gamma_body(g, rep); },
      [&] { return gamma2_degree_body(g, rep); },
      [&] { return max_degree_body(g, rep); },
      [&] { return tau_gamma2_upper_body(g, rep); },
  };
  for (std::size_t i = 0; i < std::size(bodies); ++i) {
    try {
      out.push_back(bodies[i]());
    } catch (const std::exception& e) {
      CheckReport r = base_report(kOrder[i]);
      r.verdict = Verdict::fail;
      r.note = std::string("error: ") + e.what();
      out.push_back(r);
    }
  }
  return out;
}

TauRangeScan scan_tau_range_upper_tight(int n) {
  if (n < 3 || n > 8) throw InputError("scan supports 3 <= n <= 8");

  const int m = n * (n - 1) / 2;
  std::vector<int> eu, ev;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      eu.push_back(u);
      ev.push_back(v);
    }
  }

  TauRangeScan result;
  result.graphs_scanned = std::uint64_t{1} << m;

  const int need = n / 2 + 1;  // minimum degree any attaining graph must reach
  const int floor_half = n / 2;
  const int ceil_half = (n + 1) / 2;
  const std::uint64_t bound = binomial(n, floor_half);

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int low = n;  // vertices with degree < need

  auto settle_candidate = [&]() {
    ++result.candidates;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e) {
      if ((adj[static_cast<std::size_t>(eu[static_cast<std::size_t>(e)])] >>
           ev[static_cast<std::size_t>(e)]) & 1) {
        edges.emplace_back(eu[static_cast<std::size_t>(e)] + 1,
                           ev[static_cast<std::size_t>(e)] + 1);
      }
    }
    Graph g = Graph::from_edge_list(n, edges);
    const TdvReport rep = solve(g);
    const int gt = rep.gamma_t;
    if (gt != floor_half && gt != ceil_half) return;
    if (g.min_degree() < n - gt + 1) return;
    // Every gamma_t-subset dominates, so tau must sit at the cap; verify.
    if (rep.tau != bound) {
      throw InternalError("degree condition met but tau misses the cap");
    }
    result.tight.push_back(std::move(g));
  };

  // Gray-code walk over all edge subsets: step i flips one edge.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const int e = std::countr_zero(i);
    const int u = eu[static_cast<std::size_t>(e)];
    const int v = ev[static_cast<std::size_t>(e)];
    const std::uint64_t ubit = std::uint64_t{1} << u;
    const std::uint64_t vbit = std::uint64_t{1} << v;
    if ((adj[static_cast<std::size_t>(u)] & vbit) != 0) {
      adj[static_cast<std::size_t>(u)] &= ~vbit;
      adj[static_cast<std::size_t>(v)] &= ~ubit;
      if (deg[static_cast<std::size_t>(u)]-- == need) ++low;
      if (deg[static_cast<std::size_t>(v)]-- == need) ++low;
    } else {
      adj[static_cast<std::size_t>(u)] |= vbit;
      adj[static_cast<std::size_t>(v)] |= ubit;
      if (++deg[static_cast<std::size_t>(u)] == need) --low;
      if (++deg[static_cast<std::size_t>(v)] == need) --low;
    }
    if (low == 0) settle_candidate();
  }
  return result;
}

}  // namespace tdv
