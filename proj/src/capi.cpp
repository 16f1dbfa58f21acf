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

#include "tdv/tdv.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tdv/checks.hpp"
#include "tdv/errors.hpp"
#include "tdv/family.hpp"
#include "tdv/formulas.hpp"
#include "tdv/graph.hpp"
#include "tdv/io.hpp"
#include "tdv/random.hpp"
#include "tdv/solver.hpp"

struct tdv_graph {
  tdv::Graph g;
};

struct tdv_report {
  tdv::TdvReport r;
  int order;
};

struct tdv_check_list {
  std::vector<tdv::CheckReport> reports;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

tdv_status classify(const std::exception& e) {
  set_error(e.what());
  if (dynamic_cast<const tdv::NoTdsError*>(&e)) return TDV_ERROR_NO_TDS;
  if (dynamic_cast<const tdv::TooLargeError*>(&e)) return TDV_ERROR_TOO_LARGE;
  if (dynamic_cast<const tdv::ParseError*>(&e)) return TDV_ERROR_PARSE;
  if (dynamic_cast<const tdv::InputError*>(&e)) return TDV_ERROR_INVALID_ARGUMENT;
  return TDV_ERROR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
tdv_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TDV_OK;
  } catch (const std::exception& e) {
    return classify(e);
  } catch (...) {
    set_error("unknown error");
    return TDV_ERROR_INTERNAL;
  }
}

tdv_status require_args(bool ok, const char* message) {
  if (ok) return TDV_OK;
  set_error(message);
  return TDV_ERROR_INVALID_ARGUMENT;
}

int copy_members(const std::vector<int>& members, int* out, size_t capacity) {
  if (out != nullptr) {
    const size_t n = std::min(capacity, members.size());
    std::copy_n(members.begin(), n, out);
  }
  return static_cast<int>(members.size());
}

const tdv::CheckReport* report_at(const tdv_check_list* list, size_t index) {
  if (list == nullptr || index >= list->reports.size()) return nullptr;
  return &list->reports[index];
}

}  // namespace

extern "C" {

const char* tdv_version(void) { return "0.1.0"; }

const char* tdv_status_name(tdv_status status) {
  switch (status) {
    case TDV_OK: return "ok";
    case TDV_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case TDV_ERROR_PARSE: return "parse error";
    case TDV_ERROR_NO_TDS: return "no total dominating set";
    case TDV_ERROR_TOO_LARGE: return "graph too large";
    case TDV_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* tdv_last_error(void) { return g_last_error.c_str(); }

tdv_status tdv_graph_from_edge_list(int order, const int* endpoints,
                                    size_t edge_count, tdv_graph** out) {
  if (auto s = require_args(out != nullptr && (edge_count == 0 || endpoints != nullptr),
                            "null argument"))
    return s;
  return guarded([&]() {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    }
    *out = new tdv_graph{tdv::Graph::from_edge_list(order, edges)};
  });
}

tdv_status tdv_graph_from_family(const char* token, tdv_graph** out) {
  if (auto s = require_args(token != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = new tdv_graph{tdv::generate(token)}; });
}

tdv_status tdv_graph_parse(const char* text, int zero_based, tdv_graph** out) {
  if (auto s = require_args(text != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() {
    *out = new tdv_graph{tdv::read_graph_text(
        text, zero_based ? tdv::VertexBase::zero : tdv::VertexBase::one)};
  });
}

tdv_status tdv_graph_random_connected(int order, double edge_probability,
                                      uint64_t seed, tdv_graph** out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() {
    *out = new tdv_graph{tdv::random_connected_graph(order, edge_probability, seed)};
  });
}

tdv_status tdv_graph_complement(const tdv_graph* g, tdv_graph** out) {
  if (auto s = require_args(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = new tdv_graph{g->g.complement()}; });
}

tdv_status tdv_graph_disjoint_union(const tdv_graph* a, const tdv_graph* b,
                                    tdv_graph** out) {
  if (auto s = require_args(a != nullptr && b != nullptr && out != nullptr,
                            "null argument"))
    return s;
  return guarded([&]() { *out = new tdv_graph{tdv::Graph::disjoint_union(a->g, b->g)}; });
}

void tdv_graph_free(tdv_graph* g) { delete g; }

int tdv_graph_order(const tdv_graph* g) { return g == nullptr ? 0 : g->g.order(); }

int tdv_graph_edge_count(const tdv_graph* g) {
  return g == nullptr ? 0 : g->g.edge_count();
}

int tdv_graph_degree(const tdv_graph* g, int v) {
  if (g == nullptr || v < 1 || v > g->g.order()) return -1;
  return g->g.degree(v);
}

int tdv_graph_has_edge(const tdv_graph* g, int u, int v) {
  if (g == nullptr) return 0;
  const int n = g->g.order();
  if (u < 1 || u > n || v < 1 || v > n) return 0;
  return g->g.has_edge(u, v) ? 1 : 0;
}

int tdv_graph_neighbors(const tdv_graph* g, int v, int* out, size_t capacity) {
  if (g == nullptr || v < 1 || v > g->g.order()) return -1;
  return copy_members(g->g.neighbors(v).members(), out, capacity);
}

int tdv_graph_has_isolated_vertex(const tdv_graph* g) {
  return g != nullptr && g->g.has_isolated_vertex() ? 1 : 0;
}

int tdv_graph_is_connected(const tdv_graph* g) {
  return g != nullptr && g->g.is_connected() ? 1 : 0;
}

const char* tdv_graph_name(const tdv_graph* g) {
  return g == nullptr ? "" : g->g.name().c_str();
}

tdv_status tdv_graph_set_name(tdv_graph* g, const char* name) {
  if (auto s = require_args(g != nullptr && name != nullptr, "null argument")) return s;
  return guarded([&]() { g->g.set_name(name); });
}

tdv_status tdv_graph_format(const tdv_graph* g, char** out_text) {
  if (auto s = require_args(g != nullptr && out_text != nullptr, "null argument")) return s;
  return guarded([&]() {
    const std::string text = tdv::format_edge_list(g->g);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out_text = buffer;
  });
}

void tdv_string_free(char* text) { delete[] text; }

tdv_status tdv_solve(const tdv_graph* g, int want_tdm, int threads, tdv_report** out) {
  if (auto s = require_args(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() {
    tdv::SolveOptions options;
    options.want_tdm = want_tdm != 0;
    options.threads = threads;
    *out = new tdv_report{tdv::solve(g->g, options), g->g.order()};
  });
}

void tdv_report_free(tdv_report* r) { delete r; }

int tdv_report_gamma_t(const tdv_report* r) { return r == nullptr ? 0 : r->r.gamma_t; }

uint64_t tdv_report_tau(const tdv_report* r) { return r == nullptr ? 0 : r->r.tau; }

uint64_t tdv_report_value(const tdv_report* r, int v) {
  if (r == nullptr || v < 1 || v > r->order) {
    return std::numeric_limits<uint64_t>::max();
  }
  return r->r.tdv_of(v);
}

int tdv_report_has_tdm(const tdv_report* r) {
  return r != nullptr && r->r.tdm.has_value() ? 1 : 0;
}

size_t tdv_report_tdm_count(const tdv_report* r) {
  return r != nullptr && r->r.tdm.has_value() ? r->r.tdm->size() : 0;
}

int tdv_report_tdm_set(const tdv_report* r, size_t index, int* out, size_t capacity) {
  if (r == nullptr || !r->r.tdm.has_value() || index >= r->r.tdm->size()) return -1;
  return copy_members((*r->r.tdm)[index].members(), out, capacity);
}

tdv_status tdv_is_tds(const tdv_graph* g, const int* vertices, size_t count,
                      int* out_is_tds) {
  if (auto s = require_args(g != nullptr && out_is_tds != nullptr &&
                                (count == 0 || vertices != nullptr),
                            "null argument"))
    return s;
  return guarded([&]() {
    tdv::VertexSet set;
    for (size_t i = 0; i < count; ++i) set.add(vertices[i]);
    *out_is_tds = tdv::is_tds(g->g, set) ? 1 : 0;
  });
}

tdv_status tdv_formula_gamma_t_path(int64_t n, uint64_t* out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = tdv::gamma_t_path(n); });
}

tdv_status tdv_formula_gamma_t_cycle(int64_t n, uint64_t* out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = tdv::gamma_t_cycle(n); });
}

tdv_status tdv_formula_tau_path(int64_t n, uint64_t* out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = tdv::tau_path(n); });
}

tdv_status tdv_formula_tau_cycle(int64_t n, uint64_t* out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = tdv::tau_cycle(n); });
}

tdv_status tdv_formula_tdv_cycle(int64_t n, uint64_t* out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = tdv::tdv_cycle(n); });
}

tdv_status tdv_formula_tdv_path(int64_t n, int64_t v, uint64_t* out) {
  if (auto s = require_args(out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = tdv::tdv_path(n, v); });
}

tdv_status tdv_formula_multipartite_tau(const int* parts, size_t part_count,
                                        uint64_t* out) {
  if (auto s = require_args(parts != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() {
    *out = tdv::multipartite_tau(std::span<const int>(parts, part_count));
  });
}

tdv_status tdv_formula_multipartite_tdv(const int* parts, size_t part_count,
                                        int part_index, uint64_t* out) {
  if (auto s = require_args(parts != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() {
    *out = tdv::multipartite_tdv(std::span<const int>(parts, part_count), part_index);
  });
}

tdv_status tdv_formula_mk2_complement_tdv(int m, uint64_t* out_in_matching,
                                          uint64_t* out_in_complement) {
  if (auto s = require_args(out_in_matching != nullptr && out_in_complement != nullptr,
                            "null argument"))
    return s;
  return guarded([&]() {
    const auto pair = tdv::mk2_complement_tdv(m);
    *out_in_matching = pair.in_matching;
    *out_in_complement = pair.in_complement;
  });
}

tdv_status tdv_check_run_all(const tdv_graph* g, tdv_check_list** out) {
  if (auto s = require_args(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() { *out = new tdv_check_list{tdv::run_all(g->g)}; });
}

tdv_status tdv_check_neighborhood_sum(const tdv_graph* g, int v0, tdv_check_list** out) {
  if (auto s = require_args(g != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&]() {
    *out = new tdv_check_list{{tdv::check_neighborhood_sum_bounds(g->g, v0)}};
  });
}

tdv_status tdv_check_support_vertex(const tdv_graph* g, int s, tdv_check_list** out) {
  if (auto st = require_args(g != nullptr && out != nullptr, "null argument")) return st;
  return guarded([&]() {
    *out = new tdv_check_list{{tdv::check_support_vertex(g->g, s)}};
  });
}

tdv_status tdv_check_subgraph_tau(const tdv_graph* h, const tdv_graph* g,
                                  tdv_check_list** out) {
  if (auto s = require_args(h != nullptr && g != nullptr && out != nullptr,
                            "null argument"))
    return s;
  return guarded([&]() {
    *out = new tdv_check_list{{tdv::check_subgraph_tau(h->g, g->g)}};
  });
}

void tdv_check_list_free(tdv_check_list* list) { delete list; }

size_t tdv_check_list_count(const tdv_check_list* list) {
  return list == nullptr ? 0 : list->reports.size();
}

const char* tdv_check_id(const tdv_check_list* list, size_t index) {
  const auto* r = report_at(list, index);
  return r == nullptr ? "" : r->check_id.c_str();
}

tdv_verdict tdv_check_verdict(const tdv_check_list* list, size_t index) {
  const auto* r = report_at(list, index);
  if (r == nullptr) return TDV_VERDICT_NOT_APPLICABLE;
  switch (r->verdict) {
    case tdv::Verdict::pass: return TDV_VERDICT_PASS;
    case tdv::Verdict::fail: return TDV_VERDICT_FAIL;
    case tdv::Verdict::not_applicable: return TDV_VERDICT_NOT_APPLICABLE;
  }
  return TDV_VERDICT_NOT_APPLICABLE;
}

int64_t tdv_check_lhs(const tdv_check_list* list, size_t index) {
  const auto* r = report_at(list, index);
  return r == nullptr ? 0 : r->lhs;
}

int64_t tdv_check_rhs(const tdv_check_list* list, size_t index) {
  const auto* r = report_at(list, index);
  return r == nullptr ? 0 : r->rhs;
}

const char* tdv_check_note(const tdv_check_list* list, size_t index) {
  const auto* r = report_at(list, index);
  return r == nullptr ? "" : r->note.c_str();
}

size_t tdv_check_tag_count(const tdv_check_list* list, size_t index) {
  const auto* r = report_at(list, index);
  return r == nullptr ? 0 : r->tags.size();
}

const char* tdv_check_tag(const tdv_check_list* list, size_t index, size_t tag_index) {
  const auto* r = report_at(list, index);
  if (r == nullptr || tag_index >= r->tags.size()) return "";
  return r->tags[tag_index].c_str();
}

int tdv_check_has_tag(const tdv_check_list* list, size_t index, const char* tag) {
  const auto* r = report_at(list, index);
  return r != nullptr && tag != nullptr && r->has_tag(tag) ? 1 : 0;
}

int tdv_check_witness(const tdv_check_list* list, size_t index, int* out,
                      size_t capacity) {
  const auto* r = report_at(list, index);
  if (r == nullptr || !r->witness.has_value()) return 0;
  return copy_members(r->witness->members(), out, capacity);
}

tdv_status tdv_scan_tau_range_upper(int order, uint64_t* out_scanned,
                                    uint64_t* out_tight_count,
                                    int* out_only_complete_tight) {
  if (auto s = require_args(out_scanned != nullptr && out_tight_count != nullptr &&
                                out_only_complete_tight != nullptr,
                            "null argument"))
    return s;
  return guarded([&]() {
    const tdv::TauRangeScan scan = tdv::scan_tau_range_upper_tight(order);
    *out_scanned = scan.graphs_scanned;
    *out_tight_count = scan.tight.size();
    const int complete_edges = order * (order - 1) / 2;
    bool only_complete = true;
    for (const tdv::Graph& g : scan.tight) {
      if (g.edge_count() != complete_edges) only_complete = false;
    }
    *out_only_complete_tight = only_complete ? 1 : 0;
  });
}

}  // extern "C"
