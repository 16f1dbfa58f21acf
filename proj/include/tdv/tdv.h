/* Copyright 2026 The tdv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the total-domination toolkit shared library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions that can fail return tdv_status; on failure the thread-local
 * message from tdv_last_error() describes the problem. Vertex labels are
 * 1-based everywhere.
 */

#ifndef TDV_TDV_H
#define TDV_TDV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TDV_API __declspec(dllexport)
#else
#define TDV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tdv_graph tdv_graph;
typedef struct tdv_report tdv_report;
typedef struct tdv_check_list tdv_check_list;

typedef enum tdv_status {
  TDV_OK = 0,
  TDV_ERROR_INVALID_ARGUMENT = 1,
  TDV_ERROR_PARSE = 2,
  TDV_ERROR_NO_TDS = 3,
  TDV_ERROR_TOO_LARGE = 4,
  TDV_ERROR_INTERNAL = 5
} tdv_status;

typedef enum tdv_verdict {
  TDV_VERDICT_PASS = 0,
  TDV_VERDICT_FAIL = 1,
  TDV_VERDICT_NOT_APPLICABLE = 2
} tdv_verdict;

TDV_API const char *tdv_version(void);
TDV_API const char *tdv_status_name(tdv_status status);
/* Message of the most recent failure on this thread ("" when none). */
TDV_API const char *tdv_last_error(void);

/* ---- graphs ---------------------------------------------------------- */

/* endpoints holds 2*edge_count labels: u1, v1, u2, v2, ... */
TDV_API tdv_status tdv_graph_from_edge_list(int order, const int *endpoints,
                                            size_t edge_count, tdv_graph **out);
/* Family token, e.g. "path:6", "kpartite:2,3", "queen:4x4", "figure:1b". */
TDV_API tdv_status tdv_graph_from_family(const char *token, tdv_graph **out);
/* Plain edge-list or DIMACS-like text; zero_based selects the label base
 * of the input (labels are normalized to 1-based). */
TDV_API tdv_status tdv_graph_parse(const char *text, int zero_based,
                                   tdv_graph **out);
TDV_API tdv_status tdv_graph_random_connected(int order, double edge_probability,
                                              uint64_t seed, tdv_graph **out);
TDV_API tdv_status tdv_graph_complement(const tdv_graph *g, tdv_graph **out);
TDV_API tdv_status tdv_graph_disjoint_union(const tdv_graph *a,
                                            const tdv_graph *b, tdv_graph **out);
TDV_API void tdv_graph_free(tdv_graph *g);

TDV_API int tdv_graph_order(const tdv_graph *g);
TDV_API int tdv_graph_edge_count(const tdv_graph *g);
/* -1 when v is not a vertex. */
TDV_API int tdv_graph_degree(const tdv_graph *g, int v);
TDV_API int tdv_graph_has_edge(const tdv_graph *g, int u, int v);
/* Writes up to capacity neighbor labels (ascending); returns the full
 * neighbor count, or -1 when v is not a vertex. */
TDV_API int tdv_graph_neighbors(const tdv_graph *g, int v, int *out,
                                size_t capacity);
TDV_API int tdv_graph_has_isolated_vertex(const tdv_graph *g);
TDV_API int tdv_graph_is_connected(const tdv_graph *g);
TDV_API const char *tdv_graph_name(const tdv_graph *g);
TDV_API tdv_status tdv_graph_set_name(tdv_graph *g, const char *name);
/* Plain edge-list text; release with tdv_string_free. */
TDV_API tdv_status tdv_graph_format(const tdv_graph *g, char **out_text);
TDV_API void tdv_string_free(char *text);

/* ---- exact solving --------------------------------------------------- */

/* Computes gamma_t, tau, and all per-vertex values; want_tdm additionally
 * materializes every minimum set. threads >= 1; the result is identical
 * for every thread count. Fails with TDV_ERROR_NO_TDS when the graph has
 * an isolated vertex. */
TDV_API tdv_status tdv_solve(const tdv_graph *g, int want_tdm, int threads,
                             tdv_report **out);
TDV_API void tdv_report_free(tdv_report *r);
TDV_API int tdv_report_gamma_t(const tdv_report *r);
TDV_API uint64_t tdv_report_tau(const tdv_report *r);
/* TDV of vertex v; UINT64_MAX when v is out of range. */
TDV_API uint64_t tdv_report_value(const tdv_report *r, int v);
TDV_API int tdv_report_has_tdm(const tdv_report *r);
TDV_API size_t tdv_report_tdm_count(const tdv_report *r);
/* Writes up to capacity labels of set #index (ascending); returns the set
 * size, or -1 when the index is out of range or sets were not kept. */
TDV_API int tdv_report_tdm_set(const tdv_report *r, size_t index, int *out,
                               size_t capacity);
/* Sets *out_is_tds to 1 iff the given vertices totally dominate g. */
TDV_API tdv_status tdv_is_tds(const tdv_graph *g, const int *vertices,
                              size_t count, int *out_is_tds);

/* ---- closed forms ---------------------------------------------------- */

TDV_API tdv_status tdv_formula_gamma_t_path(int64_t n, uint64_t *out);
TDV_API tdv_status tdv_formula_gamma_t_cycle(int64_t n, uint64_t *out);
TDV_API tdv_status tdv_formula_tau_path(int64_t n, uint64_t *out);
TDV_API tdv_status tdv_formula_tau_cycle(int64_t n, uint64_t *out);
TDV_API tdv_status tdv_formula_tdv_cycle(int64_t n, uint64_t *out);
TDV_API tdv_status tdv_formula_tdv_path(int64_t n, int64_t v, uint64_t *out);
TDV_API tdv_status tdv_formula_multipartite_tau(const int *parts,
                                                size_t part_count, uint64_t *out);
/* part_index is 1-based. */
TDV_API tdv_status tdv_formula_multipartite_tdv(const int *parts,
                                                size_t part_count, int part_index,
                                                uint64_t *out);
/* TDV of any vertex of mK_2 and of its complement (m >= 2); the values
 * sum to 2m - 1. */
TDV_API tdv_status tdv_formula_mk2_complement_tdv(int m, uint64_t *out_in_matching,
                                                  uint64_t *out_in_complement);

/* ---- property checks ------------------------------------------------- */

/* Runs every single-graph check in a fixed order. */
TDV_API tdv_status tdv_check_run_all(const tdv_graph *g, tdv_check_list **out);
/* Single checks; each yields a one-element list. */
TDV_API tdv_status tdv_check_neighborhood_sum(const tdv_graph *g, int v0,
                                              tdv_check_list **out);
TDV_API tdv_status tdv_check_support_vertex(const tdv_graph *g, int s,
                                            tdv_check_list **out);
TDV_API tdv_status tdv_check_subgraph_tau(const tdv_graph *h, const tdv_graph *g,
                                          tdv_check_list **out);
TDV_API void tdv_check_list_free(tdv_check_list *list);

TDV_API size_t tdv_check_list_count(const tdv_check_list *list);
TDV_API const char *tdv_check_id(const tdv_check_list *list, size_t index);
TDV_API tdv_verdict tdv_check_verdict(const tdv_check_list *list, size_t index);
TDV_API int64_t tdv_check_lhs(const tdv_check_list *list, size_t index);
TDV_API int64_t tdv_check_rhs(const tdv_check_list *list, size_t index);
TDV_API const char *tdv_check_note(const tdv_check_list *list, size_t index);
TDV_API size_t tdv_check_tag_count(const tdv_check_list *list, size_t index);
TDV_API const char *tdv_check_tag(const tdv_check_list *list, size_t index,
                                  size_t tag_index);
TDV_API int tdv_check_has_tag(const tdv_check_list *list, size_t index,
                              const char *tag);
/* Writes up to capacity witness labels (ascending); returns the witness
 * size (0 when the report has no witness). */
TDV_API int tdv_check_witness(const tdv_check_list *list, size_t index, int *out,
                              size_t capacity);

/* Exhaustive tightness scan of the tau upper bound C(n, floor(n/2)) over
 * all labeled graphs on `order` vertices (3 <= order <= 8). Reports how
 * many graphs attain the bound and whether every one of them is the
 * complete graph. */
TDV_API tdv_status tdv_scan_tau_range_upper(int order, uint64_t *out_scanned,
                                            uint64_t *out_tight_count,
                                            int *out_only_complete_tight);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TDV_TDV_H */
