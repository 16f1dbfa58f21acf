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

#ifndef TDV_IO_HPP
#define TDV_IO_HPP

#include <string>
#include <string_view>

#include "tdv/graph.hpp"

namespace tdv {

/// Label convention of a graph text file. Labels are normalized to
/// 1-based on ingestion.
enum class VertexBase { one, zero };

/// Parses graph text in either of two formats, auto-detected:
///
///   plain edge list          DIMACS-like
///   ----------------         -----------------
///   # comment                c comment
///   n m                      p edge n m
///   u v   (m lines)          e u v   (m lines)
///
/// '#' starts a comment in both formats. A comment of the form
/// "# name: X" (or "c name: X") sets the graph name, which the writer
/// emits so generated files round-trip.
Graph read_graph_text(std::string_view text, VertexBase base = VertexBase::one);

/// Renders the plain edge-list format: "n m" followed by one "u v" line
/// per edge (u < v, ascending). A "# name:" comment precedes the header
/// when the graph carries a name.
std::string format_edge_list(const Graph& g);

}  // namespace tdv

#endif  // TDV_IO_HPP
