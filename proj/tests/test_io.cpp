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

#include "doctest.h"
#include "tdv/errors.hpp"
#include "tdv/family.hpp"
#include "tdv/io.hpp"

using tdv::Graph;
using tdv::read_graph_text;
using tdv::VertexBase;

TEST_CASE("plain edge list parsing") {
  const Graph g = read_graph_text(
      "# a path on four vertices\n"
      "4 3\n"
      "1 2\n"
      "2 3  # trailing comment\n"
      "3 4\n");
  CHECK(g == tdv::generate("path:4"));
  CHECK(g.name().empty());
}

TEST_CASE("name comments round-trip through the writer") {
  const std::string text = tdv::format_edge_list(tdv::generate("path:4"));
  CHECK(text == "# name: path:4\n4 3\n1 2\n2 3\n3 4\n");
  const Graph g = read_graph_text(text);
  CHECK(g == tdv::generate("path:4"));
  CHECK(g.name() == "path:4");
}

TEST_CASE("writer round-trips every family") {
  for (const char* token : {"cycle:5", "kpartite:2,3", "queen:3x3", "figure:1b",
                            "mk2:3", "extstar:4", "uppersharp:7"}) {
    const Graph g = tdv::generate(token);
    const Graph back = read_graph_text(tdv::format_edge_list(g));
    CHECK(back == g);
    CHECK(back.name() == token);
  }
}

TEST_CASE("dimacs-like parsing") {
  const Graph g = read_graph_text(
      "c generated instance\n"
      "c name: sample\n"
      "p edge 4 3\n"
      "e 1 2\n"
      "e 2 3\n"
      "e 3 4\n");
  CHECK(g == tdv::generate("path:4"));
  CHECK(g.name() == "sample");
}

TEST_CASE("zero-based ingestion") {
  const Graph g = read_graph_text("3 2\n0 1\n1 2\n", VertexBase::zero);
  CHECK(g == tdv::generate("path:3"));
  CHECK(read_graph_text("p edge 3 2\ne 0 1\ne 1 2\n", VertexBase::zero) ==
        tdv::generate("path:3"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(read_graph_text(""), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("# only comments\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4 2 9\n1 2\n2 3\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4 3\n1 2\n2 3\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4 1\n1 2\n2 3\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4 1\n1 x\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4 1\n1 2 3\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("4 1\n1 9\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("0 0\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("p vertex 3 2\ne 1 2\ne 2 3\n"), tdv::ParseError);
  CHECK_THROWS_AS(read_graph_text("p edge 3 2\n1 2\n2 3\n"), tdv::ParseError);
  // Self-loops are rejected by graph construction.
  CHECK_THROWS_AS(read_graph_text("3 1\n2 2\n"), tdv::InputError);
}
