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

#include "tdv/io.hpp"

#include <sstream>
#include <vector>

#include "tdv/errors.hpp"

namespace tdv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

struct Line {
  std::string_view text;
  int number;
};

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

long parse_long(std::istringstream& in, const Line& line, const char* what) {
  long value = 0;
  if (!(in >> value)) fail(line, std::string("expected ") + what);
  return value;
}

}  // namespace

Graph read_graph_text(std::string_view text, VertexBase base) {
  // Split into meaningful lines, harvesting name comments on the way.
  std::vector<Line> lines;
  std::string name;
  int line_number = 0;
  std::size_t pos = 0;
  bool dimacs = false;
  bool format_known = false;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;

    std::string_view line = trim(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (starts_with(comment, "name:")) name = std::string(trim(comment.substr(5)));
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    if (!format_known) {
      dimacs = line.front() == 'p' || line.front() == 'c';
      format_known = true;
    }
    if (dimacs && line.front() == 'c') {
      std::string_view comment = trim(line.substr(1));
      if (starts_with(comment, "name:")) name = std::string(trim(comment.substr(5)));
      continue;
    }
    lines.push_back({line, line_number});
  }
  if (lines.empty()) throw ParseError("empty graph text");

  long n = 0, m = 0;
  std::size_t next = 0;
  {
    const Line& header = lines[next++];
    std::istringstream in{std::string(header.text)};
    if (dimacs) {
      std::string tag, kind;
      if (!(in >> tag >> kind) || tag != "p" || kind != "edge") {
        fail(header, "expected 'p edge n m' header");
      }
    }
    n = parse_long(in, header, "vertex count");
    m = parse_long(in, header, "edge count");
    std::string extra;
    if (in >> extra) fail(header, "trailing data after header");
  }
  if (n < 1) throw ParseError("vertex count must be positive");
  if (m < 0) throw ParseError("edge count must be nonnegative");
  if (static_cast<std::size_t>(m) != lines.size() - 1) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (; next < lines.size(); ++next) {
    const Line& line = lines[next];
    std::istringstream in{std::string(line.text)};
    if (dimacs) {
      std::string tag;
      if (!(in >> tag) || tag != "e") fail(line, "expected 'e u v'");
    }
    long u = parse_long(in, line, "edge endpoint");
    long v = parse_long(in, line, "edge endpoint");
    std::string extra;
    if (in >> extra) fail(line, "trailing data after edge");
    if (base == VertexBase::zero) {
      ++u;
      ++v;
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      fail(line, "edge endpoint out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  return Graph::from_edge_list(static_cast<int>(n), edges, std::move(name));
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  if (!g.name().empty()) out += "# name: " + g.name() + "\n";
  const auto edges = g.edges();
  out += std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace tdv
