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

#include "tdv/family.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "tdv/errors.hpp"

namespace tdv {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

Graph path_graph(int n) {
  if (n < 2) throw InputError("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edge_list(n, edges);
}

// Parts occupy consecutive label blocks: part 1 is {1..a1}, part 2 the
// next a2 labels, and so on. Every cross-part pair is an edge.
Graph multipartite_graph(const std::vector<int>& parts) {
  if (parts.size() < 2) throw InputError("multipartite graph needs at least 2 parts");
  for (int a : parts) {
    if (a < 1) throw InputError("multipartite part sizes must be positive");
  }
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of(static_cast<std::size_t>(n) + 1, 0);
  int label = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (int i = 0; i < parts[j]; ++i) part_of[static_cast<std::size_t>(label++)] = static_cast<int>(j);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  if (n < 2) throw InputError("complete graph needs at least 2 vertices");
  return multipartite_graph(std::vector<int>(static_cast<std::size_t>(n), 1));
}

// K_{1,L}: center 1, leaves 2..L+1.
Graph star_graph(int leaves) {
  if (leaves < 1) throw InputError("star needs at least 1 leaf");
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
  return Graph::from_edge_list(leaves + 1, edges);
}

// Center 1; arm i is the two-vertex path (1+i, a+1+i) hanging from the
// center, so the mid vertices 2..a+1 are the supports of the tips.
Graph extended_star_graph(int arms) {
  if (arms < 3) throw InputError("extended star needs at least 3 arms");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= arms; ++i) {
    edges.emplace_back(1, 1 + i);
    edges.emplace_back(1 + i, arms + 1 + i);
  }
  return Graph::from_edge_list(2 * arms + 1, edges);
}

// m disjoint edges (2i-1, 2i).
Graph matching_graph(int m) {
  if (m < 1) throw InputError("matching needs at least 1 edge");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  return Graph::from_edge_list(2 * m, edges);
}

// Board squares in row-major order: square (i, j) is vertex i*cols + j + 1.
// Two squares are adjacent iff a queen moves between them: same row, same
// column, or same diagonal. Only the small boards are supported.
Graph queen_graph(int rows, int cols) {
  if ((rows != 3 && rows != 4) || (cols != 3 && cols != 4)) {
    throw InputError("queen board sides must be 3 or 4");
  }
  const int n = rows * cols;
  std::vector<std::pair<int, int>> edges;
  auto label = [cols](int i, int j) { return i * cols + j + 1; };
  for (int i1 = 0; i1 < rows; ++i1) {
    for (int j1 = 0; j1 < cols; ++j1) {
      for (int i2 = 0; i2 < rows; ++i2) {
        for (int j2 = 0; j2 < cols; ++j2) {
          if (label(i1, j1) >= label(i2, j2)) continue;
          const bool aligned = i1 == i2 || j1 == j2 ||
                               std::abs(i1 - i2) == std::abs(j1 - j2);
          if (aligned) edges.emplace_back(label(i1, j1), label(i2, j2));
        }
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

// Star on 4 vertices; hub 1, leaves 2..4. The hub sits in every minimum
// set, paired with any leaf, so tau = 3 and the closed neighborhood of
// the hub carries the whole TDV mass.
Graph figure_1a_graph() {
  return Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}});
}

// Tree on 10 vertices, drawn with hub 1 in the middle:
//
//   5 - 2 - 1 - 3 - 6        hub 1 joined to supports 2, 3, 4;
//       |     |              each support keeps a leaf (5, 6, 7);
//       8     4 - 7          a tail 8-9-10 continues below support 2.
//       |
//       9 - 10
//
// The supports 2, 3, 4, 9 and the hub sit in every minimum set; the
// sixth member dominates 9, giving exactly the two sets
// {1,2,3,4,8,9} and {1,2,3,4,9,10}.
Graph figure_1b_graph() {
  return Graph::from_edge_list(10, {{1, 2},
                                    {1, 3},
                                    {1, 4},
                                    {2, 5},
                                    {3, 6},
                                    {4, 7},
                                    {2, 8},
                                    {8, 9},
                                    {9, 10}});
}

// Hub 1 adjacent to 2..5; vertex 6 sits above the pair {2, 3} and vertex
// 7 above {4, 5}, with no common neighbor of 6 and 7 and no edge between
// them. Minimum sets are exactly {1, a, b} with a in N(6), b in N(7).
Graph figure_4a_graph() {
  return Graph::from_edge_list(
      7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 7}, {5, 7}});
}

// Hub 1 adjacent to 2..7 (the unique maximum degree, n-3); the adjacent
// pair {2, 3} covers everything, 2 through its pendant 8 and wings 4, 5,
// and 3 through its pendant 9 and wings 6, 7. {2, 3} is the unique
// minimum set and the hub belongs to no minimum set at all.
Graph figure_5_graph() {
  return Graph::from_edge_list(9, {{1, 2},
                                   {1, 3},
                                   {1, 4},
                                   {1, 5},
                                   {1, 6},
                                   {1, 7},
                                   {2, 3},
                                   {2, 4},
                                   {2, 5},
                                   {2, 8},
                                   {3, 6},
                                   {3, 7},
                                   {3, 9}});
}

// P_4 on labels 1..4 plus n-4 extra leaves on the support vertex 2. The
// unique minimum set is {2, 3}; any end-vertex (say 1) has a closed
// neighborhood meeting it in exactly one vertex.
Graph lower_sharp_graph(int n) {
  if (n < 4) throw InputError("construction needs at least 4 vertices");
  std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4}};
  for (int v = 5; v <= n; ++v) edges.emplace_back(2, v);
  return Graph::from_edge_list(n, edges);
}

// P_5 on labels 1..5 plus n-5 extra leaves on the support vertex 2. The
// unique minimum set is {2, 3, 4}; vertex 3 is the degree-2 common
// neighbor of the two supports.
Graph upper_sharp_graph(int n) {
  if (n < 5) throw InputError("construction needs at least 5 vertices");
  std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  for (int v = 6; v <= n; ++v) edges.emplace_back(2, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view token) {
  const auto colon = token.find(':');
  const std::string_view kind = token.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : token.substr(colon + 1);

  auto need_params = [&]() {
    if (params.empty()) {
      throw InputError("family '" + std::string(kind) + "' needs parameters");
    }
  };

  FamilySpec spec;
  if (kind == "path" || kind == "cycle" || kind == "complete" ||
      kind == "star" || kind == "extstar" || kind == "mk2" ||
      kind == "lowersharp" || kind == "uppersharp") {
    need_params();
    spec.n = parse_int(params, "family parameter");
    if (kind == "path") spec.kind = Kind::path;
    else if (kind == "cycle") spec.kind = Kind::cycle;
    else if (kind == "complete") spec.kind = Kind::complete;
    else if (kind == "star") spec.kind = Kind::star;
    else if (kind == "extstar") spec.kind = Kind::extended_star;
    else if (kind == "mk2") spec.kind = Kind::matching;
    else if (kind == "lowersharp") spec.kind = Kind::lower_sharp;
    else spec.kind = Kind::upper_sharp;
  } else if (kind == "kpartite") {
    need_params();
    spec.kind = Kind::multipartite;
    std::string_view rest = params;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      spec.parts.push_back(parse_int(rest.substr(0, comma), "part size"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else if (kind == "queen") {
    need_params();
    spec.kind = Kind::queen;
    const auto x = params.find('x');
    if (x == std::string_view::npos) {
      throw InputError("queen board must be given as RxC, e.g. queen:4x4");
    }
    spec.rows = parse_int(params.substr(0, x), "board rows");
    spec.cols = parse_int(params.substr(x + 1), "board cols");
  } else if (kind == "figure") {
    need_params();
    if (params == "1a") spec.kind = Kind::figure_1a;
    else if (params == "1b") spec.kind = Kind::figure_1b;
    else if (params == "4a") spec.kind = Kind::figure_4a;
    else if (params == "5") spec.kind = Kind::figure_5;
    else throw InputError("unknown figure '" + std::string(params) + "' (expected 1a, 1b, 4a, or 5)");
  } else {
    throw InputError("unknown family '" + std::string(kind) + "'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::path: return "path:" + std::to_string(n);
    case Kind::cycle: return "cycle:" + std::to_string(n);
    case Kind::complete: return "complete:" + std::to_string(n);
    case Kind::star: return "star:" + std::to_string(n);
    case Kind::extended_star: return "extstar:" + std::to_string(n);
    case Kind::matching: return "mk2:" + std::to_string(n);
    case Kind::lower_sharp: return "lowersharp:" + std::to_string(n);
    case Kind::upper_sharp: return "uppersharp:" + std::to_string(n);
    case Kind::queen: return "queen:" + std::to_string(rows) + "x" + std::to_string(cols);
    case Kind::figure_1a: return "figure:1a";
    case Kind::figure_1b: return "figure:1b";
    case Kind::figure_4a: return "figure:4a";
    case Kind::figure_5: return "figure:5";
    case Kind::multipartite: {
      std::string out = "kpartite:";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts[i]);
      }
      return out;
    }
  }
  throw InputError("invalid family spec");
}

Graph generate(const FamilySpec& spec) {
  Graph g = [&spec]() {
    switch (spec.kind) {
      case FamilySpec::Kind::path: return path_graph(spec.n);
      case FamilySpec::Kind::cycle: return cycle_graph(spec.n);
      case FamilySpec::Kind::complete: return complete_graph(spec.n);
      case FamilySpec::Kind::multipartite: return multipartite_graph(spec.parts);
      case FamilySpec::Kind::star: return star_graph(spec.n);
      case FamilySpec::Kind::extended_star: return extended_star_graph(spec.n);
      case FamilySpec::Kind::matching: return matching_graph(spec.n);
      case FamilySpec::Kind::queen: return queen_graph(spec.rows, spec.cols);
      case FamilySpec::Kind::figure_1a: return figure_1a_graph();
      case FamilySpec::Kind::figure_1b: return figure_1b_graph();
      case FamilySpec::Kind::figure_4a: return figure_4a_graph();
      case FamilySpec::Kind::figure_5: return figure_5_graph();
      case FamilySpec::Kind::lower_sharp: return lower_sharp_graph(spec.n);
      case FamilySpec::Kind::upper_sharp: return upper_sharp_graph(spec.n);
    }
    throw InputError("invalid family spec");
  }();
  g.set_name(spec.to_string());
  return g;
}

Graph generate(std::string_view token) { return generate(FamilySpec::parse(token)); }

}  // namespace tdv
