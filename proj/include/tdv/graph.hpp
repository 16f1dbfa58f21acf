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

#ifndef TDV_GRAPH_HPP
#define TDV_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdv/vertex_set.hpp"

namespace tdv {

/// A simple undirected graph on vertices labeled 1..n. Adjacency is kept
/// as one 64-bit neighbor mask per vertex, so the order is capped at
/// kMaxVertices. Instances are immutable after construction and safe to
/// share across threads.
class Graph {
 public:
  /// Builds a graph from an unordered edge list. Duplicate edges
  /// collapse; self-loops and out-of-range endpoints are input errors.
  static Graph from_edge_list(int n,
                              std::span<const std::pair<int, int>> edges,
                              std::string name = {});

  static Graph from_edge_list(int n,
                              std::initializer_list<std::pair<int, int>> edges,
                              std::string name = {}) {
    return from_edge_list(
        n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()),
        std::move(name));
  }

  int order() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  /// Open neighborhood N(v).
  VertexSet neighbors(int v) const;
  /// Closed neighborhood N[v] = N(v) + v.
  VertexSet closed_neighbors(int v) const;

  /// Raw neighbor mask for vertex v (bit w-1 set iff vw is an edge).
  std::uint64_t neighbor_mask(int v) const;
  /// Mask with one bit per vertex of the graph.
  std::uint64_t full_mask() const;

  bool has_isolated_vertex() const;
  /// First isolated vertex label, or 0 when none exists.
  int first_isolated_vertex() const;
  bool is_connected() const;

  Graph complement() const;

  /// Disjoint union; labels of `b` are shifted up by a.order().
  static Graph disjoint_union(const Graph& a, const Graph& b);

  /// Relabels vertices: new label of v is perm[v-1] (perm must be a
  /// permutation of 1..n).
  Graph relabeled(std::span<const int> perm) const;

  /// All edges as (u, v) pairs with u < v, sorted ascending.
  std::vector<std::pair<int, int>> edges() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Structural equality; names are ignored.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  Graph(int n, std::string name) : n_(n), adj_(static_cast<std::size_t>(n), 0), name_(std::move(name)) {}

  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;  // adj_[i] = neighbor mask of vertex i+1
  std::string name_;
};

}  // namespace tdv

#endif  // TDV_GRAPH_HPP
