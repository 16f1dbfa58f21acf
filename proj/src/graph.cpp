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

#include "tdv/graph.hpp"

#include <algorithm>
#include <bit>

#include "tdv/errors.hpp"

namespace tdv {

namespace {

constexpr std::uint64_t bit_of(int v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                            std::string name) {
  if (n < 1) throw InputError("vertex count must be positive");
  if (n > kMaxVertices) {
    throw TooLargeError("graph order " + std::to_string(n) +
                        " exceeds the build limit of " +
                        std::to_string(kMaxVertices) + " vertices");
  }
  Graph g(n, std::move(name));
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                       ", " + std::to_string(v) + ") with n = " +
                       std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u) - 1] |= bit_of(v);
    g.adj_[static_cast<std::size_t>(v) - 1] |= bit_of(u);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw InputError("vertex " + std::to_string(v) + " not in 1.." +
                     std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t mask : adj_) twice += std::popcount(mask);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u) - 1] & bit_of(v)) != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v) - 1]);
}

int Graph::max_degree() const {
  int best = 0;
  for (std::uint64_t mask : adj_) best = std::max(best, std::popcount(mask));
  return best;
}

int Graph::min_degree() const {
  int best = n_;
  for (std::uint64_t mask : adj_) best = std::min(best, std::popcount(mask));
  return best;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet::from_mask(adj_[static_cast<std::size_t>(v) - 1]);
}

VertexSet Graph::closed_neighbors(int v) const {
  check_vertex(v);
  return VertexSet::from_mask(adj_[static_cast<std::size_t>(v) - 1] | bit_of(v));
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v) - 1];
}

std::uint64_t Graph::full_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
}

bool Graph::has_isolated_vertex() const { return first_isolated_vertex() != 0; }

int Graph::first_isolated_vertex() const {
  for (int v = 1; v <= n_; ++v) {
    if (adj_[static_cast<std::size_t>(v) - 1] == 0) return v;
  }
  return 0;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t reached = 1;  // vertex 1
  for (;;) {
    std::uint64_t frontier = 0;
    for (std::uint64_t rest = reached; rest != 0; rest &= rest - 1) {
      frontier |= adj_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    std::uint64_t next = reached | frontier;
    if (next == reached) break;
    reached = next;
  }
  return reached == full_mask();
}

Graph Graph::complement() const {
  Graph g(n_, {});
  const std::uint64_t full = full_mask();
  for (int v = 1; v <= n_; ++v) {
    g.adj_[static_cast<std::size_t>(v) - 1] =
        full & ~adj_[static_cast<std::size_t>(v) - 1] & ~bit_of(v);
  }
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  if (a.n_ + b.n_ > kMaxVertices) {
    throw TooLargeError("union order exceeds the build limit of " +
                        std::to_string(kMaxVertices) + " vertices");
  }
  Graph g(a.n_ + b.n_, {});
  for (int v = 1; v <= a.n_; ++v) {
    g.adj_[static_cast<std::size_t>(v) - 1] = a.adj_[static_cast<std::size_t>(v) - 1];
  }
  for (int v = 1; v <= b.n_; ++v) {
    g.adj_[static_cast<std::size_t>(a.n_ + v) - 1] =
        b.adj_[static_cast<std::size_t>(v) - 1] << a.n_;
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InputError("permutation length does not match graph order");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 1 || p > n_) throw InputError("permutation value out of range");
    seen |= bit_of(p);
  }
  if (seen != full_mask()) throw InputError("not a permutation of 1..n");

  std::vector<std::pair<int, int>> mapped;
  for (auto [u, v] : edges()) {
    mapped.emplace_back(perm[static_cast<std::size_t>(u) - 1],
                        perm[static_cast<std::size_t>(v) - 1]);
  }
  return from_edge_list(n_, mapped, name_);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    std::uint64_t rest = adj_[static_cast<std::size_t>(u) - 1];
    rest &= ~(bit_of(u) | (bit_of(u) - 1));  // keep neighbors above u
    for (; rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest) + 1);
    }
  }
  return out;
}

}  // namespace tdv
