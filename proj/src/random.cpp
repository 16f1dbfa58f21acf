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

#include "tdv/random.hpp"

#include <random>
#include <vector>

#include "tdv/errors.hpp"

namespace tdv {

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 2) throw InputError("random connected graph needs at least 2 vertices");
  if (n > kMaxVertices) throw TooLargeError("graph order exceeds the build limit");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }

  std::mt19937_64 rng(seed);
  // 53-bit uniform draw; mt19937_64 output is pinned by the standard, so
  // the sampled graph is identical on every platform.
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  constexpr int kMaxAttempts = 20000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (uniform() < edge_probability) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (g.is_connected()) return g;
  }
  throw InputError("no connected sample within the attempt budget; raise p");
}

}  // namespace tdv
