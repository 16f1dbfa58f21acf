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

#ifndef TDV_RANDOM_HPP
#define TDV_RANDOM_HPP

#include <cstdint>

#include "tdv/graph.hpp"

namespace tdv {

/// Samples G(n, p) and rejects until the result is connected. Fully
/// deterministic for a given (n, p, seed): the generator is mt19937_64
/// and edge draws avoid std distributions, whose algorithms are not
/// pinned by the standard. Raises InputError if no connected sample
/// appears within an attempt budget.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace tdv

#endif  // TDV_RANDOM_HPP
