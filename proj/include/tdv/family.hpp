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

#ifndef TDV_FAMILY_HPP
#define TDV_FAMILY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tdv/graph.hpp"

namespace tdv {

/// Parametric description of a generated graph family. Tokens follow the
/// mini-grammar used by the CLI:
///
///   path:N cycle:N complete:N kpartite:a,b,c star:L extstar:A mk2:M
///   queen:RxC figure:{1a|1b|4a|5} lowersharp:N uppersharp:N
struct FamilySpec {
  enum class Kind {
    path,              // P_n, n >= 2
    cycle,             // C_n, n >= 3
    complete,          // K_n, n >= 2
    multipartite,      // complete multipartite, >= 2 parts, each >= 1
    star,              // K_{1,L}, center = 1, L >= 1 leaves
    extended_star,     // center 1 with A >= 3 arms of two vertices each
    matching,          // mK_2: m disjoint edges (2i-1, 2i)
    queen,             // queen-move graph on an RxC board, R, C in {3, 4}
    figure_1a,         // built-in example: star on 4 vertices
    figure_1b,         // built-in example: 10-vertex tree, see generator
    figure_4a,         // built-in example: 7-vertex double fan, see generator
    figure_5,          // built-in example: 9-vertex graph, see generator
    lower_sharp,       // P_4 plus n-4 extra leaves on vertex 2, n >= 4
    upper_sharp,       // P_5 plus n-5 extra leaves on vertex 2, n >= 5
  };

  Kind kind{};
  int n = 0;                // order / leaves / arms / m, depending on kind
  int rows = 0, cols = 0;   // queen boards
  std::vector<int> parts;   // multipartite part sizes, in label order

  /// Parses a family token such as "cycle:12" or "kpartite:2,3".
  /// Raises InputError on unknown kinds or malformed parameters.
  static FamilySpec parse(std::string_view token);

  /// Canonical token for this spec (inverse of parse).
  std::string to_string() const;
};

/// Builds the named graph with its documented labeling. The graph name is
/// set to the canonical token.
Graph generate(const FamilySpec& spec);

/// Shorthand for generate(FamilySpec::parse(token)).
Graph generate(std::string_view token);

}  // namespace tdv

#endif  // TDV_FAMILY_HPP
