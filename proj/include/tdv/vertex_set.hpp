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

#ifndef TDV_VERTEX_SET_HPP
#define TDV_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tdv/errors.hpp"

#ifndef TDV_MAX_VERTICES
#define TDV_MAX_VERTICES 64
#endif

namespace tdv {

/// Build-time upper bound on graph order. Vertex sets occupy one machine
/// word, so the limit can be lowered but never raised past 64.
inline constexpr int kMaxVertices = TDV_MAX_VERTICES;
static_assert(kMaxVertices >= 2 && kMaxVertices <= 64,
              "vertex limit must fit a 64-bit word");

/// A subset of the vertex labels {1..n}, stored as a 64-bit mask
/// (bit v-1 represents vertex v). Value type; cheap to copy.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_mask(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.add(v);
    return s;
  }

  /// The full set {1..n}.
  static VertexSet full(int n) {
    if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
    if (n == 0) return {};
    return from_mask(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  void add(int v) {
    check_label(v);
    bits_ |= bit(v);
  }

  void remove(int v) {
    check_label(v);
    bits_ &= ~bit(v);
  }

  bool contains(int v) const {
    return v >= 1 && v <= 64 && (bits_ & bit(v)) != 0;
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  /// Smallest member, or 0 when empty.
  int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  bool subset_of(const VertexSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return from_mask(a.bits_ & ~b.bits_); }

  bool operator==(const VertexSet&) const = default;

  std::uint64_t mask() const { return bits_; }

  /// Members in ascending label order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : members()) {
      if (!first) out += ", ";
      out += std::to_string(v);
      first = false;
    }
    out += "}";
    return out;
  }

  /// Lexicographic order on the ascending member sequences. This is the
  /// canonical order for enumerated minimum sets.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    std::uint64_t ra = a.bits_, rb = b.bits_;
    while (ra != 0 && rb != 0) {
      int va = std::countr_zero(ra), vb = std::countr_zero(rb);
      if (va != vb) return va < vb;
      ra &= ra - 1;
      rb &= rb - 1;
    }
    return ra == 0 && rb != 0;
  }

 private:
  static constexpr std::uint64_t bit(int v) {
    return std::uint64_t{1} << (v - 1);
  }

  static void check_label(int v) {
    if (v < 1 || v > 64) {
      throw InputError("vertex label " + std::to_string(v) + " out of range");
    }
  }

  std::uint64_t bits_ = 0;
};

}  // namespace tdv

#endif  // TDV_VERTEX_SET_HPP
