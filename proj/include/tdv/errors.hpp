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

#ifndef TDV_ERRORS_HPP
#define TDV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid caller input: bad vertex labels, out-of-range family
/// parameters, malformed vertex sets, and so on.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph text (edge-list or DIMACS-like input).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Graph order exceeds the build-time vertex limit.
class TooLargeError : public InputError {
 public:
  using InputError::InputError;
};

/// The graph has no total dominating set (it contains an isolated
/// vertex, or consists of a single vertex).
class NoTdsError : public Error {
 public:
  explicit NoTdsError(int isolated_vertex)
      : Error("no total dominating set exists: vertex " +
              std::to_string(isolated_vertex) + " is isolated"),
        isolated_vertex_(isolated_vertex) {}

  int isolated_vertex() const noexcept { return isolated_vertex_; }

 private:
  int isolated_vertex_;
};

/// A solver self-consistency invariant was violated. Never raised on a
/// correct build; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdv

#endif  // TDV_ERRORS_HPP
