// Copyright 2026 The pragsynth Authors.
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

#ifndef PRAGSYNTH_ERRORS_HPP
#define PRAGSYNTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pragsynth {

/// A program whose choices are out of range or violate the box constraints.
class InvalidProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A specification that no program in the space satisfies.
class NoConsistentProgram : public std::runtime_error {
 public:
  NoConsistentProgram() : std::runtime_error("no program is consistent with the specification") {}
  using std::runtime_error::runtime_error;
};

/// Every candidate utterance has already been used (or has zero mass).
class EmptyCandidateSet : public std::runtime_error {
 public:
  EmptyCandidateSet() : std::runtime_error("speaker has no candidate utterance left") {}
  using std::runtime_error::runtime_error;
};

/// Malformed input record; `line` is 1-based, 0 when not line oriented.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pragsynth

#endif  // PRAGSYNTH_ERRORS_HPP
