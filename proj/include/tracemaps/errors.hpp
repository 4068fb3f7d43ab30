// Copyright 2026 The tracemaps authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tracemaps {

// Malformed textual input (matrix, word, substitution, start point).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Input violates an arithmetic precondition, e.g. a matrix that is not
// unimodular where |det| = 1 is required.
class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

// An internal symbolic cross-check failed.  This signals a bug in the
// library, never bad input.
class VerificationError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tracemaps
