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

#include <string>
#include <string_view>
#include <vector>

#include "tracemaps/mat2.hpp"

namespace tracemaps {

// Letters of the rank-2 free group.  Capitals denote inverses in text form:
// 'A' = a^-1, 'B' = b^-1.  inverse() is the xor-with-1 of the code.
enum class Letter : unsigned char { a = 0, A = 1, b = 2, B = 3 };

constexpr Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<unsigned char>(l) ^ 1u);
}
constexpr bool is_inverse_letter(Letter l) {
  return (static_cast<unsigned char>(l) & 1u) != 0;
}
char letter_char(Letter l);

// Freely reduced word over {a, b, a^-1, b^-1}.
class Word {
 public:
  Word() = default;
  static Word parse(std::string_view text);           // [abAB]*
  static Word from_letters(std::vector<Letter> ls);   // reduces

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenation, then reduction
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

  // Conjugation-invariant key: the cyclic reduction, minimized over all
  // rotations of itself and of its inverse.  Half-traces are constant on
  // these classes, so the memo table is keyed on this.
  Word cyclic_canonical() const;

  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

// Two-letter substitution a -> image_a, b -> image_b.
struct Substitution {
  Word image_a, image_b;

  static Substitution parse(std::string_view text);  // "a->WORD, b->WORD"
  static Substitution identity();

  Word apply(const Word& w) const;
  Substitution after(const Substitution& inner) const;  // this ∘ inner

  // Column i is the exponent-sum vector of the image of the i-th generator.
  Mat2 abelianization() const;
  bool invertible() const { return abelianization().is_unimodular(); }

  std::string str() const;
  bool operator==(const Substitution&) const = default;
};

}  // namespace tracemaps
