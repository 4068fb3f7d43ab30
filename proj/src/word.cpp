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

#include "tracemaps/word.hpp"

#include <algorithm>
#include <cctype>

namespace tracemaps {

char letter_char(Letter l) {
  static constexpr char table[4] = {'a', 'A', 'b', 'B'};
  return table[static_cast<unsigned char>(l)];
}

namespace {

std::vector<Letter> reduce(std::vector<Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'a': ls.push_back(Letter::a); break;
      case 'A': ls.push_back(Letter::A); break;
      case 'b': ls.push_back(Letter::b); break;
      case 'B': ls.push_back(Letter::B); break;
      default:
        throw ParseError(std::string("illegal letter '") + text[pos] + "'", pos);
    }
  }
  return from_letters(std::move(ls));
}

Word Word::from_letters(std::vector<Letter> ls) {
  Word w;
  w.letters_ = reduce(std::move(ls));
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    ls.push_back(tracemaps::inverse(*it));
  Word w;
  w.letters_ = std::move(ls);  // reversal of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return from_letters(std::move(ls));
}

Word Word::cyclic_canonical() const {
  // cyclic reduction: strip matching inverse pairs from the two ends
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == tracemaps::inverse(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(letters_.begin() + lo, letters_.begin() + hi);

  Word w;
  if (core.empty()) return w;

  auto min_rotation = [](const std::vector<Letter>& v) {
    std::vector<Letter> best = v;
    std::vector<Letter> rot = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    return best;
  };
  auto inverse_count = [](const std::vector<Letter>& v) {
    std::size_t n = 0;
    for (Letter l : v) n += is_inverse_letter(l) ? 1 : 0;
    return n;
  };

  // The representative comes from whichever of the word and its inverse has
  // fewer inverse letters; ties take the lexicographic minimum of both.
  // Minimizing the inverse count first is what lets the half-trace reduction
  // use (length, inverse count) as a strictly decreasing measure.
  std::vector<Letter> bwd_core = Word::from_letters(core).inverse().letters();
  std::size_t kf = inverse_count(core), kb = bwd_core.size() - kf;
  if (kf < kb) {
    w.letters_ = min_rotation(core);
  } else if (kb < kf) {
    w.letters_ = min_rotation(bwd_core);
  } else {
    w.letters_ = std::min(min_rotation(core), min_rotation(bwd_core));
  }
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s += letter_char(l);
  return s;
}

Substitution Substitution::parse(std::string_view text) {
  // grammar: "a->WORD, b->WORD" with optional whitespace
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token)
      throw ParseError("expected \"" + std::string(token) + "\"", pos);
    pos += token.size();
  };
  auto read_word = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::string_view("abAB").find(text[pos]) != std::string_view::npos)
      ++pos;
    if (pos == start) throw ParseError("expected word over a, b, A, B", pos);
    return Word::parse(text.substr(start, pos - start));
  };

  expect("a");
  expect("->");
  Word wa = read_word();
  expect(",");
  expect("b");
  expect("->");
  Word wb = read_word();
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input after substitution", pos);
  return Substitution{wa, wb};
}

Substitution Substitution::identity() {
  return Substitution{Word::parse("a"), Word::parse("b")};
}

Word Substitution::apply(const Word& w) const {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& image = (l == Letter::a || l == Letter::A) ? image_a : image_b;
    if (is_inverse_letter(l)) {
      Word inv = image.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    } else {
      out.insert(out.end(), image.letters().begin(), image.letters().end());
    }
  }
  return Word::from_letters(std::move(out));
}

Substitution Substitution::after(const Substitution& inner) const {
  return Substitution{apply(inner.image_a), apply(inner.image_b)};
}

Mat2 Substitution::abelianization() const {
  auto counts = [](const Word& w) {
    long na = 0, nb = 0;
    for (Letter l : w.letters()) {
      switch (l) {
        case Letter::a: ++na; break;
        case Letter::A: --na; break;
        case Letter::b: ++nb; break;
        case Letter::B: --nb; break;
      }
    }
    return std::pair<long, long>{na, nb};
  };
  auto [aa, ab] = counts(image_a);
  auto [ba, bb] = counts(image_b);
  return Mat2(aa, ba, ab, bb);
}

std::string Substitution::str() const {
  return "a->" + image_a.str() + ", b->" + image_b.str();
}

}  // namespace tracemaps
