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

#include "tracemaps/mat2.hpp"

#include <cctype>
#include <cstdlib>

namespace tracemaps {

bool Mat2::is_unimodular() const {
  Int e = det();
  return e == 1 || e == -1;
}

Mat2 Mat2::inverse() const {
  Int e = det();
  if (e == 1) return adjugate();
  if (e == -1) return -adjugate();
  throw DomainError("matrix is not unimodular (det = " + e.get_str() + ")");
}

Mat2 Mat2::pow(long k) const {
  Mat2 base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  Mat2 acc = identity();
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Int parse_int(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected integer", start);
  Int value(std::string(text.substr(digits, pos - digits)), 10);
  return negative ? Int(-value) : value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != c)
    throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

}  // namespace

Mat2 Mat2::parse(std::string_view text) {
  std::size_t pos = 0;
  Int a = parse_int(text, pos);
  expect(text, pos, ',');
  Int b = parse_int(text, pos);
  expect(text, pos, ';');
  Int c = parse_int(text, pos);
  expect(text, pos, ',');
  Int d = parse_int(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after matrix", pos);
  return Mat2(a, b, c, d);
}

std::string Mat2::str() const {
  return a.get_str() + "," + b.get_str() + ";" + c.get_str() + "," + d.get_str();
}

ProjMat::ProjMat(const Mat2& m) : rep_(m) {
  if (!m.is_unimodular())
    throw DomainError("matrix is not unimodular (det = " + m.det().get_str() + ")");
  for (const Int* e : {&rep_.a, &rep_.b, &rep_.c, &rep_.d}) {
    if (*e == 0) continue;
    if (*e < 0) rep_ = -rep_;
    break;
  }
}

std::optional<int> OrderClass::order() const {
  switch (tag) {
    case OrderTag::Identity: return 1;
    case OrderTag::Involution: return 2;
    case OrderTag::OrderThree: return 3;
    default: return std::nullopt;
  }
}

OrderClass classify_order(const ProjMat& p) {
  const Mat2& m = p.rep();
  Int t = m.trace();
  Int e = m.det();
  OrderTag tag;
  if (p.is_identity()) {
    tag = OrderTag::Identity;
  } else if (e == 1) {
    if (t == 0) tag = OrderTag::Involution;
    else if (t == 1 || t == -1) tag = OrderTag::OrderThree;
    else if (t == 2 || t == -2) tag = OrderTag::InfiniteParabolic;
    else tag = OrderTag::InfiniteGeneric;
  } else {  // det = -1
    tag = (t == 0) ? OrderTag::Involution : OrderTag::InfiniteGeneric;
  }

  OrderClass out{tag, t, e};
  // Confirm finite orders by explicit powers; a mismatch is a bug.
  if (auto n = out.order()) {
    if (!p.pow(*n).is_identity())
      throw VerificationError("order classification disagrees with explicit power");
    if (*n > 1 && p.pow(*n - 1).is_identity())
      throw VerificationError("claimed order is not minimal");
  } else {
    if (p.pow(2).is_identity() || p.pow(3).is_identity())
      throw VerificationError("matrix of claimed infinite order has a trivial power");
  }
  return out;
}

Mat2Mod2 mod2_image(const ProjMat& p) {
  const Mat2& m = p.rep();
  auto bit = [](const Int& v) -> unsigned { return mpz_odd_p(v.get_mpz_t()) ? 1u : 0u; };
  return Mat2Mod2{bit(m.a), bit(m.b), bit(m.c), bit(m.d)};
}

}  // namespace tracemaps
