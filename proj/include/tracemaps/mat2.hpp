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

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tracemaps/errors.hpp"

namespace tracemaps {

using Int = mpz_class;
using Rat = mpq_class;

// Exact 2x2 integer matrix, row major.
struct Mat2 {
  Int a, b, c, d;  // [[a, b], [c, d]]

  Mat2() : a(0), b(0), c(0), d(0) {}
  Mat2(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return Mat2(1, 0, 0, 1); }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  Mat2 adjugate() const { return Mat2(d, -b, -c, a); }
  bool is_unimodular() const;
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  // Inverse of a unimodular matrix.  Throws DomainError otherwise: over the
  // integers nothing else is invertible.
  Mat2 inverse() const;

  // Integer power; negative exponents require |det| = 1.
  Mat2 pow(long k) const;

  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
  Mat2 operator+(const Mat2& o) const { return Mat2(a + o.a, b + o.b, c + o.c, d + o.d); }
  Mat2 operator-(const Mat2& o) const { return Mat2(a - o.a, b - o.b, c - o.c, d - o.d); }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return Mat2(l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d);
  }
  friend Mat2 operator*(const Int& s, const Mat2& m) {
    return Mat2(s * m.a, s * m.b, s * m.c, s * m.d);
  }
  bool operator==(const Mat2&) const = default;

  // Text format "a,b;c,d".  Whitespace around entries is accepted.
  static Mat2 parse(std::string_view text);
  std::string str() const;
};

// A unimodular matrix up to overall sign, stored through the canonical
// representative whose first nonzero entry (reading a, b, c, d) is positive.
class ProjMat {
 public:
  explicit ProjMat(const Mat2& m);

  const Mat2& rep() const { return rep_; }
  Int det() const { return rep_.det(); }
  bool is_identity() const { return rep_ == Mat2::identity(); }

  ProjMat inverse() const { return ProjMat(rep_.inverse()); }
  ProjMat pow(long k) const { return ProjMat(rep_.pow(k)); }
  friend ProjMat operator*(const ProjMat& l, const ProjMat& r) {
    return ProjMat(l.rep_ * r.rep_);
  }
  bool operator==(const ProjMat&) const = default;

  std::string str() const { return rep_.str(); }

 private:
  Mat2 rep_;
};

// Order of a unimodular matrix up to sign.  The only finite orders that
// occur are 1, 2 and 3.
enum class OrderTag {
  Identity,
  Involution,
  OrderThree,
  InfiniteParabolic,  // det = 1, trace = +-2, not the identity
  InfiniteGeneric,
};

struct OrderClass {
  OrderTag tag;
  Int trace;        // of the canonical representative
  Int determinant;

  bool finite() const {
    return tag == OrderTag::Identity || tag == OrderTag::Involution ||
           tag == OrderTag::OrderThree;
  }
  std::optional<int> order() const;
};

// Classifies by determinant and trace, then confirms the verdict by
// raising the matrix to the claimed power.
OrderClass classify_order(const ProjMat& p);

// Entrywise reduction mod 2 of the canonical representative.  Well defined
// on sign classes since -1 = 1 (mod 2).
struct Mat2Mod2 {
  unsigned a, b, c, d;  // each 0 or 1

  friend Mat2Mod2 operator*(const Mat2Mod2& l, const Mat2Mod2& r) {
    return Mat2Mod2{(l.a & r.a) ^ (l.b & r.c), (l.a & r.b) ^ (l.b & r.d),
                    (l.c & r.a) ^ (l.d & r.c), (l.c & r.b) ^ (l.d & r.d)};
  }
  bool operator==(const Mat2Mod2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  // det = 1 over F2 for any unimodular matrix, so the adjugate inverts.
  Mat2Mod2 inverse() const { return Mat2Mod2{d, b, c, a}; }
  std::array<unsigned, 2> apply(std::array<unsigned, 2> v) const {
    return {(a & v[0]) ^ (b & v[1]), (c & v[0]) ^ (d & v[1])};
  }
};

Mat2Mod2 mod2_image(const ProjMat& p);

}  // namespace tracemaps
