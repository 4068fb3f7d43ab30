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

#include <array>
#include <map>
#include <string>

#include "tracemaps/mat2.hpp"

namespace tracemaps {

// Exponent triple of a monomial x^i y^j z^k.
struct Mono {
  unsigned i = 0, j = 0, k = 0;

  unsigned total() const { return i + j + k; }
  bool operator==(const Mono&) const = default;
};

// Graded lexicographic order, descending, so that map iteration visits the
// leading term first.  Ties in total degree break on (i, j, k) lex.
struct MonoGradedDesc {
  bool operator()(const Mono& l, const Mono& r) const {
    if (l.total() != r.total()) return l.total() > r.total();
    if (l.i != r.i) return l.i > r.i;
    if (l.j != r.j) return l.j > r.j;
    return l.k > r.k;
  }
};

// Sparse polynomial in x, y, z with arbitrary-precision integer
// coefficients.  Zero coefficients are never stored.
class Poly3 {
 public:
  using TermMap = std::map<Mono, Int, MonoGradedDesc>;

  Poly3() = default;
  explicit Poly3(Int constant);
  static Poly3 variable(char v);  // 'x', 'y' or 'z'
  static Poly3 monomial(Mono m, Int coeff);

  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  const Int& coeff(Mono m) const;  // 0 if absent

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3 operator+(const Poly3& o) const;
  Poly3 operator-(const Poly3& o) const;
  Poly3 operator-() const;
  Poly3 operator*(const Poly3& o) const;
  friend Poly3 operator*(const Int& s, const Poly3& p);
  bool operator==(const Poly3&) const = default;

  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
  double eval_double(double x, double y, double z) const;

  // Substitution x -> px, y -> py, z -> pz.
  Poly3 substitute(const Poly3& px, const Poly3& py, const Poly3& pz) const;

  // Fast path for x -> +-x etc.: negates coefficients of terms whose
  // flipped variables carry odd total exponent.
  Poly3 flip_signs(bool fx, bool fy, bool fz) const;

  // Deterministic canonical text, graded-lex descending: "2*x*z - y".
  std::string str() const;

 private:
  TermMap terms_;
};

// Polynomial self-map of 3-space: images of the coordinates x, y, z.
struct PolyMap3 {
  Poly3 fx, fy, fz;

  static PolyMap3 identity();
  unsigned degree() const;
  std::array<Rat, 3> eval(const std::array<Rat, 3>& p) const;
  std::array<double, 3> eval_double(const std::array<double, 3>& p) const;
  PolyMap3 flip_signs_inner(bool fx_, bool fy_, bool fz_) const;
  bool operator==(const PolyMap3&) const = default;
  std::string str() const;  // "(p, q, r)"
};

// outer∘inner: outer's components with inner's components substituted.
PolyMap3 map_compose(const PolyMap3& outer, const PolyMap3& inner);

// x^2 + y^2 + z^2 - 2xyz - 1, preserved by every map studied here.
const Poly3& fricke_vogt_invariant();

// True iff I∘F - I vanishes identically, decided symbolically.
bool preserves_invariant(const PolyMap3& f);

}  // namespace tracemaps
