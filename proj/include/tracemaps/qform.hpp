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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracemaps/mat2.hpp"

namespace tracemaps {

// Basis of a rank-2 lattice of integer 2x2 matrices.  Bases produced by
// make_lattice_basis and commutation_lattice are in row-style Hermite
// normal form of the coefficient vectors (p, q, r, s), so equal lattices
// compare equal.  Hand-built instances carry no such guarantee.
struct LatticeBasis {
  Mat2 b1, b2;

  Mat2 combine(const Int& s, const Int& t) const { return s * b1 + t * b2; }
  bool operator==(const LatticeBasis&) const = default;
};

// HNF-normalizes the span of two rationally independent matrices.
// Throws DomainError when they are dependent.
LatticeBasis make_lattice_basis(const Mat2& b1, const Mat2& b2);

// Integer coordinates (s, t) with m = s b1 + t b2, or nullopt when m lies
// outside the integer span of the basis.
std::optional<std::pair<Int, Int>> lattice_coordinates(const LatticeBasis& basis,
                                                       const Mat2& m);

enum class LatticeSide { Commute, Reverse };

// Basis of { R integer 2x2 : R M = eps M' R } with M' = M (Commute) or
// M' = M^-1 (Reverse).  Returns nullopt when only R = 0 solves it, which
// is exactly the trace-incompatible case.  M projectively the identity is
// rejected: every R solves that.
std::optional<LatticeBasis> commutation_lattice(const Mat2& m, LatticeSide side,
                                                int eps);

// Integer binary quadratic form alpha s^2 + beta s t + gamma t^2.
class BinaryQF {
 public:
  BinaryQF(Int alpha, Int beta, Int gamma);

  const Int& alpha() const { return alpha_; }
  const Int& beta() const { return beta_; }
  const Int& gamma() const { return gamma_; }
  const Int& discriminant() const { return delta_; }

  Int eval(const Int& s, const Int& t) const;
  bool is_zero() const { return alpha_ == 0 && beta_ == 0 && gamma_ == 0; }
  bool degenerate() const;  // zero or square discriminant

  std::string str() const;  // "(alpha, beta, gamma; delta)"
  bool operator==(const BinaryQF&) const = default;

 private:
  Int alpha_, beta_, gamma_;
  Int delta_;  // beta^2 - 4 alpha gamma, kept alongside the coefficients
};

// q(s,t) = det(s B1 + t B2).
BinaryQF form_of_lattice(const LatticeBasis& l);

struct QFWitness {
  Int s, t;
};

// Decision for q(s,t) = +1 and -1 over the integers.  Witnesses are always
// re-verified by evaluation before being returned.  For indefinite forms of
// non-square discriminant the reduction cycle is attached: a target is
// represented iff it occurs among the leading coefficients of the cycle,
// so the cycle is the finite certificate for negative verdicts.
struct RepresentationResult {
  std::optional<QFWitness> plus_one, minus_one;
  std::string method;
  std::vector<BinaryQF> cycle;

  bool represents(int target) const {
    return target == 1 ? plus_one.has_value() : minus_one.has_value();
  }
};

RepresentationResult represents_pm1(const BinaryQF& q);

}  // namespace tracemaps
