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
#include <vector>

#include "tracemaps/poly3.hpp"
#include "tracemaps/word.hpp"

namespace tracemaps {

// Half-trace of a word as a polynomial in the character coordinates
// x = t(a), y = t(b), z = t(ab): for every pair of 2x2 matrices (A, B) of
// determinant 1, half the trace of w(A, B) equals this polynomial evaluated
// at the half-traces of A, B and AB.  Constant on cyclic classes and under
// inversion; memoized on Word::cyclic_canonical.
Poly3 half_trace(const Word& w);

// True iff the map satisfies the membership conditions of the Nielsen
// class: integer coefficients (guaranteed by the representation),
// I preserved symbolically, and (1,1,1) fixed.
bool is_nielsen(const PolyMap3& f);

// Generator alphabet used to decompose unimodular matrices:
//   U = [[1,1],[0,1]],  S = [[0,1],[1,0]],  D = [[1,0],[0,-1]].
enum class GenKind { UPower, Swap, Reflect };

struct GenToken {
  GenKind kind;
  long exponent = 1;  // for UPower; Swap and Reflect are involutions

  bool operator==(const GenToken&) const = default;
};

// Writes M, up to overall sign, as a left-to-right product of generator
// tokens, by Euclidean reduction of the first column.
std::vector<GenToken> decompose_unimodular(const Mat2& m);
Mat2 reassemble(const std::vector<GenToken>& tokens);
std::string tokens_str(const std::vector<GenToken>& tokens);

// A Nielsen trace map: the polynomial 3-map together with its matrix class
// and a note on how it was built.  Construction verifies the membership
// conditions symbolically and throws VerificationError if they fail.
class TraceMap {
 public:
  static TraceMap identity();
  static TraceMap from_substitution(const Substitution& s);
  static TraceMap from_matrix(const Mat2& m);
  static TraceMap from_matrix(const ProjMat& m);

  const PolyMap3& map() const { return map_; }
  const ProjMat& matrix() const { return matrix_; }
  const std::string& provenance() const { return provenance_; }

  TraceMap inverse() const;
  TraceMap pow(long k) const;

  // Equality of maps; the matrix class is determined by the map.
  bool operator==(const TraceMap& o) const { return map_ == o.map_; }

 private:
  TraceMap(PolyMap3 map, ProjMat matrix, std::string provenance);

  PolyMap3 map_;
  ProjMat matrix_;
  std::string provenance_;

  friend TraceMap compose(const TraceMap& outer, const TraceMap& inner);
};

// outer∘inner as polynomial maps.  The attached matrices multiply in the
// opposite order: building maps from matrices is an anti-homomorphism,
// so map(M)∘map(N) carries the matrix class of N·M.
TraceMap compose(const TraceMap& outer, const TraceMap& inner);

}  // namespace tracemaps
