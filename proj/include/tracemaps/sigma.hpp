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
#include <string>
#include <vector>

#include "tracemaps/fricke.hpp"

namespace tracemaps {

// The Klein four-group of double sign flips:
//   sigma1 = (x, -y, -z), sigma2 = (-x, y, -z), sigma3 = (-x, -y, z).
// Products xor the indices.
enum class SigmaElement : unsigned char { Id = 0, Sigma1 = 1, Sigma2 = 2, Sigma3 = 3 };

constexpr SigmaElement sigma_mul(SigmaElement s, SigmaElement t) {
  return static_cast<SigmaElement>(static_cast<unsigned char>(s) ^
                                   static_cast<unsigned char>(t));
}
constexpr SigmaElement sigma_inverse(SigmaElement s) { return s; }  // involutions

// which coordinates the element negates, as (x, y, z) flags
std::array<bool, 3> sigma_flips(SigmaElement s);
PolyMap3 sigma_as_map(SigmaElement s);
std::string sigma_name(SigmaElement s);

// cheap composites: no substitution, only coefficient sign changes
PolyMap3 sigma_then(SigmaElement s, const PolyMap3& f);  // s ∘ f
PolyMap3 then_sigma(const PolyMap3& f, SigmaElement s);  // f ∘ s

// Permutation of {1,2,3}; images are 1-based.
struct Permutation3 {
  std::array<int, 3> images;

  static Permutation3 identity() { return Permutation3{{1, 2, 3}}; }
  int operator()(int i) const { return images[i - 1]; }
  SigmaElement apply(SigmaElement s) const;
  Permutation3 after(const Permutation3& first) const;  // this ∘ first
  int order() const;
  bool operator==(const Permutation3&) const = default;
};

// The permutation pi with F ∘ sigma_i ∘ F^-1 = sigma_{pi(i)}.  Computed by
// the mod-2 action of the inverse matrix on the three nonzero vectors of
// F_2^2 (labels 1 = (1,0), 2 = (0,1), 3 = (1,1); the labeling is calibrated
// against the symbolic route on the generators) and always cross-checked
// against symbolic conjugation; disagreement throws VerificationError.
Permutation3 pi_of(const TraceMap& f);

// One of the five subgroups of the sign-flip group, listed by element.
struct SigmaSubgroup {
  std::vector<SigmaElement> elements;  // sorted, always starts with Id

  static SigmaSubgroup trivial();
  static SigmaSubgroup full();
  static SigmaSubgroup pair(SigmaElement nontrivial);

  bool is_full() const { return elements.size() == 4; }
  bool is_trivial() const { return elements.size() == 1; }
  bool contains(SigmaElement s) const;
  std::string str() const;
  bool operator==(const SigmaSubgroup&) const = default;
};

// Elements of the sign-flip group commuting with F: {Id} plus the sigma_i
// whose index pi_F fixes; each survivor re-verified symbolically.
SigmaSubgroup k_sigma(const TraceMap& f);

// Element of the full invariance group A, written sigma ∘ g.
struct AElement {
  SigmaElement sigma;
  TraceMap g;

  static AElement identity();
  PolyMap3 realization() const { return sigma_then(sigma, g.map()); }
  bool operator==(const AElement& o) const { return sigma == o.sigma && g == o.g; }
};

// (s, F)·(s', F') = (s · pi_F(s'), F ∘ F'); realizations compose.
AElement a_compose(const AElement& u, const AElement& v);
AElement a_inverse(const AElement& u);

}  // namespace tracemaps
