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

#include "tracemaps/sigma.hpp"

#include <algorithm>

namespace tracemaps {

std::array<bool, 3> sigma_flips(SigmaElement s) {
  switch (s) {
    case SigmaElement::Id: return {false, false, false};
    case SigmaElement::Sigma1: return {false, true, true};
    case SigmaElement::Sigma2: return {true, false, true};
    default: return {true, true, false};
  }
}

PolyMap3 sigma_as_map(SigmaElement s) {
  auto fl = sigma_flips(s);
  PolyMap3 id = PolyMap3::identity();
  return PolyMap3{fl[0] ? -id.fx : id.fx, fl[1] ? -id.fy : id.fy,
                  fl[2] ? -id.fz : id.fz};
}

std::string sigma_name(SigmaElement s) {
  switch (s) {
    case SigmaElement::Id: return "Id";
    case SigmaElement::Sigma1: return "sigma1";
    case SigmaElement::Sigma2: return "sigma2";
    default: return "sigma3";
  }
}

PolyMap3 sigma_then(SigmaElement s, const PolyMap3& f) {
  auto fl = sigma_flips(s);
  return PolyMap3{fl[0] ? -f.fx : f.fx, fl[1] ? -f.fy : f.fy, fl[2] ? -f.fz : f.fz};
}

PolyMap3 then_sigma(const PolyMap3& f, SigmaElement s) {
  auto fl = sigma_flips(s);
  return f.flip_signs_inner(fl[0], fl[1], fl[2]);
}

SigmaElement Permutation3::apply(SigmaElement s) const {
  if (s == SigmaElement::Id) return s;
  return static_cast<SigmaElement>(images[static_cast<unsigned char>(s) - 1]);
}

Permutation3 Permutation3::after(const Permutation3& first) const {
  return Permutation3{{images[first.images[0] - 1], images[first.images[1] - 1],
                       images[first.images[2] - 1]}};
}

int Permutation3::order() const {
  Permutation3 acc = *this;
  for (int n = 1; n <= 3; ++n) {
    if (acc == identity()) return n;
    acc = after(acc);
  }
  return 6;  // unreachable for permutations of three points
}

namespace {

// labels of the nonzero vectors of F_2^2
constexpr std::array<unsigned, 2> kVec[3] = {{1, 0}, {0, 1}, {1, 1}};

int vec_label(std::array<unsigned, 2> v) {
  for (int i = 0; i < 3; ++i)
    if (kVec[i] == v) return i + 1;
  throw VerificationError("mod-2 action left the nonzero vectors");
}

}  // namespace

Permutation3 pi_of(const TraceMap& f) {
  // fast route: the inverse matrix mod 2 permutes the nonzero vectors
  Mat2Mod2 inv2 = mod2_image(f.matrix()).inverse();
  Permutation3 fast{{vec_label(inv2.apply(kVec[0])), vec_label(inv2.apply(kVec[1])),
                     vec_label(inv2.apply(kVec[2]))}};

  // symbolic route: f ∘ sigma_i must equal sigma_{pi(i)} ∘ f exactly
  Permutation3 symbolic = Permutation3::identity();
  for (int i = 1; i <= 3; ++i) {
    PolyMap3 lhs = then_sigma(f.map(), static_cast<SigmaElement>(i));
    int image = 0;
    for (int j = 1; j <= 3; ++j) {
      if (lhs == sigma_then(static_cast<SigmaElement>(j), f.map())) {
        image = j;
        break;
      }
    }
    if (image == 0)
      throw VerificationError("conjugation by the map does not permute the sign flips");
    symbolic.images[i - 1] = image;
  }

  if (fast != symbolic)
    throw VerificationError("mod-2 shortcut disagrees with symbolic conjugation");
  return symbolic;
}

SigmaSubgroup SigmaSubgroup::trivial() { return SigmaSubgroup{{SigmaElement::Id}}; }

SigmaSubgroup SigmaSubgroup::full() {
  return SigmaSubgroup{{SigmaElement::Id, SigmaElement::Sigma1, SigmaElement::Sigma2,
                        SigmaElement::Sigma3}};
}

SigmaSubgroup SigmaSubgroup::pair(SigmaElement nontrivial) {
  return SigmaSubgroup{{SigmaElement::Id, nontrivial}};
}

bool SigmaSubgroup::contains(SigmaElement s) const {
  return std::find(elements.begin(), elements.end(), s) != elements.end();
}

std::string SigmaSubgroup::str() const {
  if (is_full()) return "Sigma";
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += sigma_name(elements[i]);
  }
  return out + "}";
}

SigmaSubgroup k_sigma(const TraceMap& f) {
  Permutation3 pi = pi_of(f);
  SigmaSubgroup out = SigmaSubgroup::trivial();
  for (int i = 1; i <= 3; ++i) {
    if (pi(i) != i) continue;
    auto s = static_cast<SigmaElement>(i);
    // commutation must also hold symbolically
    if (then_sigma(f.map(), s) != sigma_then(s, f.map()))
      throw VerificationError("fixed index of pi fails the commutation check");
    out.elements.push_back(s);
  }
  return out;
}

AElement AElement::identity() {
  return AElement{SigmaElement::Id, TraceMap::identity()};
}

AElement a_compose(const AElement& u, const AElement& v) {
  SigmaElement twisted = pi_of(u.g).apply(v.sigma);
  return AElement{sigma_mul(u.sigma, twisted), compose(u.g, v.g)};
}

AElement a_inverse(const AElement& u) {
  TraceMap ginv = u.g.inverse();
  return AElement{pi_of(ginv).apply(u.sigma), std::move(ginv)};
}

}  // namespace tracemaps
