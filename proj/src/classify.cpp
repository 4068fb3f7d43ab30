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

#include "tracemaps/classify.hpp"

#include <algorithm>
#include <utility>

#include "tracemaps/errors.hpp"

namespace tracemaps {

namespace {

std::optional<Int> exact_sqrt(const Int& v) {
  if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool abs_less(const Int& l, const Int& r) {
  return mpz_cmpabs(l.get_mpz_t(), r.get_mpz_t()) < 0;
}

size_t entry_bits(const Mat2& m) {
  size_t bits = 1;
  for (const Int* e : {&m.a, &m.b, &m.c, &m.d})
    if (*e != 0) bits = std::max(bits, mpz_sizeinbase(e->get_mpz_t(), 2));
  return bits;
}

// exponent k >= 1 with c^k = ±m, or -1 if none below the growth cap
long power_exponent(const Mat2& c, const ProjMat& target) {
  // entries of c^k grow at least like the golden ratio to the k, so the
  // exponent is linearly bounded by the bit size of the target
  long cap = 10 * static_cast<long>(entry_bits(target.rep()) + 4) + 64;
  Mat2 p = c;
  for (long k = 1; k <= cap; ++k) {
    if (ProjMat(p) == target) return k;
    p = p * c;
  }
  return -1;
}

AElement plain(const TraceMap& g) { return AElement{SigmaElement::Id, g}; }

GroupDescriptor full_group_descriptor() {
  GroupDescriptor d;
  d.tag = GroupTag::FullG;
  d.generators = {plain(TraceMap::from_matrix(Mat2(1, 1, 0, 1))),
                  plain(TraceMap::from_matrix(Mat2(0, 1, 1, 0))),
                  plain(TraceMap::from_matrix(Mat2(1, 0, 0, -1)))};
  d.annotation = "every trace map commutes with the identity";
  return d;
}

// Klein four group around an involution: the involution itself plus a
// unimodular matrix anticommuting with it.
GroupDescriptor klein_four_descriptor(const TraceMap& f) {
  const Mat2& m = f.matrix().rep();
  GroupDescriptor d;
  auto lat = commutation_lattice(m, LatticeSide::Commute, -1);
  if (lat) {
    RepresentationResult rep = represents_pm1(form_of_lattice(*lat));
    const std::optional<QFWitness>& w = rep.minus_one ? rep.minus_one : rep.plus_one;
    if (w) {
      Mat2 x = lat->combine(w->s, w->t);
      TraceMap xmap = TraceMap::from_matrix(x);
      if (!(compose(xmap, f) == compose(f, xmap)))
        throw VerificationError("anticommuting complement fails to commute as a map");
      d.tag = GroupTag::KleinFour;
      d.generators = {plain(f), plain(xmap)};
      return d;
    }
  }
  // not expected for involution classes; reported honestly if it occurs
  d.tag = GroupTag::C2;
  d.generators = {plain(f)};
  d.annotation = "no anticommuting unimodular complement found";
  return d;
}

}  // namespace

std::string tag_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::C2: return "C2";
    case GroupTag::C3: return "C3";
    case GroupTag::Cinf: return "Cinf";
    case GroupTag::KleinFour: return "KleinFour";
    case GroupTag::D3: return "D3";
    case GroupTag::Dinf: return "Dinf";
    case GroupTag::FullG: return "FullG";
    case GroupTag::SigmaExtension: return "SigmaExtension";
  }
  throw DomainError("unknown group tag");
}

PrimitiveRoot primitive_root(const Mat2& m) {
  ProjMat pm(m);
  OrderClass oc = classify_order(pm);
  if (oc.finite())
    throw DomainError("finite projective order has no primitive root");

  auto lat = commutation_lattice(pm.rep(), LatticeSide::Commute, +1);
  if (!lat)
    throw VerificationError("commutant of an infinite-order matrix must have rank 2");

  // rewrite the commutant order on the basis (I, omega)
  auto icoord = lattice_coordinates(*lat, Mat2::identity());
  if (!icoord) throw VerificationError("identity missing from the commutant lattice");
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
             icoord->first.get_mpz_t(), icoord->second.get_mpz_t());
  if (g != 1)
    throw VerificationError("identity is imprimitive in the commutant lattice");
  Mat2 omega = lat->combine(-y, x);  // (I, omega) is then a lattice basis

  auto mcoord = lattice_coordinates(*lat, pm.rep());
  if (!mcoord) throw VerificationError("matrix missing from its own commutant");
  Int am = x * mcoord->first + y * mcoord->second;
  Int bm = icoord->first * mcoord->second - icoord->second * mcoord->first;
  if (bm == 0) throw VerificationError("scalar matrix reached the root search");
  if (!(am * Mat2::identity() + bm * omega == pm.rep()))
    throw VerificationError("basis rewrite failed to reproduce the matrix");

  // units a I + b omega have det = a^2 + T a b + D b^2; the fundamental
  // one appears at the smallest b >= 1 admitting a solution for det ±1
  Int t = omega.trace(), dd = omega.det();
  Int delta = t * t - 4 * dd;
  if (delta < 0)
    throw VerificationError("commutant form of an infinite-order matrix is definite");

  std::vector<Mat2> candidates;
  for (Int b = 1; b <= abs(bm) && candidates.empty(); ++b) {
    for (int target : {-1, +1}) {
      Int disc = delta * b * b + 4 * target;
      std::optional<Int> s = exact_sqrt(disc);
      if (!s) continue;
      for (int sign : {1, -1}) {
        if (*s == 0 && sign < 0) continue;
        Int num = -t * b + sign * *s;
        if (mpz_even_p(num.get_mpz_t()) == 0) continue;
        Mat2 u = Int(num / 2) * Mat2::identity() + b * omega;
        if (abs(u.det()) != 1) throw VerificationError("norm equation produced a non-unit");
        candidates.push_back(u);
      }
    }
  }
  if (candidates.empty())
    throw VerificationError("no unit found up to the coordinate of the matrix itself");

  // a determinant -1 unit exists iff the fundamental one has det -1;
  // within the admissible class, minimal |trace| pins the fundamental unit
  bool has_neg = std::any_of(candidates.begin(), candidates.end(),
                             [](const Mat2& u) { return u.det() == -1; });
  const Mat2* best = nullptr;
  for (const Mat2& u : candidates) {
    if (has_neg && u.det() != -1) continue;
    if (!best || abs_less(u.trace(), best->trace())) best = &u;
  }

  PrimitiveRoot out;
  out.root = ProjMat(*best).rep();
  long k = power_exponent(out.root, pm);
  if (k < 0) {
    out.root = ProjMat(out.root.inverse()).rep();
    k = power_exponent(out.root, pm);
  }
  if (k < 0)
    throw VerificationError("matrix is not a power of the fundamental unit");
  out.exponent = k;
  return out;
}

GroupDescriptor symmetry_group_G(const TraceMap& f) {
  OrderClass oc = classify_order(f.matrix());
  switch (oc.tag) {
    case OrderTag::Identity:
      return full_group_descriptor();
    case OrderTag::Involution:
      return klein_four_descriptor(f);
    case OrderTag::OrderThree: {
      GroupDescriptor d;
      d.tag = GroupTag::C3;
      d.generators = {plain(f)};
      return d;
    }
    default: {
      PrimitiveRoot pr = primitive_root(f.matrix().rep());
      GroupDescriptor d;
      d.tag = GroupTag::Cinf;
      d.generators = {plain(TraceMap::from_matrix(pr.root))};
      d.annotation =
          "the map is the generator to the power " + std::to_string(pr.exponent);
      return d;
    }
  }
}

ReversibilityCertificate reversibility_certificate(const TraceMap& f) {
  OrderClass oc = classify_order(f.matrix());
  ReversibilityCertificate cert;
  if (oc.tag == OrderTag::Identity || oc.tag == OrderTag::Involution) {
    cert.reversible = true;
    cert.conjugator = Mat2::identity();
    cert.reversor = TraceMap::identity();
    cert.involutory = true;
    cert.note = "the map equals its own inverse";
    return cert;
  }

  const Mat2& m = f.matrix().rep();
  for (int eps : {-1, +1}) {
    auto lat = commutation_lattice(m, LatticeSide::Reverse, eps);
    if (!lat) {
      cert.obstructions.push_back({eps, true, std::nullopt, "trace-obstruction", {}});
      continue;
    }
    BinaryQF q = form_of_lattice(*lat);
    RepresentationResult rep = represents_pm1(q);
    const std::optional<QFWitness>& w = rep.plus_one ? rep.plus_one : rep.minus_one;
    if (!w) {
      cert.obstructions.push_back({eps, false, q, rep.method, rep.cycle});
      continue;
    }

    Mat2 r = lat->combine(w->s, w->t);
    if (abs(r.det()) != 1) throw VerificationError("conjugator is not unimodular");
    if (!(r * m == Int(eps) * (m.inverse() * r)))
      throw VerificationError("conjugator fails its defining relation");
    TraceMap rev = TraceMap::from_matrix(r);
    // R F R^-1 = F^-1 in the two-composition form R F = F^-1 R; the nested
    // form squares the polynomial degree once more and is not affordable
    if (!(compose(rev, f) == compose(f.inverse(), rev)))
      throw VerificationError("conjugation does not invert the map");
    Mat2 r2 = r * r;
    if (!ProjMat(r2).is_identity())
      throw VerificationError("reversor is not a projective involution");

    cert.reversible = true;
    cert.conjugator = r;
    cert.reversor = rev;
    cert.involutory = (r2 == Mat2::identity());
    cert.note = std::string("conjugator satisfies R M = ") +
                (eps < 0 ? "-" : "+") + "M^-1 R";
    cert.obstructions.clear();
    return cert;
  }

  cert.reversible = false;
  cert.note = "no unimodular conjugator exists for either sign";
  return cert;
}

GroupDescriptor reversing_symmetry_group_G(const TraceMap& f,
                                           const ReversibilityCertificate& cert) {
  OrderClass oc = classify_order(f.matrix());
  switch (oc.tag) {
    case OrderTag::Identity:
      return full_group_descriptor();
    case OrderTag::Involution: {
      GroupDescriptor d = klein_four_descriptor(f);
      d.annotation = "reversing and ordinary symmetries coincide";
      return d;
    }
    case OrderTag::OrderThree: {
      GroupDescriptor d;
      if (!cert.reversible) {  // not expected for order three
        d.tag = GroupTag::C3;
        d.generators = {plain(f)};
        d.annotation = "not reversible; coincides with the symmetry group";
        return d;
      }
      d.tag = GroupTag::D3;
      std::optional<Mat2> strict =
          strict_reversor_search(*cert.conjugator, f.matrix().rep());
      TraceMap rmap = strict ? TraceMap::from_matrix(*strict) : *cert.reversor;
      d.generators = {plain(f), plain(rmap)};
      if (!strict) d.annotation = "all reversors have matrix order 4";
      return d;
    }
    default: {
      PrimitiveRoot pr = primitive_root(f.matrix().rep());
      GroupDescriptor d;
      if (!cert.reversible) {
        d.tag = GroupTag::Cinf;
        d.generators = {plain(TraceMap::from_matrix(pr.root))};
        d.annotation = "not reversible; coincides with the symmetry group";
        return d;
      }
      d.tag = GroupTag::Dinf;
      std::optional<Mat2> strict = strict_reversor_search(*cert.conjugator, pr.root);
      TraceMap rmap = strict ? TraceMap::from_matrix(*strict) : *cert.reversor;
      d.generators = {plain(TraceMap::from_matrix(pr.root)), plain(rmap)};
      if (!strict) d.annotation = "all reversors have matrix order 4";
      return d;
    }
  }
}

GroupDescriptor reversing_symmetry_group_G(const TraceMap& f) {
  return reversing_symmetry_group_G(f, reversibility_certificate(f));
}

namespace {

GroupDescriptor sigma_extension(const TraceMap& f, GroupDescriptor inner) {
  SigmaSubgroup k = k_sigma(f);
  GroupDescriptor d;
  d.tag = GroupTag::SigmaExtension;
  d.kernel = k;
  d.quotient = std::make_shared<GroupDescriptor>(std::move(inner));

  bool direct = true;
  for (const AElement& gen : d.quotient->generators) {
    Permutation3 pi = pi_of(gen.g);
    for (SigmaElement s : k.elements)
      if (s != SigmaElement::Id && pi.apply(s) != s) direct = false;
  }
  d.direct = direct;

  for (SigmaElement s : k.elements)
    if (s != SigmaElement::Id)
      d.generators.push_back(AElement{s, TraceMap::identity()});
  for (const AElement& gen : d.quotient->generators) d.generators.push_back(gen);
  return d;
}

}  // namespace

GroupDescriptor symmetry_group_A(const TraceMap& f) {
  return sigma_extension(f, symmetry_group_G(f));
}

GroupDescriptor reversing_symmetry_group_A(const TraceMap& f,
                                           const ReversibilityCertificate& cert) {
  return sigma_extension(f, reversing_symmetry_group_G(f, cert));
}

GroupDescriptor reversing_symmetry_group_A(const TraceMap& f) {
  return reversing_symmetry_group_A(f, reversibility_certificate(f));
}

std::optional<Mat2> strict_reversor_search(const Mat2& conjugator,
                                           const Mat2& root) {
  for (const Mat2& cand : {conjugator, root * conjugator}) {
    if (cand.det() == -1) {
      if (!(cand * cand == Mat2::identity()))
        throw VerificationError("determinant -1 reversor must square to the identity");
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace tracemaps
