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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tracemaps/fricke.hpp"
#include "tracemaps/mat2.hpp"
#include "tracemaps/qform.hpp"
#include "tracemaps/sigma.hpp"

namespace tracemaps {

// Generator of the projective centralizer of a matrix of infinite
// projective order: root is primitive and m = ±root^exponent.
struct PrimitiveRoot {
  Mat2 root;
  long exponent = 1;
};

// Fundamental unit of the commutant order of m, found by scanning the
// Pell-type norm equation at increasing second coordinate.  Throws
// DomainError for matrices of finite projective order.
PrimitiveRoot primitive_root(const Mat2& m);

enum class GroupTag { C2, C3, Cinf, KleinFour, D3, Dinf, FullG, SigmaExtension };

std::string tag_name(GroupTag tag);

// Presentation of a symmetry or reversing symmetry group by verified
// generators.  SigmaExtension wraps a plane group in the sign-flip
// kernel; only then are kernel, quotient and direct populated.
struct GroupDescriptor {
  GroupTag tag;
  std::vector<AElement> generators;
  std::string annotation;
  SigmaSubgroup kernel;
  std::shared_ptr<GroupDescriptor> quotient;
  std::optional<bool> direct;
};

// Negative certificate: for one sign eps, why no unimodular R satisfies
// R M = eps M^-1 R.  Either the lattice itself is trivial or its
// determinant form provably omits +1 and -1.
struct NonRepresentationCertificate {
  int eps = 1;
  bool lattice_empty = false;
  std::optional<BinaryQF> form;
  std::string method;
  std::vector<BinaryQF> cycle;
};

struct ReversibilityCertificate {
  bool reversible = false;
  std::optional<Mat2> conjugator;    // R with R M R^-1 = ±M^-1
  std::optional<TraceMap> reversor;  // its map, verified to invert f by conjugation
  bool involutory = false;           // conjugator squares to +I as a matrix
  std::string note;
  std::vector<NonRepresentationCertificate> obstructions;
};

// Symmetries inside the group of polynomial trace maps.
GroupDescriptor symmetry_group_G(const TraceMap& f);

ReversibilityCertificate reversibility_certificate(const TraceMap& f);

GroupDescriptor reversing_symmetry_group_G(const TraceMap& f,
                                           const ReversibilityCertificate& cert);
GroupDescriptor reversing_symmetry_group_G(const TraceMap& f);

// The same groups inside the extension by the sign-flip group: kernel of
// flips fixed by conjugation, extended by the plane group.
GroupDescriptor symmetry_group_A(const TraceMap& f);
GroupDescriptor reversing_symmetry_group_A(const TraceMap& f,
                                           const ReversibilityCertificate& cert);
GroupDescriptor reversing_symmetry_group_A(const TraceMap& f);

// Involutory matrix in the reversor coset {±root^n conjugator}.  Every
// element there has trace zero and squares to ±I; the determinant
// det(conjugator) det(root)^n only depends on the parity of n, so probing
// n = 0, 1 is exhaustive.  nullopt means all reversors square to -I.
std::optional<Mat2> strict_reversor_search(const Mat2& conjugator,
                                           const Mat2& root);

}  // namespace tracemaps
