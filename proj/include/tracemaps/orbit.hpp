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
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "tracemaps/fricke.hpp"
#include "tracemaps/poly3.hpp"

namespace tracemaps {

enum class Arithmetic { Exact, Floating };

// Orbit of a polynomial 3-map, with the Fricke-Vogt invariant sampled at
// every point.  Exactly one pair of sequences is populated, per
// `arithmetic`.  points[0] is the starting point; a full run records
// steps + 1 points, fewer only when `truncated` is set.
struct OrbitRecord {
  Arithmetic arithmetic = Arithmetic::Exact;
  std::vector<std::array<Rat, 3>> points;
  std::vector<Rat> invariants;
  std::vector<std::array<double, 3>> float_points;
  std::vector<double> float_invariants;
  // iteration stopped early: a rational coordinate outgrew the bit budget,
  // or a floating coordinate left the finite range
  bool truncated = false;

  std::size_t length() const {
    return arithmetic == Arithmetic::Exact ? points.size() : float_points.size();
  }
};

// Exact orbit.  Rational coordinates can grow doubly exponentially under
// quadratic maps, so any coordinate whose numerator or denominator exceeds
// max_bits bits stops the run with the truncation flag.
OrbitRecord iterate_orbit(const PolyMap3& f, const std::array<Rat, 3>& start,
                          long steps, long max_bits = 16384);

// Floating orbit.  Informational only; exact mode is authoritative.
OrbitRecord iterate_orbit(const PolyMap3& f, const std::array<double, 3>& start,
                          long steps);

inline OrbitRecord iterate_orbit(const TraceMap& f, const std::array<Rat, 3>& start,
                                 long steps, long max_bits = 16384) {
  return iterate_orbit(f.map(), start, steps, max_bits);
}
inline OrbitRecord iterate_orbit(const TraceMap& f,
                                 const std::array<double, 3>& start, long steps) {
  return iterate_orbit(f.map(), start, steps);
}

// max |I_k - I_0| over the recorded points.  Exactly zero for every exact
// orbit of an invariant preserving map.
Rat invariant_drift(const OrbitRecord& o);

// Floating counterpart, reported informationally (never asserted against a
// tolerance).
double invariant_drift_float(const OrbitRecord& o);

struct ReversorCheck {
  bool pass = false;
  Rat residual;  // max coordinate deviation across all points; 0 on pass
  std::size_t points_checked = 0;
};

// Verifies g(f(p)) == f^{-1}(g(p)) exactly at every point p of the exact
// orbit of f started at `start`.
ReversorCheck reversor_orbit_check(const TraceMap& f, const TraceMap& g,
                                   const std::array<Rat, 3>& start, long steps,
                                   long max_bits = 16384);

// One row per recorded point under the header "step,x,y,z,I"; exact values
// rendered as integers or p/q fractions.
void write_orbit_csv(std::ostream& out, const OrbitRecord& o);

}  // namespace tracemaps
