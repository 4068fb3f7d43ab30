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

#include "tracemaps/orbit.hpp"

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <ostream>

#include "tracemaps/errors.hpp"

namespace tracemaps {

namespace {

bool within_budget(const Rat& v, long max_bits) {
  return mpz_sizeinbase(v.get_num().get_mpz_t(), 2) <= std::size_t(max_bits) &&
         mpz_sizeinbase(v.get_den().get_mpz_t(), 2) <= std::size_t(max_bits);
}

bool within_budget(const std::array<Rat, 3>& p, long max_bits) {
  return within_budget(p[0], max_bits) && within_budget(p[1], max_bits) &&
         within_budget(p[2], max_bits);
}

bool all_finite(const std::array<double, 3>& p) {
  return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]);
}

Rat invariant_at(const std::array<Rat, 3>& p) {
  return fricke_vogt_invariant().eval(p[0], p[1], p[2]);
}

}  // namespace

OrbitRecord iterate_orbit(const PolyMap3& f, const std::array<Rat, 3>& start,
                          long steps, long max_bits) {
  if (steps < 0) throw DomainError("orbit step count must be non-negative");
  if (max_bits < 1) throw DomainError("orbit bit budget must be positive");
  OrbitRecord o;
  o.arithmetic = Arithmetic::Exact;
  o.points.reserve(std::size_t(steps) + 1);
  std::array<Rat, 3> p = start;
  o.points.push_back(p);
  o.invariants.push_back(invariant_at(p));
  for (long k = 0; k < steps; ++k) {
    p = f.eval(p);
    if (!within_budget(p, max_bits)) {
      o.truncated = true;
      break;
    }
    o.points.push_back(p);
    o.invariants.push_back(invariant_at(p));
  }
  return o;
}

OrbitRecord iterate_orbit(const PolyMap3& f, const std::array<double, 3>& start,
                          long steps) {
  if (steps < 0) throw DomainError("orbit step count must be non-negative");
  OrbitRecord o;
  o.arithmetic = Arithmetic::Floating;
  o.float_points.reserve(std::size_t(steps) + 1);
  std::array<double, 3> p = start;
  if (!all_finite(p)) throw DomainError("floating orbit start must be finite");
  o.float_points.push_back(p);
  o.float_invariants.push_back(
      fricke_vogt_invariant().eval_double(p[0], p[1], p[2]));
  for (long k = 0; k < steps; ++k) {
    p = f.eval_double(p);
    if (!all_finite(p)) {
      o.truncated = true;
      break;
    }
    o.float_points.push_back(p);
    o.float_invariants.push_back(
        fricke_vogt_invariant().eval_double(p[0], p[1], p[2]));
  }
  return o;
}

Rat invariant_drift(const OrbitRecord& o) {
  if (o.arithmetic != Arithmetic::Exact)
    throw DomainError("exact drift requires an exact orbit");
  if (o.invariants.empty()) throw DomainError("drift of an empty orbit");
  Rat drift(0);
  for (const Rat& v : o.invariants) {
    Rat d = abs(Rat(v - o.invariants.front()));
    if (d > drift) drift = d;
  }
  return drift;
}

double invariant_drift_float(const OrbitRecord& o) {
  if (o.arithmetic != Arithmetic::Floating)
    throw DomainError("floating drift requires a floating orbit");
  if (o.float_invariants.empty()) throw DomainError("drift of an empty orbit");
  double drift = 0.0;
  for (double v : o.float_invariants)
    drift = std::max(drift, std::fabs(v - o.float_invariants.front()));
  return drift;
}

ReversorCheck reversor_orbit_check(const TraceMap& f, const TraceMap& g,
                                   const std::array<Rat, 3>& start, long steps,
                                   long max_bits) {
  OrbitRecord o = iterate_orbit(f, start, steps, max_bits);
  const PolyMap3& fmap = f.map();
  const PolyMap3& gmap = g.map();
  PolyMap3 finv = f.inverse().map();
  ReversorCheck res;
  res.pass = true;
  res.residual = Rat(0);
  for (const std::array<Rat, 3>& p : o.points) {
    std::array<Rat, 3> lhs = gmap.eval(fmap.eval(p));
    std::array<Rat, 3> rhs = finv.eval(gmap.eval(p));
    for (int i = 0; i < 3; ++i) {
      Rat d = abs(Rat(lhs[i] - rhs[i]));
      if (d != 0) res.pass = false;
      if (d > res.residual) res.residual = d;
    }
    ++res.points_checked;
  }
  return res;
}

void write_orbit_csv(std::ostream& out, const OrbitRecord& o) {
  out << "step,x,y,z,I\n";
  if (o.arithmetic == Arithmetic::Exact) {
    for (std::size_t k = 0; k < o.points.size(); ++k) {
      out << k << ',' << o.points[k][0].get_str() << ','
          << o.points[k][1].get_str() << ',' << o.points[k][2].get_str() << ','
          << o.invariants[k].get_str() << '\n';
    }
  } else {
    const int digits = std::numeric_limits<double>::max_digits10;
    out << std::setprecision(digits);
    for (std::size_t k = 0; k < o.float_points.size(); ++k) {
      out << k << ',' << o.float_points[k][0] << ',' << o.float_points[k][1]
          << ',' << o.float_points[k][2] << ',' << o.float_invariants[k] << '\n';
    }
  }
}

}  // namespace tracemaps
