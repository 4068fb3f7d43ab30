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

#include "tracemaps/poly3.hpp"

#include <algorithm>
#include <vector>

namespace tracemaps {

Poly3::Poly3(Int constant) {
  if (constant != 0) terms_[Mono{0, 0, 0}] = std::move(constant);
}

Poly3 Poly3::variable(char v) {
  switch (v) {
    case 'x': return monomial(Mono{1, 0, 0}, 1);
    case 'y': return monomial(Mono{0, 1, 0}, 1);
    case 'z': return monomial(Mono{0, 0, 1}, 1);
    default: throw DomainError(std::string("unknown variable '") + v + "'");
  }
}

Poly3 Poly3::monomial(Mono m, Int coeff) {
  Poly3 p;
  if (coeff != 0) p.terms_[m] = std::move(coeff);
  return p;
}

unsigned Poly3::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total();
}

const Int& Poly3::coeff(Mono m) const {
  static const Int zero(0);
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly3 Poly3::operator+(const Poly3& o) const {
  Poly3 r = *this;
  r += o;
  return r;
}

Poly3 Poly3::operator-(const Poly3& o) const {
  Poly3 r = *this;
  r -= o;
  return r;
}

Poly3 Poly3::operator-() const {
  Poly3 r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly3 Poly3::operator*(const Poly3& o) const {
  Poly3 r;
  for (const auto& [ml, cl] : terms_)
    for (const auto& [mr, cr] : o.terms_) {
      Mono m{ml.i + mr.i, ml.j + mr.j, ml.k + mr.k};
      auto [it, fresh] = r.terms_.try_emplace(m, cl * cr);
      if (!fresh) {
        it->second += cl * cr;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Poly3 operator*(const Int& s, const Poly3& p) {
  Poly3 r;
  if (s == 0) return r;
  for (const auto& [m, c] : p.terms()) r.terms_[m] = s * c;
  return r;
}

namespace {

// Power tables keep eval and substitute quadratic-free in the exponent.
template <typename T>
std::vector<T> powers(const T& base, unsigned top, const T& one) {
  std::vector<T> out;
  out.reserve(top + 1);
  out.push_back(one);
  for (unsigned e = 1; e <= top; ++e) out.push_back(out.back() * base);
  return out;
}

}  // namespace

Rat Poly3::eval(const Rat& x, const Rat& y, const Rat& z) const {
  unsigned dx = 0, dy = 0, dz = 0;
  for (const auto& [m, c] : terms_) {
    dx = std::max(dx, m.i);
    dy = std::max(dy, m.j);
    dz = std::max(dz, m.k);
  }
  auto xs = powers(x, dx, Rat(1));
  auto ys = powers(y, dy, Rat(1));
  auto zs = powers(z, dz, Rat(1));
  Rat acc(0);
  for (const auto& [m, c] : terms_) acc += Rat(c) * xs[m.i] * ys[m.j] * zs[m.k];
  acc.canonicalize();
  return acc;
}

double Poly3::eval_double(double x, double y, double z) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (unsigned e = 0; e < m.i; ++e) t *= x;
    for (unsigned e = 0; e < m.j; ++e) t *= y;
    for (unsigned e = 0; e < m.k; ++e) t *= z;
    acc += t;
  }
  return acc;
}

Poly3 Poly3::substitute(const Poly3& px, const Poly3& py, const Poly3& pz) const {
  unsigned dx = 0, dy = 0, dz = 0;
  for (const auto& [m, c] : terms_) {
    dx = std::max(dx, m.i);
    dy = std::max(dy, m.j);
    dz = std::max(dz, m.k);
  }
  auto xs = powers(px, dx, Poly3(Int(1)));
  auto ys = powers(py, dy, Poly3(Int(1)));
  auto zs = powers(pz, dz, Poly3(Int(1)));
  Poly3 acc;
  for (const auto& [m, c] : terms_) acc += c * (xs[m.i] * ys[m.j] * zs[m.k]);
  return acc;
}

Poly3 Poly3::flip_signs(bool fx, bool fy, bool fz) const {
  Poly3 r;
  for (const auto& [m, c] : terms_) {
    unsigned flipped = (fx ? m.i : 0u) + (fy ? m.j : 0u) + (fz ? m.k : 0u);
    r.terms_[m] = (flipped & 1u) ? Int(-c) : c;
  }
  return r;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    auto add_var = [&vars](char v, unsigned e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += v;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    add_var('x', m.i);
    add_var('y', m.j);
    add_var('z', m.k);
    if (vars.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += vars;
    }
  }
  return out;
}

PolyMap3 PolyMap3::identity() {
  return PolyMap3{Poly3::variable('x'), Poly3::variable('y'), Poly3::variable('z')};
}

unsigned PolyMap3::degree() const {
  return std::max({fx.degree(), fy.degree(), fz.degree()});
}

std::array<Rat, 3> PolyMap3::eval(const std::array<Rat, 3>& p) const {
  return {fx.eval(p[0], p[1], p[2]), fy.eval(p[0], p[1], p[2]),
          fz.eval(p[0], p[1], p[2])};
}

std::array<double, 3> PolyMap3::eval_double(const std::array<double, 3>& p) const {
  return {fx.eval_double(p[0], p[1], p[2]), fy.eval_double(p[0], p[1], p[2]),
          fz.eval_double(p[0], p[1], p[2])};
}

PolyMap3 PolyMap3::flip_signs_inner(bool fx_, bool fy_, bool fz_) const {
  return PolyMap3{fx.flip_signs(fx_, fy_, fz_), fy.flip_signs(fx_, fy_, fz_),
                  fz.flip_signs(fx_, fy_, fz_)};
}

std::string PolyMap3::str() const {
  return "(" + fx.str() + ", " + fy.str() + ", " + fz.str() + ")";
}

PolyMap3 map_compose(const PolyMap3& outer, const PolyMap3& inner) {
  return PolyMap3{outer.fx.substitute(inner.fx, inner.fy, inner.fz),
                  outer.fy.substitute(inner.fx, inner.fy, inner.fz),
                  outer.fz.substitute(inner.fx, inner.fy, inner.fz)};
}

const Poly3& fricke_vogt_invariant() {
  static const Poly3 inv = [] {
    Poly3 x = Poly3::variable('x'), y = Poly3::variable('y'), z = Poly3::variable('z');
    return x * x + y * y + z * z - Int(2) * (x * y * z) - Poly3(Int(1));
  }();
  return inv;
}

bool preserves_invariant(const PolyMap3& f) {
  const Poly3& inv = fricke_vogt_invariant();
  return inv.substitute(f.fx, f.fy, f.fz) == inv;
}

}  // namespace tracemaps
