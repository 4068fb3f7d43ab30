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

#include "tracemaps/qform.hpp"

#include <algorithm>
#include <array>

namespace tracemaps {

namespace {

using Vec4 = std::array<Int, 4>;
using Mat4 = std::array<Vec4, 4>;

bool abs_less(const Int& l, const Int& r) {
  return mpz_cmpabs(l.get_mpz_t(), r.get_mpz_t()) < 0;
}

// Saturated basis of {v in Z^4 : A v = 0}: column reduction by unimodular
// operations mirrored on an identity matrix; kernel vectors are the mirror
// columns under the zero columns of the reduced A.
std::vector<Vec4> integer_kernel(Mat4 a) {
  Mat4 u{};
  for (int i = 0; i < 4; ++i) u[i][i] = 1;

  auto col_swap = [&](int c1, int c2) {
    for (int r = 0; r < 4; ++r) {
      std::swap(a[r][c1], a[r][c2]);
      std::swap(u[r][c1], u[r][c2]);
    }
  };
  auto col_submul = [&](int dst, int src, const Int& q) {
    for (int r = 0; r < 4; ++r) {
      a[r][dst] -= q * a[r][src];
      u[r][dst] -= q * u[r][src];
    }
  };

  int pivot = 0;
  for (int row = 0; row < 4 && pivot < 4; ++row) {
    while (true) {
      int best = -1;
      for (int c = pivot; c < 4; ++c)
        if (a[row][c] != 0 && (best < 0 || abs_less(a[row][c], a[row][best]))) best = c;
      if (best < 0) break;  // this row has no pivot
      if (best != pivot) col_swap(best, pivot);
      bool cleared = true;
      for (int c = pivot + 1; c < 4; ++c) {
        if (a[row][c] == 0) continue;
        Int q = a[row][c] / a[row][pivot];  // truncated; refined on next pass
        if (q != 0) col_submul(c, pivot, q);
        if (a[row][c] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }

  std::vector<Vec4> basis;
  for (int c = pivot; c < 4; ++c) basis.push_back({u[0][c], u[1][c], u[2][c], u[3][c]});
  return basis;
}

Vec4 to_vec(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }
Mat2 to_mat(const Vec4& v) { return Mat2(v[0], v[1], v[2], v[3]); }

}  // namespace

LatticeBasis make_lattice_basis(const Mat2& m1, const Mat2& m2) {
  Vec4 v1 = to_vec(m1), v2 = to_vec(m2);
  auto submul = [](Vec4& dst, const Vec4& src, const Int& q) {
    for (int i = 0; i < 4; ++i) dst[i] -= q * src[i];
  };
  auto negate = [](Vec4& v) {
    for (Int& e : v) e = -e;
  };

  int j = 0;
  while (j < 4 && v1[j] == 0 && v2[j] == 0) ++j;
  if (j == 4) throw DomainError("zero matrices do not span a lattice");

  // Euclid the two rows in column j until the second vanishes there
  while (v2[j] != 0) {
    Int q = v1[j] / v2[j];  // truncated; remainder is strictly smaller
    if (q != 0) submul(v1, v2, q);
    std::swap(v1, v2);
  }
  if (v1[j] < 0) negate(v1);

  int j2 = j + 1;
  while (j2 < 4 && v2[j2] == 0) ++j2;
  if (j2 == 4) throw DomainError("matrices are rationally dependent");
  if (v2[j2] < 0) negate(v2);

  // reduce the first row above the second pivot into [0, v2[j2])
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v1[j2].get_mpz_t(), v2[j2].get_mpz_t());
  if (q != 0) submul(v1, v2, q);

  return LatticeBasis{to_mat(v1), to_mat(v2)};
}

std::optional<std::pair<Int, Int>> lattice_coordinates(const LatticeBasis& basis,
                                                       const Mat2& m) {
  Vec4 v1 = to_vec(basis.b1), v2 = to_vec(basis.b2), w = to_vec(m);
  // Cramer on any coordinate pair with invertible 2x2 minor
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Int d = v1[i] * v2[j] - v1[j] * v2[i];
      if (d == 0) continue;
      Rat s(w[i] * v2[j] - w[j] * v2[i], d);
      Rat t(v1[i] * w[j] - v1[j] * w[i], d);
      s.canonicalize();
      t.canonicalize();
      if (s.get_den() != 1 || t.get_den() != 1) return std::nullopt;
      Int si = s.get_num(), ti = t.get_num();
      if (!(basis.combine(si, ti) == m)) return std::nullopt;
      return std::make_pair(si, ti);
    }
  throw DomainError("basis matrices are rationally dependent");
}

std::optional<LatticeBasis> commutation_lattice(const Mat2& m, LatticeSide side,
                                                int eps) {
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  ProjMat p(m);  // validates |det| = 1
  if (p.is_identity())
    throw DomainError("degenerate: full matrix space commutes with the identity class");

  Mat2 mp = (side == LatticeSide::Commute) ? m : m.inverse();
  Int e(eps);
  // rows are the coefficients of R*M - e*M'*R = 0 over R = [[p,q],[r,s]]
  Mat4 sys = {{
      {m.a - e * mp.a, m.c, -e * mp.b, Int(0)},
      {m.b, m.d - e * mp.a, Int(0), -e * mp.b},
      {-e * mp.c, Int(0), m.a - e * mp.d, m.c},
      {Int(0), -e * mp.c, m.b, m.d - e * mp.d},
  }};

  std::vector<Vec4> kernel = integer_kernel(sys);
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() != 2)
    throw VerificationError("commutation lattice has unexpected rank " +
                            std::to_string(kernel.size()));

  LatticeBasis basis = make_lattice_basis(to_mat(kernel[0]), to_mat(kernel[1]));
  for (const Mat2* b : {&basis.b1, &basis.b2})
    if (!(*b * m == e * (mp * *b)))
      throw VerificationError("lattice basis fails its defining relation");
  return basis;
}

BinaryQF::BinaryQF(Int alpha, Int beta, Int gamma)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(beta_ * beta_ - 4 * alpha_ * gamma_) {}

Int BinaryQF::eval(const Int& s, const Int& t) const {
  return alpha_ * s * s + beta_ * s * t + gamma_ * t * t;
}

bool BinaryQF::degenerate() const {
  return delta_ == 0 ||
         (delta_ > 0 && mpz_perfect_square_p(delta_.get_mpz_t()) != 0);
}

std::string BinaryQF::str() const {
  return "(" + alpha_.get_str() + ", " + beta_.get_str() + ", " + gamma_.get_str() +
         "; " + delta_.get_str() + ")";
}

BinaryQF form_of_lattice(const LatticeBasis& l) {
  Int a = l.b1.det();
  Int c = l.b2.det();
  Int b = (l.b1 + l.b2).det() - a - c;
  return BinaryQF(std::move(a), std::move(b), std::move(c));
}

namespace {

Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& v) {
  if (v < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(v);
}

bool divides(const Int& d, const Int& v) {
  return d != 0 && mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

// definite case: 4a q(s,t) = (2as + bt)^2 - D t^2 bounds |t|
void solve_definite(const BinaryQF& q, int target, std::optional<QFWitness>& out) {
  const Int &a = q.alpha(), &b = q.beta(), &D = q.discriminant();
  if ((a > 0) != (target > 0)) return;  // definite forms are one-signed
  Int tmax = isqrt(Int(4 * abs(a) / abs(D)));
  for (Int t = 0; t <= tmax; ++t) {
    for (int sign : {1, -1}) {
      if (t == 0 && sign < 0) continue;
      Int tt = sign * t;
      std::optional<Int> k = exact_sqrt(D * tt * tt + 4 * a * target);
      if (!k) continue;
      for (int ks : {1, -1}) {
        Int num = -b * tt + ks * *k;
        if (!divides(2 * a, num)) continue;
        out = QFWitness{Int(num / (2 * a)), tt};
        return;
      }
    }
  }
}

// zero discriminant: 4a q = (2as + bt)^2, or q = c t^2 when a = 0
void solve_parabolic(const BinaryQF& q, int target, std::optional<QFWitness>& out) {
  const Int &a = q.alpha(), &b = q.beta(), &c = q.gamma();
  if (a == 0) {  // then b = 0 too, q = c t^2
    if (c == target) out = QFWitness{Int(0), Int(1)};
    return;
  }
  std::optional<Int> k = exact_sqrt(Int(4 * a * target));
  if (!k) return;
  // 2as + bt = k, minimal solution via extended gcd
  Int g, u, v;
  Int twoa = 2 * a;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), twoa.get_mpz_t(),
             b.get_mpz_t());
  if (!divides(g, *k)) return;
  Int scale = *k / g;
  out = QFWitness{Int(u * scale), Int(v * scale)};
}

// square discriminant k^2 > 0: 4a q factors into two integer linear forms
void solve_split(const BinaryQF& q, int target, std::optional<QFWitness>& out) {
  const Int &a = q.alpha(), &b = q.beta(), &c = q.gamma();
  Int k = *exact_sqrt(q.discriminant());
  if (a == 0) {  // q = t (b s + c t), b != 0, so |t| = 1
    for (int t : {1, -1}) {
      Int rhs = (Int(target) - c) * t;  // b s = (n - c t^2) / t
      if (divides(b, rhs)) {
        out = QFWitness{Int(rhs / b), Int(t)};
        return;
      }
    }
    return;
  }
  // (2as + (b-k)t)(2as + (b+k)t) = 4 a n: enumerate divisor splittings
  Int prod = 4 * a * target;
  Int bound = abs(prod);
  for (Int d = 1; d <= bound; ++d) {
    if (!divides(d, prod)) continue;
    for (int ds : {1, -1}) {
      Int u = ds * d;
      Int v = prod / u;
      if (!divides(2 * k, v - u)) continue;
      Int t = (v - u) / (2 * k);
      Int num = u - (b - k) * t;
      if (!divides(2 * a, num)) continue;
      out = QFWitness{Int(num / (2 * a)), t};
      return;
    }
  }
}

struct CycleState {
  Int a, b, c;
  Mat2 t;  // current form = original ∘ t, det(t) = 1
};

// normalized rho step of the classical reduction of indefinite forms
void rho(CycleState& f, const Int& D, const Int& sfloor) {
  Int ac = abs(f.c);
  Int hi = (ac > sfloor) ? ac : sfloor;
  Int mod = 2 * ac;
  Int r;
  Int shifted = hi + f.b;
  mpz_mod(r.get_mpz_t(), shifted.get_mpz_t(), mod.get_mpz_t());
  Int bp = hi - r;                    // unique value ≡ -b (mod 2|c|) in (hi-2|c|, hi]
  Int m = (f.b + bp) / (2 * f.c);
  Int cp = (bp * bp - D) / (4 * f.c);
  f.t = f.t * Mat2(0, -1, 1, m);
  f.a = f.c;
  f.b = bp;
  f.c = cp;
}

bool is_reduced(const CycleState& f, const Int& sfloor) {
  if (f.b <= 0 || f.b > sfloor) return false;
  Int twoa = 2 * abs(f.a);
  return sfloor - f.b < twoa && twoa <= sfloor + f.b;
}

// indefinite, non-square discriminant: walk the cycle of reduced forms.
// +-1 is represented iff it appears as a leading coefficient in the cycle
// (any value below sqrt(D)/2 in magnitude is, and D >= 5 here since
// discriminants are 0 or 1 mod 4).
void solve_indefinite(const BinaryQF& q, RepresentationResult& out) {
  const Int& D = q.discriminant();
  Int sfloor = isqrt(D);
  CycleState f{q.alpha(), q.beta(), q.gamma(), Mat2::identity()};

  auto try_witness = [&](const CycleState& st) {
    QFWitness w{st.t.a, st.t.c};  // image of (1,0), evaluates to the lead coeff
    if (st.a == 1 && !out.plus_one) out.plus_one = w;
    if (st.a == -1 && !out.minus_one) out.minus_one = w;
  };

  const int kMaxSteps = 100000;
  int steps = 0;
  try_witness(f);
  while (!is_reduced(f, sfloor)) {
    rho(f, D, sfloor);
    try_witness(f);
    if (++steps > kMaxSteps)
      throw VerificationError("form reduction failed to terminate");
  }

  CycleState first = f;
  do {
    out.cycle.emplace_back(f.a, f.b, f.c);
    rho(f, D, sfloor);
    try_witness(f);
    if (++steps > kMaxSteps)
      throw VerificationError("reduction cycle failed to close");
  } while (!(f.a == first.a && f.b == first.b && f.c == first.c));
}

}  // namespace

RepresentationResult represents_pm1(const BinaryQF& q) {
  if (q.is_zero()) throw DomainError("zero form");
  const Int& D = q.discriminant();

  RepresentationResult out;
  if (D < 0) {
    out.method = "definite-enumeration";
    solve_definite(q, +1, out.plus_one);
    solve_definite(q, -1, out.minus_one);
  } else if (D == 0) {
    out.method = "degenerate-factorization";
    solve_parabolic(q, +1, out.plus_one);
    solve_parabolic(q, -1, out.minus_one);
  } else if (mpz_perfect_square_p(D.get_mpz_t()) != 0) {
    out.method = "square-factorization";
    solve_split(q, +1, out.plus_one);
    solve_split(q, -1, out.minus_one);
  } else {
    out.method = "reduction-cycle";
    solve_indefinite(q, out);
  }

  if (out.plus_one && q.eval(out.plus_one->s, out.plus_one->t) != 1)
    throw VerificationError("witness for +1 fails evaluation");
  if (out.minus_one && q.eval(out.minus_one->s, out.minus_one->t) != -1)
    throw VerificationError("witness for -1 fails evaluation");
  return out;
}

}  // namespace tracemaps
