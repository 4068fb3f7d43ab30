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

#include "tracemaps/fricke.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace tracemaps {

namespace {

std::mutex memo_mutex;
std::map<std::vector<Letter>, Poly3>& memo_table() {
  static std::map<std::vector<Letter>, Poly3> table;
  return table;
}

// Chebyshev-style run: T_0 = 1, T_1 = base, T_m = 2*base*T_{m-1} - T_{m-2}.
// This is the half-trace of the m-th power of an element with half-trace
// `base`, by iterating the trace identity on w = l * l^{m-1}.
Poly3 power_half_trace(const Poly3& base, std::size_t m) {
  Poly3 prev(Int(1));
  if (m == 0) return prev;
  Poly3 cur = base;
  for (std::size_t e = 2; e <= m; ++e) {
    Poly3 next = Int(2) * (base * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly3 half_trace_impl(const Word& input);

// Recursion driver.  The argument is the cyclic-canonical representative;
// every branch recurses through half_trace_impl, which re-canonicalizes.
//
// Termination: order calls by (length, inverse-letter count), lexicographic.
// Canonicalization never grows either component, because the canonical form
// picks the inverse-minimal side of the class and cyclic reduction only
// shortens.  The inverse-elimination branch recurses on words of length
// n-1, and of length <= n with one inverse letter fewer; the run-splitting
// branch only on strictly shorter words.  So the measure strictly decreases
// along every edge.
Poly3 reduce_canonical(const std::vector<Letter>& w) {
  const std::size_t n = w.size();

  // base cases
  if (n == 0) return Poly3(Int(1));
  if (n == 1) {
    switch (w[0]) {
      case Letter::a: case Letter::A: return Poly3::variable('x');
      default: return Poly3::variable('y');
    }
  }
  if (n == 2 && w[0] == Letter::a && w[1] == Letter::b) return Poly3::variable('z');

  auto sub = [](std::vector<Letter> ls) { return half_trace_impl(Word::from_letters(std::move(ls))); };

  // inverse elimination: rotate an inverse letter to the back, giving
  // w ~ u * l^-1, then t(u l^-1) = 2 t(u) t(l) - t(u l).
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (!is_inverse_letter(w[pos])) continue;
    std::vector<Letter> rot(w.begin() + pos + 1, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + pos + 1);
    Letter l = inverse(rot.back());  // the positive letter
    std::vector<Letter> u(rot.begin(), rot.end() - 1);
    std::vector<Letter> ul = u;
    ul.push_back(l);
    Poly3 t_l = (l == Letter::a) ? Poly3::variable('x') : Poly3::variable('y');
    return Int(2) * (sub(u) * t_l) - sub(std::move(ul));
  }

  // all letters positive from here on; find the longest cyclic run
  std::size_t best_len = 0, best_start = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (w[s] == w[(s + n - 1) % n]) continue;  // not a run start
    std::size_t len = 1;
    while (len < n && w[(s + len) % n] == w[s]) ++len;
    if (len > best_len) {
      best_len = len;
      best_start = s;
    }
  }

  if (best_len == 0) {
    // single-letter word l^n
    Poly3 base = (w[0] == Letter::a) ? Poly3::variable('x') : Poly3::variable('y');
    return power_half_trace(base, n);
  }

  std::vector<Letter> rot(w.begin() + best_start, w.end());
  rot.insert(rot.end(), w.begin(), w.begin() + best_start);

  if (best_len == 1) {
    // alternating word, (ab)^k up to rotation
    return power_half_trace(Poly3::variable('z'), n / 2);
  }

  // w ~ l^r rest with r >= 2: t(l^r rest) = 2 t(l) t(l^{r-1} rest)
  //                                         - t(l^{r-2} rest)
  Poly3 t_l = (rot[0] == Letter::a) ? Poly3::variable('x') : Poly3::variable('y');
  std::vector<Letter> one_less(rot.begin() + 1, rot.end());
  std::vector<Letter> two_less(rot.begin() + 2, rot.end());
  return Int(2) * (t_l * sub(std::move(one_less))) - sub(std::move(two_less));
}

Poly3 half_trace_impl(const Word& input) {
  Word canon = input.cyclic_canonical();
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo_table().find(canon.letters());
    if (it != memo_table().end()) return it->second;
  }
  Poly3 result = reduce_canonical(canon.letters());
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo_table().emplace(canon.letters(), result);
  }
  return result;
}

}  // namespace

Poly3 half_trace(const Word& w) { return half_trace_impl(w); }

bool is_nielsen(const PolyMap3& f) {
  // integer coefficients hold by construction of Poly3
  if (!preserves_invariant(f)) return false;
  std::array<Rat, 3> one{Rat(1), Rat(1), Rat(1)};
  return f.eval(one) == one;
}

namespace {

Mat2 u_power(long k) { return Mat2(1, k, 0, 1); }
const Mat2 kSwap(0, 1, 1, 0);
const Mat2 kReflect(1, 0, 0, -1);

// symmetric remainder quotient: minimizes |a - q c|
Int sym_quot(const Int& a, const Int& c) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  if (Int(2) * r > abs(c)) q += (c > 0) ? 1 : -1;
  return q;
}

}  // namespace

std::vector<GenToken> decompose_unimodular(const Mat2& m) {
  if (!m.is_unimodular())
    throw DomainError("matrix is not unimodular (det = " + m.det().get_str() + ")");

  std::vector<GenToken> tokens;
  auto push_u = [&tokens](const Int& k) {
    if (k == 0) return;
    if (!k.fits_slong_p()) throw DomainError("exponent exceeds machine range");
    tokens.push_back(GenToken{GenKind::UPower, k.get_si()});
  };

  // peel generators off the left while clearing the bottom-left entry
  Mat2 work = m;
  while (work.c != 0) {
    if (abs(work.a) < abs(work.c)) {
      tokens.push_back(GenToken{GenKind::Swap});
      work = kSwap * work;
    } else {
      Int q = sym_quot(work.a, work.c);
      push_u(q);
      work = Mat2(1, -q, 0, 1) * work;  // left-multiply by U^-q
    }
  }

  // work = [[a, b], [0, d]] with a*d = +-1; fold the sign into the class
  if (work.a == 1 && work.d == 1) {
    push_u(work.b);
  } else if (work.a == 1 && work.d == -1) {
    push_u(-work.b);
    tokens.push_back(GenToken{GenKind::Reflect});
  } else if (work.a == -1 && work.d == 1) {
    push_u(work.b);
    tokens.push_back(GenToken{GenKind::Reflect});
  } else {
    push_u(-work.b);
  }

  // reassembly must reproduce m up to sign; anything else is a bug
  Mat2 back = reassemble(tokens);
  if (back != m && back != -m)
    throw VerificationError("generator decomposition failed to reassemble");
  return tokens;
}

Mat2 reassemble(const std::vector<GenToken>& tokens) {
  Mat2 acc = Mat2::identity();
  for (const GenToken& t : tokens) {
    switch (t.kind) {
      case GenKind::UPower: acc = acc * u_power(t.exponent); break;
      case GenKind::Swap: acc = acc * kSwap; break;
      case GenKind::Reflect: acc = acc * kReflect; break;
    }
  }
  return acc;
}

std::string tokens_str(const std::vector<GenToken>& tokens) {
  if (tokens.empty()) return "I";
  std::string out;
  for (const GenToken& t : tokens) {
    if (!out.empty()) out += " ";
    switch (t.kind) {
      case GenKind::UPower:
        out += "U";
        if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
        break;
      case GenKind::Swap: out += "S"; break;
      case GenKind::Reflect: out += "D"; break;
    }
  }
  return out;
}

namespace {

// half-traces T_j = t(a^j b) obey T_{j+1} = 2x T_j - T_{j-1} in both
// directions, with T_0 = y, T_1 = z
std::pair<Poly3, Poly3> u_component_pair(long k) {
  Poly3 x = Poly3::variable('x');
  Poly3 tj = Poly3::variable('y');      // T_0
  Poly3 tj1 = Poly3::variable('z');     // T_1
  if (k >= 0) {
    for (long step = 0; step < k; ++step) {
      Poly3 next = Int(2) * (x * tj1) - tj;
      tj = std::move(tj1);
      tj1 = std::move(next);
    }
  } else {
    for (long step = 0; step > k; --step) {
      Poly3 prev = Int(2) * (x * tj) - tj1;
      tj1 = std::move(tj);
      tj = std::move(prev);
    }
  }
  return {tj, tj1};  // (T_k, T_{k+1})
}

PolyMap3 token_polymap(const GenToken& t) {
  Poly3 x = Poly3::variable('x'), y = Poly3::variable('y'), z = Poly3::variable('z');
  switch (t.kind) {
    case GenKind::UPower: {
      auto [tk, tk1] = u_component_pair(t.exponent);
      return PolyMap3{x, std::move(tk), std::move(tk1)};
    }
    case GenKind::Swap:
      return PolyMap3{y, x, z};
    case GenKind::Reflect:
    default:
      return PolyMap3{x, y, Int(2) * (x * y) - z};
  }
}

}  // namespace

TraceMap::TraceMap(PolyMap3 map, ProjMat matrix, std::string provenance)
    : map_(std::move(map)), matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  if (!is_nielsen(map_))
    throw VerificationError("constructed map fails the membership checks (" +
                            provenance_ + ")");
}

TraceMap TraceMap::identity() {
  return TraceMap(PolyMap3::identity(), ProjMat(Mat2::identity()), "identity");
}

TraceMap TraceMap::from_substitution(const Substitution& s) {
  Mat2 ab = s.abelianization();
  if (!ab.is_unimodular())
    throw DomainError("non-Nielsen substitution: |det| of abelianization is " +
                      Int(abs(ab.det())).get_str() + ", not 1");
  PolyMap3 map{half_trace(s.image_a), half_trace(s.image_b),
               half_trace(s.image_a * s.image_b)};
  return TraceMap(std::move(map), ProjMat(ab), "substitution: " + s.str());
}

TraceMap TraceMap::from_matrix(const Mat2& m) { return from_matrix(ProjMat(m)); }

TraceMap TraceMap::from_matrix(const ProjMat& p) {
  std::vector<GenToken> tokens = decompose_unimodular(p.rep());
  // anti-homomorphic fold: with M = G_1 ... G_L, the map of M is
  // map(G_L) ∘ ... ∘ map(G_1)
  PolyMap3 acc = PolyMap3::identity();
  for (const GenToken& t : tokens) acc = map_compose(token_polymap(t), acc);
  return TraceMap(std::move(acc), p, "decomposition: " + tokens_str(tokens));
}

TraceMap TraceMap::inverse() const { return from_matrix(matrix_.inverse()); }

TraceMap TraceMap::pow(long k) const { return from_matrix(matrix_.pow(k)); }

TraceMap compose(const TraceMap& outer, const TraceMap& inner) {
  return TraceMap(map_compose(outer.map_, inner.map_),
                  inner.matrix_ * outer.matrix_, "composite");
}

}  // namespace tracemaps
