// Copyright 2026 The g2mono Authors
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

// Rational roots of rational polynomials without factoring.
//
// A rational root p/q of a primitive integer polynomial g with leading
// coefficient a has q | a, so y = a*x turns the roots into integer roots of
// the monic integer polynomial h(y) = a^(n-1) g(y/a). Those are located by
// Sturm-sequence bisection on integer intervals down to unit width.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "g2mono/exact/polynomial.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

namespace detail {

inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RationalPolynomial r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline std::size_t sign_changes(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of squarefree h in (lo, hi], appended to out.
inline void isolate_integer_roots(const RationalPolynomial& h, const std::vector<RationalPolynomial>& seq,
                                  const Integer& lo, const Integer& hi, std::vector<Integer>& out) {
  const std::size_t count = sign_changes(seq, Rational(lo)) - sign_changes(seq, Rational(hi));
  if (count == 0) return;
  if (hi - lo == 1) {
    if (h(Rational(hi)) == 0) out.push_back(hi);
    return;
  }
  if (count == 1) {
    // One simple root in (lo, hi]: bisect on the sign of h alone.
    Integer a = lo, b = hi;
    // just right of a root at lo, h takes the sign of h'(lo)
    int sa = sgn(h(Rational(a)));
    if (sa == 0) sa = sgn(h.derivative()(Rational(a)));
    if (sgn(h(Rational(b))) == 0) {
      out.push_back(b);
      return;
    }
    while (b - a > 1) {
      Integer mid = a + b;
      mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
      const int sm = sgn(h(Rational(mid)));
      if (sm == 0) {
        out.push_back(mid);
        return;
      }
      (sm == sa ? a : b) = mid;
    }
    return;
  }
  Integer mid = lo + hi;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
  isolate_integer_roots(h, seq, lo, mid, out);
  isolate_integer_roots(h, seq, mid, hi, out);
}

// Bound on the absolute value of every root of monic h: 2 max_i |h_{n-i}|^{1/i}.
inline Integer monic_root_bound(const RationalPolynomial& h) {
  const auto& c = h.coefficients();
  const std::size_t n = c.size() - 1;
  Integer best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    Integer v = abs(c[n - i].get_num());
    if (v == 0) continue;
    Integer r;
    mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(i));
    r += 1;
    if (r > best) best = r;
  }
  return 2 * best + 1;
}

}  // namespace detail

/// Distinct rational roots of p in increasing order, with multiplicities.
inline std::vector<std::pair<Rational, unsigned>> rational_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  RationalPolynomial s = (p / gcd(p, p.derivative())).monic();
  if (s(Rational(0)) == 0) {
    roots.push_back(Rational(0));
    s = s / RationalPolynomial::x();
  }
  if (s.degree() >= 1) {
    // integer primitive form g, leading coefficient a
    Integer l = 1;
    for (const auto& c : s.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> g;
    for (const auto& c : s.coefficients()) {
      Rational v = c * l;
      g.push_back(v.get_num());
    }
    Integer content = 0;
    for (const auto& v : g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : g) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    const Integer a = g.back();
    const std::size_t n = g.size() - 1;
    std::vector<Rational> hc(n + 1);
    Integer apow = 1;
    for (std::size_t i = n; i-- > 0;) {
      hc[i] = Rational(g[i] * apow);
      apow *= a;
    }
    hc[n] = 1;
    const RationalPolynomial h(hc);
    const Integer bound = detail::monic_root_bound(h);
    const auto seq = detail::sturm_sequence(h);
    std::vector<Integer> yroots;
    detail::isolate_integer_roots(h, seq, -bound - 1, bound, yroots);
    for (const auto& y : yroots) roots.push_back(make_rational(y, a));
  }
  std::sort(roots.begin(), roots.end());
  std::vector<std::pair<Rational, unsigned>> out;
  for (const auto& r : roots) out.emplace_back(r, multiplicity(p, RationalPolynomial::linear_root(r)));
  return out;
}

/// True iff p splits over Q into linear factors.
inline bool splits_over_rationals(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("splitting of the zero polynomial");
  if (p.degree() <= 1) return true;
  // quick rejection: a split polynomial has only real roots
  const RationalPolynomial s = p / gcd(p, p.derivative());
  const RationalPolynomial monic = s.monic();
  Integer bound = 0;
  for (const auto& c : monic.coefficients()) {
    Integer m = abs(c.get_num()) / c.get_den() + 1;
    if (m > bound) bound = m;
  }
  const auto seq = detail::sturm_sequence(monic);
  if (static_cast<long>(detail::sign_changes(seq, Rational(-bound - 1)) - detail::sign_changes(seq, Rational(bound + 1))) !=
      monic.degree())
    return false;
  unsigned total = 0;
  for (const auto& [r, m] : rational_roots(p)) total += m;
  return static_cast<long>(total) == p.degree();
}

}  // namespace g2mono
