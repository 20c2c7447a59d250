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

/**
 * @file linalg.hpp
 * @brief Exact decision procedures on rational matrices.
 *
 * Every routine pivots on the first nonzero entry found scanning down the
 * current column, so outputs are deterministic. Nothing here rounds.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

struct EchelonForm {
  RationalMatrix reduced;            ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
/// Only the first `pivot_cols` columns are eligible as pivots (default: all).
inline EchelonForm rref(RationalMatrix a, std::optional<std::size_t> pivot_cols = std::nullopt) {
  const std::size_t m = a.rows();
  const std::size_t ncols = pivot_cols.value_or(a.cols());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational f;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / Rational(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

/// Row rank over Q.
inline std::size_t rank(const RationalMatrix& a) { return rref(a).rank(); }

/**
 * Determinant by fraction-free (Bareiss) elimination.
 *
 * Each row is first scaled by the lcm of its denominators so elimination
 * runs over the integers; the scalings are divided out at the end.
 */
inline Rational det(const RationalMatrix& a) {
  a.require_square("det");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  Matrix<Integer> m(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a(i, j) * l;
      m(i, j) = v.get_num();
    }
    scale *= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Rational d = make_rational(m(n - 1, n - 1) * sign, scale);
  return d;
}

/// Basis of {x : a x = 0}, one column vector per element.
inline std::vector<std::vector<Rational>> kernel(const RationalMatrix& a) {
  const EchelonForm e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct UniqueSolution {
  RationalMatrix x;
};

struct AffineSolution {
  RationalMatrix particular;
  std::vector<std::vector<Rational>> kernel;
};

struct Inconsistent {};

using LinearSolution = std::variant<UniqueSolution, AffineSolution, Inconsistent>;

/**
 * Classifies and solves a x = b exactly. b may carry several right-hand
 * sides as columns; the system is consistent only if all of them are.
 */
inline LinearSolution solve_linear(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionError("solve_linear: lhs " + a.shape() + " and rhs " + b.shape() + " disagree on rows");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  RationalMatrix aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  const EchelonForm e = rref(std::move(aug), n);
  for (std::size_t r = e.rank(); r < a.rows(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (e.reduced(r, n + j) != 0) return Inconsistent{};
  RationalMatrix x(n, k);
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t j = 0; j < k; ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  if (e.rank() == n) return UniqueSolution{std::move(x)};
  return AffineSolution{std::move(x), kernel(a)};
}

inline RationalMatrix inverse(const RationalMatrix& a) {
  a.require_square("inverse");
  const auto sol = solve_linear(a, RationalMatrix::identity(a.rows()));
  if (const auto* u = std::get_if<UniqueSolution>(&sol)) return u->x;
  throw DomainError("matrix is singular");
}

/// a^k for any integer k; negative powers need an invertible matrix.
inline RationalMatrix signed_power(const RationalMatrix& a, long k) {
  if (k >= 0) return power(a, static_cast<unsigned>(k));
  return power(inverse(a), static_cast<unsigned>(-k));
}

/**
 * Monic characteristic polynomial det(xI - a): reduction to upper
 * Hessenberg form, then the leading-minor recurrence.
 */
inline RationalPolynomial charpoly(const RationalMatrix& a) {
  a.require_square("charpoly");
  const std::size_t n = a.rows();
  // Similarity transform to upper Hessenberg form.
  RationalMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const Rational t = h(m, m - 1);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      const Rational u = h(i, m - 1) / t;
      for (std::size_t j = 0; j < n; ++j)
        if (h(m, j) != 0) h(i, j) -= u * h(m, j);
      for (std::size_t r = 0; r < n; ++r)
        if (h(r, i) != 0) h(r, m) += u * h(r, i);
    }
  }
  // p_k = charpoly of the leading k x k block, by expansion along the last column.
  std::vector<RationalPolynomial> p{RationalPolynomial::constant(Rational(1))};
  for (std::size_t k = 0; k < n; ++k) {
    RationalPolynomial next = RationalPolynomial::linear_root(h(k, k)) * p[k];
    Rational sub = 1;
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sub == 0) break;
      if (h(i, k) != 0) next = next - RationalPolynomial::constant(h(i, k) * sub) * p[i];
    }
    p.push_back(std::move(next));
  }
  return std::move(p.back());
}

/**
 * Monic minimal polynomial from the first linear dependence among
 * I, a, a^2, ... (vectorized).
 */
inline RationalPolynomial minpoly(const RationalMatrix& a) {
  a.require_square("minpoly");
  const std::size_t n = a.rows();
  const std::size_t len = n * n;
  // Incremental elimination: rows[r] = sum_i combos[r][i] vec(a^i), each row
  // normalized at its pivot and zero at the pivots of earlier rows.
  std::vector<std::vector<Rational>> rows, combos;
  std::vector<std::size_t> pivots;
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Rational> vec(power.entries().begin(), power.entries().end());
    std::vector<Rational> combo(d + 1, Rational(0));
    combo[d] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = vec[pivots[r]];
      if (f == 0) continue;
      for (std::size_t e = 0; e < len; ++e)
        if (rows[r][e] != 0) vec[e] -= f * rows[r][e];
      for (std::size_t i = 0; i < combos[r].size(); ++i) combo[i] -= f * combos[r][i];
    }
    const auto lead = std::find_if(vec.begin(), vec.end(), [](const Rational& v) { return v != 0; });
    if (lead == vec.end()) return RationalPolynomial(std::move(combo));
    const Rational inv = 1 / *lead;
    for (auto& v : vec) v *= inv;
    for (auto& c : combo) c *= inv;
    pivots.push_back(static_cast<std::size_t>(lead - vec.begin()));
    rows.push_back(std::move(vec));
    combos.push_back(std::move(combo));
    power = power * a;
  }
  throw DomainError("minpoly: no dependence found up to degree n");  // unreachable by Cayley-Hamilton
}

}  // namespace g2mono
