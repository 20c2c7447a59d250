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

// Independent reference implementations used only by the tests. They share
// no code paths with the library's algorithms beyond GMP scalars and the
// Matrix container.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/exact/rational.hpp"

namespace oracle {

using g2mono::Rational;
using g2mono::RationalMatrix;
using g2mono::RationalPolynomial;

/// Schoolbook product with explicit index loops.
inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

/// Laplace expansion along the first row; fine up to 8x8.
inline Rational cofactor_det(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Rational term = a(0, j) * cofactor_det(minor);
    s += (j % 2 == 0) ? term : Rational(-term);
  }
  return s;
}

/// Plain Gaussian elimination with fractions, for sizes beyond cofactor reach.
inline Rational elimination_det(RationalMatrix a) {
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a(r, c) / a(c, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

inline Rational any_det(const RationalMatrix& a) { return a.rows() <= 7 ? cofactor_det(a) : elimination_det(a); }

/// Coefficients of the unique degree-<=n polynomial through (x_i, y_i), by Lagrange interpolation.
inline RationalPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  RationalPolynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RationalPolynomial basis = RationalPolynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RationalPolynomial::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    out = out + Rational(ys[i] / denom) * basis;
  }
  return out;
}

/// det(xI - A) sampled at x = 0..n and interpolated.
inline RationalPolynomial charpoly_by_interpolation(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational x = static_cast<long>(k);
    xs.push_back(x);
    ys.push_back(any_det(x * RationalMatrix::identity(n) - a));
  }
  return interpolate(xs, ys);
}

/// Product of (x - r) over the listed roots.
inline RationalPolynomial from_roots(const std::vector<Rational>& roots) {
  RationalPolynomial p = RationalPolynomial::constant(1);
  for (const auto& r : roots) p = p * RationalPolynomial::linear_root(r);
  return p;
}

/// Elementary matrix E_ij of size n.
inline RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  RationalMatrix e(n, n);
  e(i, j) = 1;
  return e;
}

/// Standard basis of sl_n: E_ij (i != j) and E_ii - E_{i+1,i+1}.
inline std::vector<RationalMatrix> sl_basis(std::size_t n) {
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(unit(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  return out;
}

inline RationalMatrix random_integer_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline RationalMatrix random_rational_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = g2mono::make_rational(num(rng), den(rng));
  return m;
}

/// Strictly upper triangular integer matrix (nilpotent).
inline RationalMatrix random_nilpotent(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = d(rng);
  return m;
}

/// Integer matrix with determinant 1 built from elementary row operations.
inline RationalMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  RationalMatrix m = RationalMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int k = f(rng);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
  }
  return m;
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace oracle
