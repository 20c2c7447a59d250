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
 * @file polynomial.hpp
 * @brief Univariate polynomials over an exact field, lowest degree first.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  /// x - r
  static Polynomial linear_root(const T& r) { return Polynomial(std::vector<T>{-r, T(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const T lead = p.c_.back();
    for (auto& v : p.c_) v /= lead;
    return p;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  Matrix<T> operator()(const Matrix<T>& a) const {
    a.require_square("polynomial evaluation");
    const std::size_t n = a.rows();
    Matrix<T> acc(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * a;
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> r = a.c_;
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Division with remainder: a = q*b + r, deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (rem.size() <= db) return {Polynomial{}, a};
    std::vector<T> quo(rem.size() - db, T(0));
    const T& lead = b.c_.back();
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k] == 0) continue;
      const T f = rem[k] / lead;
      quo[k - db] = f;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const T& v = c_[k];
      if (v == 0) continue;
      T mag = v < 0 ? T(-v) : v;
      if (first) {
        if (v < 0) os << '-';
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = mag == 1;
      if (k == 0) {
        os << mag;
      } else {
        if (!unit) os << mag << '*';
        os << var;
        if (k > 1) os << '^' << k;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Monic gcd by the Euclidean scheme; gcd(0, 0) = 0.
template <typename T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// True iff gcd(p, p') is constant. Throws on the zero polynomial.
template <typename T>
bool is_squarefree(const Polynomial<T>& p) {
  if (p.is_zero()) throw DomainError("squarefreeness of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

/// Largest m with f^m dividing p. f must be nonconstant and p nonzero.
template <typename T>
unsigned multiplicity(Polynomial<T> p, const Polynomial<T>& f) {
  if (f.degree() < 1) throw DomainError("multiplicity of a constant factor");
  if (p.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  unsigned m = 0;
  for (;;) {
    auto [q, r] = divmod(p, f);
    if (!r.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

template <typename T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned k) {
  Polynomial<T> r = Polynomial<T>::constant(T(1));
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace g2mono
