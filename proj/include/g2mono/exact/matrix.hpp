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
 * @file matrix.hpp
 * @brief Dense row-major matrices over an exact field.
 *
 * Matrices act on column vectors: column j holds the image of basis
 * vector j. Equality is entrywise and exact.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match shape " +
                           shape_string(rows_, cols_));
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  /// Column vector from coordinates.
  static Matrix column(std::span<const T> v) {
    return Matrix(v.size(), 1, std::vector<T>(v.begin(), v.end()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  std::span<const T> entries() const noexcept { return data_; }
  std::span<const T> row(std::size_t i) const { return std::span<const T>(data_).subspan(i * cols_, cols_); }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? T(1) : T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    require_square("trace");
    T s(0);
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  std::string shape() const { return shape_string(rows_, cols_); }

  void require_square(const char* op) const {
    if (!is_square()) throw DimensionError(std::string(op) + " needs a square matrix, got " + shape());
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix c(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == 0) continue;
          tmp = aik * b(k, j);
          c(i, j) += tmp;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

  static std::string shape_string(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for " +
                           shape());
  }
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("operator") + op + " on " + shape() + " and " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Exact product a*b; throws DimensionError naming both shapes.
template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b;
}

/// a^k for k >= 0.
template <typename T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
  a.require_square("power");
  Matrix<T> result = Matrix<T>::identity(a.rows());
  Matrix<T> base = a;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

/// ab - ba.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || a.rows() != b.rows() || b.cols() != a.cols())
    throw DimensionError("bracket of " + a.shape() + " and " + b.shape());
  return a * b - b * a;
}

/// Row-major flattening, used to test linear independence of matrices.
template <typename T>
std::vector<T> vectorize(const Matrix<T>& a) {
  return {a.entries().begin(), a.entries().end()};
}

template <typename T>
Matrix<T> unvectorize(std::span<const T> v, std::size_t rows, std::size_t cols) {
  return Matrix<T>(rows, cols, std::vector<T>(v.begin(), v.end()));
}

/// Stacks vectorized matrices as rows.
template <typename T>
Matrix<T> stack_vectorized(std::span<const Matrix<T>> ms) {
  if (ms.empty()) return {};
  const std::size_t len = ms.front().size();
  std::vector<T> out;
  out.reserve(len * ms.size());
  for (const auto& m : ms) {
    if (m.size() != len) throw DimensionError("stack_vectorized: mixed sizes");
    out.insert(out.end(), m.entries().begin(), m.entries().end());
  }
  return Matrix<T>(ms.size(), len, std::move(out));
}

template <typename T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace g2mono
