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
 * @file lie_span.hpp
 * @brief Linear span of square matrices with exact membership and coordinates.
 *
 * Elements are kept twice: the basis in insertion order, and a reduced row
 * echelon form of their vectorizations together with the transform taking
 * basis coordinates to echelon rows. The echelon form depends only on the
 * row space, so two spans are equal iff their echelon() matrices are.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

class LieSpan {
 public:
  LieSpan() = default;
  explicit LieSpan(std::size_t ambient_size) : n_(ambient_size) {}

  std::size_t ambient_size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<RationalMatrix>& basis() const noexcept { return basis_; }

  /// Set by lie_closure once every bracket of basis elements is known to lie in the span.
  bool closed() const noexcept { return closed_; }
  void mark_closed() noexcept { closed_ = true; }

  /// Adds x if it is outside the span. Returns true when the dimension grew.
  bool insert(const RationalMatrix& x) {
    check_shape(x);
    auto [vec, combo] = reduce(x);
    const auto lead = std::find_if(vec.begin(), vec.end(), [](const Rational& v) { return v != 0; });
    if (lead == vec.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(lead - vec.begin());
    combo.push_back(Rational(1));  // coefficient of x itself
    for (auto& row : transforms_) row.resize(basis_.size() + 1, Rational(0));
    const Rational inv = 1 / Rational(vec[pivot]);
    for (auto& v : vec) v *= inv;
    for (auto& v : combo) v *= inv;
    // clear the new pivot column from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = rows_[r][pivot];
      if (f == 0) continue;
      for (std::size_t k = 0; k < vec.size(); ++k) rows_[r][k] -= f * vec[k];
      for (std::size_t k = 0; k < combo.size(); ++k) transforms_[r][k] -= f * combo[k];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(vec));
    transforms_.insert(transforms_.begin() + pos, std::move(combo));
    basis_.push_back(x);
    closed_ = false;
    return true;
  }

  bool contains(const RationalMatrix& x) const {
    check_shape(x);
    auto [vec, combo] = reduce(x);
    return std::all_of(vec.begin(), vec.end(), [](const Rational& v) { return v == 0; });
  }

  /// Coordinates of x in basis(); throws DomainError when x is outside the span.
  std::vector<Rational> coordinates(const RationalMatrix& x) const {
    check_shape(x);
    auto [vec, combo] = reduce(x);
    if (!std::all_of(vec.begin(), vec.end(), [](const Rational& v) { return v == 0; }))
      throw DomainError("element lies outside the span");
    for (auto& v : combo) v = -v;
    return combo;
  }

  RationalMatrix element(std::span<const Rational> coords) const {
    if (coords.size() != basis_.size()) throw DimensionError("coordinate vector length does not match span dimension");
    RationalMatrix out(n_, n_);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) out += coords[i] * basis_[i];
    return out;
  }

  /// Reduced row echelon form of the vectorized basis (dimension x n^2).
  RationalMatrix echelon() const {
    RationalMatrix e(rows_.size(), n_ * n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t k = 0; k < n_ * n_; ++k) e(r, k) = rows_[r][k];
    return e;
  }

 private:
  void check_shape(const RationalMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_)
      throw DimensionError("span of " + RationalMatrix::shape_string(n_, n_) + " matrices given " + x.shape());
  }

  // Returns (residual, combo) with residual = vec(x) + sum_b combo[b] * basis[b].
  std::pair<std::vector<Rational>, std::vector<Rational>> reduce(const RationalMatrix& x) const {
    std::vector<Rational> vec(x.entries().begin(), x.entries().end());
    std::vector<Rational> combo(basis_.size(), Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = vec[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t k = pivots_[r]; k < vec.size(); ++k)
        if (rows_[r][k] != 0) vec[k] -= f * rows_[r][k];
      for (std::size_t k = 0; k < combo.size(); ++k)
        if (transforms_[r][k] != 0) combo[k] -= f * transforms_[r][k];
    }
    return {std::move(vec), std::move(combo)};
  }

  std::size_t n_ = 0;
  std::vector<RationalMatrix> basis_;
  std::vector<std::vector<Rational>> rows_;        // echelon rows, sorted by pivot
  std::vector<std::vector<Rational>> transforms_;  // rows_[r] = sum_b transforms_[r][b] vec(basis_[b])
  std::vector<std::size_t> pivots_;
  bool closed_ = false;
};

}  // namespace g2mono
