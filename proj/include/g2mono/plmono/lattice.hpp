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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

/// Hodge weight of the pairing: 1 for curves (alternating), 2 for surfaces (symmetric).
enum class Weight { One = 1, Two = 2 };

/**
 * A pairing matrix on a labelled basis. Weight one forms are alternating,
 * weight two forms symmetric; the constructor rejects anything else.
 */
class IntersectionForm {
 public:
  IntersectionForm() = default;

  IntersectionForm(RationalMatrix matrix, std::vector<std::string> labels, Weight weight)
      : matrix_(std::move(matrix)), labels_(std::move(labels)), weight_(weight) {
    matrix_.require_square("intersection form");
    if (labels_.size() != matrix_.rows())
      throw DimensionError("intersection form has " + std::to_string(labels_.size()) + " labels for a " +
                           matrix_.shape() + " matrix");
    const RationalMatrix t = matrix_.transpose();
    if (weight_ == Weight::Two && !(t == matrix_)) throw DomainError("weight-2 pairing must be symmetric");
    if (weight_ == Weight::One && !(t == -matrix_)) throw DomainError("weight-1 pairing must be antisymmetric");
  }

  const RationalMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Weight weight() const noexcept { return weight_; }
  std::size_t rank() const noexcept { return matrix_.rows(); }

  /// <x, y> = x^T J y
  Rational pair(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != rank() || y.size() != rank())
      throw DimensionError("pairing vectors of length " + std::to_string(x.size()) + " and " +
                           std::to_string(y.size()) + " in rank " + std::to_string(rank()));
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += x[i] * matrix_(i, j) * y[j];
    }
    return s;
  }

 private:
  RationalMatrix matrix_;
  std::vector<std::string> labels_;
  Weight weight_ = Weight::Two;
};

/// Local system lattice of a curve fibre: the basis and its pairing.
struct PairedLattice {
  IntersectionForm form;

  std::size_t rank() const noexcept { return form.rank(); }
  Weight weight() const noexcept { return form.weight(); }
  const std::vector<std::string>& labels() const noexcept { return form.labels(); }

  /// Standard symplectic lattice with <e_1, e_2> = +1.
  static PairedLattice symplectic_plane(std::string first, std::string second) {
    return {IntersectionForm(RationalMatrix{{0, 1}, {-1, 0}}, {std::move(first), std::move(second)}, Weight::One)};
  }
};

/// Coordinates of a cycle in a lattice basis.
struct CycleVector {
  std::vector<Rational> coords;

  CycleVector() = default;
  explicit CycleVector(std::vector<Rational> c) : coords(std::move(c)) {}
  CycleVector(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t size() const noexcept { return coords.size(); }

  friend CycleVector operator+(CycleVector a, const CycleVector& b) {
    if (a.size() != b.size()) throw DimensionError("adding cycles of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend CycleVector operator-(CycleVector a, const CycleVector& b) {
    if (a.size() != b.size()) throw DimensionError("subtracting cycles of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend CycleVector operator*(const Rational& s, CycleVector a) {
    for (auto& v : a.coords) v *= s;
    return a;
  }
  friend bool operator==(const CycleVector&, const CycleVector&) = default;
};

}  // namespace g2mono
