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
 * @file transvection.hpp
 * @brief Picard-Lefschetz local monodromy of a nodal degeneration.
 *
 * T(x) = x + s * sum_i <x, d_i> d_i with s = -1 for Sign::Minus. With the
 * pairing <e_1, e_2> = +1 the minus sign gives the usual positive Dehn
 * twist, e.g. cycles {e_1, e_1} produce [[1, 2], [0, 1]].
 *
 * An I_n fibre contributes its vanishing cycle n times.
 */

#include <span>
#include <string>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/plmono/lattice.hpp"

namespace g2mono {

enum class Sign { Plus, Minus };

inline RationalMatrix pl_transvection(const PairedLattice& lattice, std::span<const CycleVector> cycles,
                                      Sign sign = Sign::Minus) {
  if (lattice.weight() != Weight::One)
    throw DomainError("Picard-Lefschetz transvections need a weight-1 (alternating) lattice");
  const std::size_t n = lattice.rank();
  for (const auto& c : cycles)
    if (c.size() != n)
      throw DimensionError("vanishing cycle of length " + std::to_string(c.size()) + " in a rank " +
                           std::to_string(n) + " lattice");
  const Rational s = sign == Sign::Minus ? Rational(-1) : Rational(1);
  RationalMatrix t = RationalMatrix::identity(n);
  std::vector<Rational> basis(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    basis.assign(n, Rational(0));
    basis[j] = 1;
    for (const auto& d : cycles) {
      const Rational f = s * lattice.form.pair(basis, d.coords);
      if (f == 0) continue;
      for (std::size_t i = 0; i < n; ++i) t(i, j) += f * d.coords[i];
    }
  }
  return t;
}

inline RationalMatrix pl_transvection(const PairedLattice& lattice, std::initializer_list<CycleVector> cycles,
                                      Sign sign = Sign::Minus) {
  return pl_transvection(lattice, std::span<const CycleVector>(cycles.begin(), cycles.size()), sign);
}

/// Log of a nodal monodromy: t - I, valid when (t - I)^2 = 0.
inline RationalMatrix nodal_log(const RationalMatrix& t) {
  t.require_square("nodal_log");
  RationalMatrix n = t - RationalMatrix::identity(t.rows());
  if (!(n * n).is_zero()) throw DomainError("not a nodal (index-2 unipotent) matrix");
  return n;
}

/// True iff every column of `image_of` lies in the span of `cycles`.
inline bool image_spanned_by(const RationalMatrix& image_of, std::span<const CycleVector> cycles) {
  const std::size_t n = image_of.rows();
  RationalMatrix gens(n, cycles.size());
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (cycles[k].size() != n) throw DimensionError("cycle length does not match matrix");
    for (std::size_t i = 0; i < n; ++i) gens(i, k) = cycles[k].coords[i];
  }
  RationalMatrix both(n, cycles.size() + image_of.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < cycles.size(); ++k) both(i, k) = gens(i, k);
    for (std::size_t k = 0; k < image_of.cols(); ++k) both(i, cycles.size() + k) = image_of(i, k);
  }
  return rank(both) == rank(gens);
}

}  // namespace g2mono
