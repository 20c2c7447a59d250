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

#include <span>
#include <utility>
#include <vector>

#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/quasiuni/quasi_unipotent.hpp"

namespace g2mono {

/// True iff the ordered product is the identity. Mismatched sizes give false.
inline bool verify_product_relation(std::span<const RationalMatrix> ms) {
  if (ms.empty()) return true;
  RationalMatrix acc = ms.front();
  if (!acc.is_square()) return false;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    if (!ms[i].is_square() || ms[i].rows() != acc.rows()) return false;
    acc = acc * ms[i];
  }
  return acc.is_identity();
}

inline bool verify_product_relation(std::initializer_list<RationalMatrix> ms) {
  return verify_product_relation(std::span<const RationalMatrix>(ms.begin(), ms.size()));
}

struct FiniteOrderStructure {
  RationalPolynomial minpoly;
  RationalPolynomial charpoly;
  unsigned order = 0;
  bool diagonalizable = false;
  /// (factor, multiplicity) of charpoly over the cyclotomic factors x-1, x+1, x^2+x+1, x^2-x+1, x^2+1
  std::vector<std::pair<RationalPolynomial, unsigned>> cyclotomic_factors;
};

/// Cyclotomic polynomials Phi_d for d | 6 and d = 4.
inline std::vector<RationalPolynomial> small_cyclotomics() {
  return {RationalPolynomial{-1, 1}, RationalPolynomial{1, 1}, RationalPolynomial{1, 1, 1}, RationalPolynomial{1, 0, 1},
          RationalPolynomial{1, -1, 1}};
}

/// Order, minimal/characteristic polynomials and semisimplicity of a finite-order matrix.
inline FiniteOrderStructure family4_eigenstructure(const RationalMatrix& m1, unsigned bound = kDefaultTorsionBound) {
  FiniteOrderStructure s;
  s.order = finite_order(m1, bound);
  if (s.order == 0) throw DomainError("matrix has no finite order within bound " + std::to_string(bound));
  s.minpoly = minpoly(m1);
  s.charpoly = charpoly(m1);
  s.diagonalizable = is_squarefree(s.minpoly);
  for (const auto& phi : small_cyclotomics())
    if (const unsigned k = multiplicity(s.charpoly, phi); k > 0) s.cyclotomic_factors.emplace_back(phi, k);
  return s;
}

}  // namespace g2mono
