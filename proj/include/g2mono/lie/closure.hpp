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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/lie/lie_span.hpp"

namespace g2mono {

inline RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) { return commutator(a, b); }

/// Thrown when a closure outgrows its cap; carries the span built so far.
class ClosureCapExceeded : public Error {
 public:
  ClosureCapExceeded(LieSpan partial, std::size_t cap)
      : Error("Lie closure exceeded dimension cap " + std::to_string(cap)), partial_(std::move(partial)) {}
  const LieSpan& partial() const noexcept { return partial_; }

 private:
  LieSpan partial_;
};

/**
 * Smallest bracket-closed subspace containing the generators.
 *
 * Worklist saturation: basis elements are bracketed in (older, newer)
 * order, i.e. for each j every i < j, and any bracket outside the running
 * span is appended. The basis is therefore deterministic for a given
 * generator order; the row space does not depend on it.
 */
inline LieSpan lie_closure(std::span<const RationalMatrix> generators, std::size_t dim_cap = 49) {
  if (generators.empty()) return LieSpan(0);
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n) throw DimensionError("lie_closure: generators must share one square size");
  if (dim_cap > n * n) dim_cap = n * n;
  LieSpan span(n);
  for (const auto& g : generators) {
    span.insert(g);
    if (span.dimension() > dim_cap) throw ClosureCapExceeded(span, dim_cap);
  }
  for (std::size_t j = 1; j < span.dimension(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      RationalMatrix b = bracket(span.basis()[i], span.basis()[j]);
      if (span.insert(b) && span.dimension() > dim_cap) throw ClosureCapExceeded(span, dim_cap);
    }
  }
  span.mark_closed();
  return span;
}

inline LieSpan lie_closure(std::initializer_list<RationalMatrix> generators, std::size_t dim_cap = 49) {
  return lie_closure(std::span<const RationalMatrix>(generators.begin(), generators.size()), dim_cap);
}

/// True iff every bracket of basis elements lies in the span.
inline bool is_bracket_closed(const LieSpan& span) {
  const auto& b = span.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!span.contains(bracket(b[i], b[j]))) return false;
  return true;
}

/**
 * The fourteen-element bracket table built from the log-monodromies
 * N-, N+ and Ninf:
 *
 *   Y1 = [N-, N+]    Y2 = [N-, Ninf]   Y3 = [N+, Ninf]
 *   Y4 = [Y1, Y2]    Y5 = [Y1, Y3]     Y6 = [Y2, Y3]     Y7 = [Y2, Y6]
 *   Y8 = [Y5, Y6]    Y9 = [Ninf, Y5]   Y10 = [Ninf, Y9]  Y11 = [Ninf, Y10]
 *   Y12 = [N+, Y11]  Y13 = [Ninf, Y12] Y14 = [N-, Y13]
 *
 * Returned in the order N-, N+, Y1, Y4, ..., Y14 (Y2, Y3 are only
 * intermediates).
 */
struct GeneratorTable {
  static constexpr std::array<const char*, 14> kNames = {"N-", "N+", "Y1",  "Y4",  "Y5",  "Y6",  "Y7",
                                                         "Y8", "Y9", "Y10", "Y11", "Y12", "Y13", "Y14"};
  std::array<RationalMatrix, 14> elements;
  RationalMatrix y2;
  RationalMatrix y3;
};

inline GeneratorTable generator_table(const RationalMatrix& n_minus, const RationalMatrix& n_plus,
                                      const RationalMatrix& n_inf) {
  if (!n_minus.is_square() || n_plus.rows() != n_minus.rows() || n_inf.rows() != n_minus.rows() ||
      !n_plus.is_square() || !n_inf.is_square())
    throw DimensionError("generator_table: inputs must be square of one size");
  const auto& br = bracket;
  const RationalMatrix y1 = br(n_minus, n_plus);
  const RationalMatrix y2 = br(n_minus, n_inf);
  const RationalMatrix y3 = br(n_plus, n_inf);
  const RationalMatrix y4 = br(y1, y2);
  const RationalMatrix y5 = br(y1, y3);
  const RationalMatrix y6 = br(y2, y3);
  const RationalMatrix y7 = br(y2, y6);
  const RationalMatrix y8 = br(y5, y6);
  const RationalMatrix y9 = br(n_inf, y5);
  const RationalMatrix y10 = br(n_inf, y9);
  const RationalMatrix y11 = br(n_inf, y10);
  const RationalMatrix y12 = br(n_plus, y11);
  const RationalMatrix y13 = br(n_inf, y12);
  const RationalMatrix y14 = br(n_minus, y13);
  return {{n_minus, n_plus, y1, y4, y5, y6, y7, y8, y9, y10, y11, y12, y13, y14}, y2, y3};
}

}  // namespace g2mono
