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
 * @file root_system.hpp
 * @brief Adjoint action, Killing form and rank-two root systems.
 *
 * Given a closed span g and commuting t1, t2 in g whose adjoint actions are
 * diagonalizable over Q, g splits into joint eigenspaces. The eigenvalue
 * pair on a joint eigenspace is a root (alpha(t1), alpha(t2)); the pair
 * (0, 0) is the Cartan part. Root lengths use the Killing form restricted
 * to span(t1, t2), inverted:
 *
 *   <alpha, beta> = alpha^T K^{-1} beta,  K_ab = tr(ad t_a ad t_b).
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/exact/roots.hpp"
#include "g2mono/lie/closure.hpp"
#include "g2mono/lie/lie_span.hpp"

namespace g2mono {

/// Matrix of x -> [t, x] in the span's basis coordinates.
inline RationalMatrix ad_matrix(const RationalMatrix& t, const LieSpan& span) {
  if (!span.contains(t)) throw DomainError("ad_matrix: element lies outside the span");
  const std::size_t d = span.dimension();
  RationalMatrix ad(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const RationalMatrix b = bracket(t, span.basis()[j]);
    if (!span.contains(b)) throw DomainError("ad_matrix: bracket leaves the span (span not closed)");
    const auto c = span.coordinates(b);
    for (std::size_t i = 0; i < d; ++i) ad(i, j) = c[i];
  }
  return ad;
}

/// tr(a b) without forming the product.
inline Rational trace_of_product(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_of_product shape mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && b(k, i) != 0) s += a(i, k) * b(k, i);
  return s;
}

/// Killing form kappa(b_i, b_j) = tr(ad b_i ad b_j) on the span's basis.
inline RationalMatrix killing_gram(const LieSpan& span) {
  if (!span.closed() && !is_bracket_closed(span)) throw DomainError("killing_gram: span is not bracket-closed");
  const std::size_t d = span.dimension();
  std::vector<RationalMatrix> ads;
  ads.reserve(d);
  for (const auto& b : span.basis()) ads.push_back(ad_matrix(b, span));
  RationalMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) g(i, j) = g(j, i) = trace_of_product(ads[i], ads[j]);
  return g;
}

/// Eigenvalue -> algebraic multiplicity, for the rational eigenvalues.
using Spectrum = std::map<Rational, unsigned>;

inline Spectrum rational_spectrum(const RationalMatrix& a) {
  Spectrum s;
  for (const auto& [r, m] : rational_roots(charpoly(a))) s[r] = m;
  return s;
}

/// Diagonalizable over Q: minimal polynomial squarefree and split over Q.
/// Equivalently, the squarefree part of the characteristic polynomial splits
/// over Q and annihilates a; this avoids high powers of a.
inline bool diagonalizable_over_rationals(const RationalMatrix& a) {
  a.require_square("diagonalizable_over_rationals");
  const RationalPolynomial cp = charpoly(a);
  const RationalPolynomial radical = cp / gcd(cp, cp.derivative());
  if (!splits_over_rationals(radical)) return false;
  const auto roots = rational_roots(radical);
  const RationalMatrix id = RationalMatrix::identity(a.rows());
  RationalMatrix acc = id;
  for (const auto& [r, m] : roots) acc = acc * (a - r * id);
  return acc.is_zero();
}

struct CartanPair {
  RationalMatrix t1;
  RationalMatrix t2;
};

struct Root {
  Rational on_t1;
  Rational on_t2;
  unsigned multiplicity = 1;

  bool is_zero() const { return on_t1 == 0 && on_t2 == 0; }
  friend bool operator==(const Root&, const Root&) = default;
};

struct RootDatum {
  std::vector<Root> roots;  ///< nonzero joint eigenvalues, sorted
  std::size_t cartan_dim = 0;

  std::size_t root_space_dimension() const {
    std::size_t s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
  }
};

namespace detail {

inline RationalMatrix columns_from(const std::vector<std::vector<Rational>>& vecs, std::size_t n) {
  RationalMatrix m(n, vecs.size());
  for (std::size_t k = 0; k < vecs.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, k) = vecs[k][i];
  return m;
}

inline RationalMatrix shifted(RationalMatrix a, const Rational& lambda) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
  return a;
}

}  // namespace detail

/**
 * Joint eigenspace decomposition of the span under ad(t1), ad(t2).
 * Throws DomainError when the pair does not commute or either adjoint
 * action is not diagonalizable over Q.
 */
inline RootDatum simultaneous_root_decomposition(const CartanPair& pair, const LieSpan& span) {
  if (!bracket(pair.t1, pair.t2).is_zero()) throw DomainError("Cartan pair does not commute");
  const RationalMatrix ad1 = ad_matrix(pair.t1, span);
  const RationalMatrix ad2 = ad_matrix(pair.t2, span);
  if (!diagonalizable_over_rationals(ad1) || !diagonalizable_over_rationals(ad2))
    throw DomainError("adjoint action of the Cartan pair is not diagonalizable over Q");
  const std::size_t d = span.dimension();
  std::map<std::pair<Rational, Rational>, unsigned> joint;
  for (const auto& [lambda, m1] : rational_spectrum(ad1)) {
    const auto v = kernel(detail::shifted(ad1, lambda));
    const RationalMatrix basis = detail::columns_from(v, d);
    // ad2 preserves this eigenspace; express its restriction in `basis`.
    const auto sol = solve_linear(basis, ad2 * basis);
    const auto* restricted = std::get_if<UniqueSolution>(&sol);
    if (!restricted) throw DomainError("ad(t2) does not preserve an eigenspace of ad(t1)");
    for (const auto& [mu, m2] : rational_spectrum(restricted->x)) {
      const std::size_t dim = kernel(detail::shifted(restricted->x, mu)).size();
      joint[{lambda, mu}] += static_cast<unsigned>(dim);
    }
  }
  RootDatum datum;
  std::size_t total = 0;
  for (const auto& [key, dim] : joint) {
    total += dim;
    if (key.first == 0 && key.second == 0) {
      datum.cartan_dim = dim;
    } else {
      datum.roots.push_back({key.first, key.second, dim});
    }
  }
  if (total != d) throw DomainError("joint eigenspaces do not exhaust the span");
  return datum;
}

/// 2x2 Killing restriction K_ab = tr(ad t_a ad t_b).
inline RationalMatrix killing_on_cartan(const CartanPair& pair, const LieSpan& span) {
  const RationalMatrix a1 = ad_matrix(pair.t1, span);
  const RationalMatrix a2 = ad_matrix(pair.t2, span);
  const Rational k12 = trace_of_product(a1, a2);
  return RationalMatrix{{trace_of_product(a1, a1), k12}, {k12, trace_of_product(a2, a2)}};
}

enum class RootSystemType { A1xA1, A2, B2, G2, Unknown };

inline std::string to_string(RootSystemType t) {
  switch (t) {
    case RootSystemType::A1xA1: return "A1xA1";
    case RootSystemType::A2: return "A2";
    case RootSystemType::B2: return "B2";
    case RootSystemType::G2: return "G2";
    case RootSystemType::Unknown: break;
  }
  return "unknown";
}

/// Inner products of roots under the inverse Killing restriction.
class RootGeometry {
 public:
  RootGeometry(const RootDatum& datum, const RationalMatrix& killing_on_cartan) : datum_(datum) {
    if (killing_on_cartan.rows() != 2 || killing_on_cartan.cols() != 2)
      throw DimensionError("Killing restriction must be 2x2, got " + killing_on_cartan.shape());
    if (det(killing_on_cartan) == 0) throw DomainError("degenerate Killing restriction");
    inv_ = inverse(killing_on_cartan);
  }

  Rational inner(const Root& a, const Root& b) const {
    return a.on_t1 * (inv_(0, 0) * b.on_t1 + inv_(0, 1) * b.on_t2) +
           a.on_t2 * (inv_(1, 0) * b.on_t1 + inv_(1, 1) * b.on_t2);
  }

  /// Distinct squared lengths, ascending.
  std::vector<Rational> squared_lengths() const {
    std::set<Rational> s;
    for (const auto& r : datum_.roots) s.insert(inner(r, r));
    return {s.begin(), s.end()};
  }

  /// Longest over shortest squared length; nullopt without roots or with a non-positive length.
  std::optional<Rational> length_ratio() const {
    const auto l = squared_lengths();
    if (l.empty() || l.front() <= 0) return std::nullopt;
    return Rational(l.back() / l.front());
  }

 private:
  RootDatum datum_;
  RationalMatrix inv_;
};

/**
 * Rank-two classification by root count and length ratio:
 * 12 roots, ratio 3 -> G2; 6, ratio 1 -> A2; 8, ratio 2 -> B2;
 * 4 roots in two orthogonal pairs -> A1xA1. Anything else, including root
 * multiplicities above one or roots not closed under negation, is Unknown.
 */
inline RootSystemType identify_rank2_type(const RootDatum& datum, const RationalMatrix& killing_on_cartan) {
  if (datum.cartan_dim != 2) throw DomainError("identify_rank2_type needs a 2-dimensional Cartan part");
  const RootGeometry geo(datum, killing_on_cartan);
  const auto& roots = datum.roots;
  for (const auto& r : roots) {
    if (r.multiplicity != 1) return RootSystemType::Unknown;
    const Root neg{-r.on_t1, -r.on_t2, 1};
    if (std::find(roots.begin(), roots.end(), neg) == roots.end()) return RootSystemType::Unknown;
  }
  const auto ratio = geo.length_ratio();
  if (!ratio) return RootSystemType::Unknown;
  const std::size_t count = roots.size();
  if (count == 12 && *ratio == 3) return RootSystemType::G2;
  if (count == 8 && *ratio == 2) return RootSystemType::B2;
  if (count == 6 && *ratio == 1) return RootSystemType::A2;
  if (count == 4) {
    // two +- pairs, orthogonal to each other
    const Root& a = roots.front();
    std::size_t off_line = 0;
    for (const auto& b : roots) {
      if (a.on_t1 * b.on_t2 == a.on_t2 * b.on_t1) continue;
      ++off_line;
      if (geo.inner(a, b) != 0) return RootSystemType::Unknown;
    }
    return off_line == 2 ? RootSystemType::A1xA1 : RootSystemType::Unknown;
  }
  return RootSystemType::Unknown;
}

}  // namespace g2mono
