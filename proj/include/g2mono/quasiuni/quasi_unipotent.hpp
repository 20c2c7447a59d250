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
 * @file quasi_unipotent.hpp
 * @brief Calculus of quasi-unipotent monodromies.
 *
 * A matrix M is quasi-unipotent when M^k is unipotent for some k >= 1.
 * Its logarithm is (1/k) log(M^k), where the log of a unipotent matrix is
 * the finite Mercator series in M^k - I. The Jordan-Chevalley factors
 * follow: M_u = exp(N), M_s = M M_u^{-1}, with M_s^k = I.
 *
 * Quasi-unipotency is detected by searching k = 1, 2, ... with an exact
 * nilpotency test, not by factoring the characteristic polynomial.
 */

#include <cstddef>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/plmono/lattice.hpp"
#include "g2mono/plmono/transvection.hpp"

namespace g2mono {

inline constexpr unsigned kDefaultTorsionBound = 60;

struct UnipotencyProfile {
  unsigned torsion_order = 1;     ///< smallest k with M^k unipotent
  unsigned unipotency_index = 1;  ///< smallest m with (M^k - I)^m = 0

  friend bool operator==(const UnipotencyProfile&, const UnipotencyProfile&) = default;
};

struct JordanChevalleyPair {
  RationalMatrix semisimple_part;
  RationalMatrix unipotent_part;
  RationalMatrix log_unipotent;
};

/// Smallest m >= 1 with n^m = 0, or 0 if n is not nilpotent.
inline unsigned nilpotency_index(const RationalMatrix& n) {
  n.require_square("nilpotency_index");
  RationalMatrix p = n;
  for (unsigned m = 1; m <= n.rows() + 1; ++m) {
    if (p.is_zero()) return m;
    p = p * n;
  }
  return 0;
}

inline bool is_nilpotent(const RationalMatrix& n) { return nilpotency_index(n) != 0; }

inline bool is_unipotent(const RationalMatrix& u) {
  return is_nilpotent(u - RationalMatrix::identity(u.rows()));
}

inline UnipotencyProfile unipotency_profile(const RationalMatrix& m, unsigned k_max = kDefaultTorsionBound) {
  m.require_square("unipotency_profile");
  if (det(m) == 0) throw DomainError("unipotency_profile: matrix is singular");
  const RationalMatrix id = RationalMatrix::identity(m.rows());
  RationalMatrix p = m;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (const unsigned idx = nilpotency_index(p - id); idx != 0) return {k, idx};
    p = p * m;
  }
  throw DomainError("not quasi-unipotent within bound " + std::to_string(k_max));
}

/// Checks the profile's defining identities against m.
inline bool profile_holds(const RationalMatrix& m, const UnipotencyProfile& profile) {
  if (!m.is_square() || profile.torsion_order == 0 || profile.unipotency_index == 0) return false;
  const RationalMatrix n = power(m, profile.torsion_order) - RationalMatrix::identity(m.rows());
  return nilpotency_index(n) == profile.unipotency_index;
}

/// sum_{j>=1} (-1)^{j+1} (u - I)^j / j, a finite sum for unipotent u.
inline RationalMatrix log_unipotent(const RationalMatrix& u) {
  u.require_square("log_unipotent");
  const RationalMatrix n = u - RationalMatrix::identity(u.rows());
  if (!is_nilpotent(n)) throw DomainError("log_unipotent: matrix is not unipotent");
  RationalMatrix acc = RationalMatrix::zero(u.rows(), u.cols());
  RationalMatrix p = n;
  for (long j = 1; !p.is_zero(); ++j) {
    acc += make_rational(j % 2 ? 1 : -1, j) * p;
    p = p * n;
  }
  return acc;
}

/// sum_{j>=0} n^j / j!, a finite sum for nilpotent n.
inline RationalMatrix exp_nilpotent(const RationalMatrix& n) {
  n.require_square("exp_nilpotent");
  if (!is_nilpotent(n)) throw DomainError("exp_nilpotent: matrix is not nilpotent");
  RationalMatrix acc = RationalMatrix::identity(n.rows());
  RationalMatrix term = n;
  for (long j = 1; !term.is_zero(); ++j) {
    acc += term;
    term = make_rational(1, j + 1) * (term * n);
  }
  return acc;
}

/// (1/k) log(M^k) for the profile's torsion order k.
inline RationalMatrix log_quasi(const RationalMatrix& m, const UnipotencyProfile& profile) {
  if (!profile_holds(m, profile)) throw DomainError("log_quasi: profile does not hold for this matrix");
  return make_rational(1, profile.torsion_order) * log_unipotent(power(m, profile.torsion_order));
}

inline JordanChevalleyPair jordan_chevalley(const RationalMatrix& m, const UnipotencyProfile& profile) {
  const RationalMatrix n = log_quasi(m, profile);
  RationalMatrix mu = exp_nilpotent(n);
  RationalMatrix ms = m * inverse(mu);
  if (!(ms * mu == mu * ms)) throw DomainError("jordan_chevalley: factors do not commute");
  if (!power(ms, profile.torsion_order).is_identity())
    throw DomainError("jordan_chevalley: semisimple part does not have order dividing " +
                      std::to_string(profile.torsion_order));
  return {std::move(ms), std::move(mu), n};
}

/// m^T q m = q, exactly. Non-conformable inputs are reported as false.
inline bool preserves_form(const RationalMatrix& m, const RationalMatrix& q) {
  if (!m.is_square() || !q.is_square() || m.rows() != q.rows()) return false;
  return m.transpose() * q * m == q;
}

inline bool preserves_form(const RationalMatrix& m, const IntersectionForm& q) {
  return preserves_form(m, q.matrix());
}

/// Smallest r in [1, bound] with m^r = I, or 0.
inline unsigned finite_order(const RationalMatrix& m, unsigned bound = kDefaultTorsionBound) {
  m.require_square("finite_order");
  RationalMatrix p = m;
  for (unsigned r = 1; r <= bound; ++r) {
    if (p.is_identity()) return r;
    p = p * m;
  }
  return 0;
}

}  // namespace g2mono
