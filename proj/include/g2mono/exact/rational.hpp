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
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Scalars are GMP rationals (`mpq_class`). GMP keeps every value in
 * canonical form: positive denominator, numerator and denominator coprime,
 * zero stored as 0/1. The only way to break that is the two-argument
 * constructor, so construct fractions through make_rational().
 *
 * Text form is "p/q", or "p" when the denominator is 1.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "g2mono/exact/error.hpp"

namespace g2mono {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer zn(n, 10);
  Integer zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(zn, zd);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace g2mono
