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

// Hodge-number bookkeeping for an elliptic surface X -> E with only I_n
// singular fibres:
//
//   12 chi      = sum of fibre Euler numbers (n for I_n)
//   p_g         = chi - 1 + g(E)
//   b_2         = 2 p_g + 10 chi + 2 g(E)
//   algebraic   = 2 + sum (n - 1)   (zero section, general fibre, extra components)
//   transcendental dimension <= b_2 - algebraic

#include <string>
#include <vector>

#include "g2mono/exact/error.hpp"

namespace g2mono {

/// `count` singular fibres of Kodaira type I_n.
struct FiberType {
  unsigned n = 1;
  unsigned count = 0;
};

struct FiberConfig {
  std::vector<FiberType> fibers;
  unsigned base_genus = 0;

  unsigned euler_number() const {
    unsigned e = 0;
    for (const auto& f : fibers) e += f.n * f.count;
    return e;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& f : fibers) {
      if (!s.empty()) s += ", ";
      s += std::to_string(f.count) + "xI" + std::to_string(f.n);
    }
    return s + "; base genus " + std::to_string(base_genus);
  }
};

struct HodgeSummary {
  long chi = 0;
  long p_g = 0;
  long b2 = 0;
  long algebraic_count = 0;
  long transcendental_bound = 0;

  friend bool operator==(const HodgeSummary&, const HodgeSummary&) = default;
};

inline HodgeSummary hodge_summary(const FiberConfig& config) {
  for (const auto& f : config.fibers)
    if (f.n == 0) throw DomainError("fibre type I_0 is smooth, not singular");
  const unsigned e = config.euler_number();
  if (e % 12 != 0)
    throw DomainError("fibre Euler numbers sum to " + std::to_string(e) + ", not a multiple of 12");
  if (e == 0) throw DomainError("degenerate fibre configuration: Euler characteristic 0");
  HodgeSummary h;
  h.chi = e / 12;
  const long g = config.base_genus;
  h.p_g = h.chi - 1 + g;
  h.b2 = 2 * h.p_g + 10 * h.chi + 2 * g;
  h.algebraic_count = 2;
  for (const auto& f : config.fibers) h.algebraic_count += static_cast<long>(f.count) * (f.n - 1);
  h.transcendental_bound = h.b2 - h.algebraic_count;
  return h;
}

}  // namespace g2mono
