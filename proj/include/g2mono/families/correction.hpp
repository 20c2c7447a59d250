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
 * @file correction.hpp
 * @brief Making a 2-cycle transcendental by adding fibre components.
 *
 * A cycle C built over a path meets the components of the singular fibres
 * at the path's ends. The corrected cycle C~ = C + sum_u c_u U must pair to
 * zero with every constrained class (the listed components and the zero
 * section). Each equation reads
 *
 *   raw(K) + sum_u c_u (U . K) = 0.
 *
 * The unknown set fixes the gauge: fibre classes pair to zero with all
 * their own components, so without a gauge the system is underdetermined.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

inline constexpr const char* kZeroSection = "sigma";

/**
 * Components of one I_n fibre, a cycle of n rational curves. Components
 * have self-intersection -2 and meet their two neighbours once; for n = 2
 * the two components meet in two points. An I_1 fibre is a single nodal
 * curve, recorded with self-intersection 0.
 */
struct ComponentChain {
  unsigned n = 0;
  std::vector<std::string> labels;  ///< labels[k] is the k-th curve around the cycle
  std::size_t section_hits = 0;     ///< index of the component meeting the zero section

  ComponentChain() = default;
  ComponentChain(std::vector<std::string> component_labels, std::size_t section_component)
      : n(static_cast<unsigned>(component_labels.size())),
        labels(std::move(component_labels)),
        section_hits(section_component) {
    if (labels.empty()) throw DomainError("component chain needs at least one component");
    if (section_hits >= labels.size()) throw DomainError("zero section must meet a component of the chain");
  }

  RationalMatrix adjacency() const {
    RationalMatrix a(n, n);
    if (n == 1) return a;
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = -2;
      a(i, (i + 1) % n) += 1;
      a((i + 1) % n, i) += 1;
    }
    return a;
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  }
};

struct CorrectionSolution {
  std::vector<std::pair<std::string, Rational>> coefficients;  ///< in the order of the unknowns

  Rational coefficient(const std::string& label) const {
    for (const auto& [l, c] : coefficients)
      if (l == label) return c;
    return Rational(0);
  }

  /// e.g. "C + 1/2*D+ - 1/2*E-"
  std::string describe(const std::string& cycle_name) const {
    std::string s = cycle_name;
    for (const auto& [label, c] : coefficients) {
      if (c == 0) continue;
      const Rational mag = abs(c);
      s += c < 0 ? " - " : " + ";
      if (mag != 1) s += to_string(mag) + "*";
      s += label;
    }
    return s;
  }
};

/// Intersection number of two classes among the chains and the zero section.
inline Rational class_pairing(const std::vector<ComponentChain>& chains, const std::string& a, const std::string& b) {
  const bool a_sigma = a == kZeroSection;
  const bool b_sigma = b == kZeroSection;
  if (a_sigma && b_sigma) throw DomainError("zero section self-intersection is not used");
  if (a_sigma || b_sigma) {
    const std::string& comp = a_sigma ? b : a;
    for (const auto& ch : chains)
      if (const auto k = ch.index_of(comp)) return Rational(*k == ch.section_hits ? 1 : 0);
    throw DomainError("unknown fibre component '" + comp + "'");
  }
  std::optional<std::size_t> ca, cb;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    if (chains[c].index_of(a)) ca = c;
    if (chains[c].index_of(b)) cb = c;
  }
  if (!ca) throw DomainError("unknown fibre component '" + a + "'");
  if (!cb) throw DomainError("unknown fibre component '" + b + "'");
  if (*ca != *cb) return Rational(0);
  const auto& ch = chains[*ca];
  return ch.adjacency()(*ch.index_of(a), *ch.index_of(b));
}

/**
 * Solves for the correction coefficients. Every key of `raw_intersections`
 * is a constrained class; the zero section is always constrained (raw
 * pairing 0 unless given). Throws DomainError when the system is
 * inconsistent or the unknowns do not pin down a unique solution.
 */
inline CorrectionSolution correction_solve(const std::map<std::string, Rational>& raw_intersections,
                                           const std::vector<ComponentChain>& chains,
                                           const std::vector<std::string>& unknowns) {
  std::vector<std::string> constrained;
  for (const auto& [k, v] : raw_intersections) constrained.push_back(k);
  if (!raw_intersections.contains(kZeroSection)) constrained.push_back(kZeroSection);
  for (const auto& u : unknowns) {
    bool found = false;
    for (const auto& ch : chains) found = found || ch.index_of(u).has_value();
    if (!found) throw DomainError("unknown '" + u + "' is not a fibre component");
  }
  RationalMatrix a(constrained.size(), unknowns.size());
  RationalMatrix b(constrained.size(), 1);
  for (std::size_t i = 0; i < constrained.size(); ++i) {
    const auto it = raw_intersections.find(constrained[i]);
    b(i, 0) = it == raw_intersections.end() ? Rational(0) : Rational(-it->second);
    for (std::size_t j = 0; j < unknowns.size(); ++j) a(i, j) = class_pairing(chains, unknowns[j], constrained[i]);
  }
  const LinearSolution sol = solve_linear(a, b);
  if (std::holds_alternative<Inconsistent>(sol)) throw DomainError("correction system is inconsistent");
  if (std::holds_alternative<AffineSolution>(sol))
    throw DomainError("correction system is underdetermined for the chosen unknowns (fix a gauge)");
  const RationalMatrix& x = std::get<UniqueSolution>(sol).x;
  CorrectionSolution out;
  for (std::size_t j = 0; j < unknowns.size(); ++j) out.coefficients.emplace_back(unknowns[j], x(j, 0));
  return out;
}

/// Pairing of the corrected cycle with `cls`, evaluated directly.
inline Rational corrected_pairing(const std::map<std::string, Rational>& raw_intersections,
                                  const std::vector<ComponentChain>& chains, const CorrectionSolution& sol,
                                  const std::string& cls) {
  const auto it = raw_intersections.find(cls);
  Rational s = it == raw_intersections.end() ? Rational(0) : it->second;
  for (const auto& [label, c] : sol.coefficients) s += c * class_pairing(chains, label, cls);
  return s;
}

}  // namespace g2mono
