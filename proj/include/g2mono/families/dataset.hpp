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
 * @file dataset.hpp
 * @brief Embedded constants of the four isogeny classes of rational
 *        elliptic surfaces with a G2-type monodromy question.
 *
 * Family 1 (y^2 = -x(x-1)(x-l^2)) and family 4 (y^2 = 4x^3 + (3lx+1)^2)
 * carry their local 2x2 data, intersection forms on the 7-dimensional
 * transcendental lattice and 7x7 monodromies. Families 2 and 3 carry only
 * their defining equations.
 *
 * The 7x7 bases are ordered (A1, A2, B1, B2, C~, C~, C~) as in the
 * intersection matrices. Matrices act on columns.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/json_io.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/rational.hpp"
#include "g2mono/families/correction.hpp"
#include "g2mono/families/hodge.hpp"
#include "g2mono/plmono/lattice.hpp"
#include "g2mono/plmono/loop_word.hpp"

namespace g2mono {

/// A printed local monodromy and the vanishing cycles that should produce it.
struct LocalPLData {
  std::string matrix;               ///< key into local_monodromies
  std::vector<std::string> cycles;  ///< keys into vanishing_cycles, repeated n times for I_n
};

/// A local monodromy of the pulled-back family written as a loop word downstairs.
struct PullbackRelation {
  std::string matrix;            ///< key into local_monodromies
  std::string word;              ///< loop word over local_monodromies
  std::string vanishing_cycle;   ///< key into vanishing_cycles spanning the image of its log
};

struct CorrectionProblem {
  std::string cycle;
  std::map<std::string, Rational> raw_intersections;
  std::vector<ComponentChain> chains;
  std::vector<std::string> unknowns;
  std::vector<Rational> printed_solution;  ///< in the order of `unknowns`
};

struct FamilyDataset {
  int id = 0;
  std::string weierstrass_form;
  std::string bad_locus;
  std::string base_change;
  std::optional<FiberConfig> fiber_config;
  std::optional<PairedLattice> local_lattice;
  MatrixTable local_monodromies;
  std::map<std::string, CycleVector> vanishing_cycles;
  std::vector<LocalPLData> pl_data;
  std::vector<PullbackRelation> pullbacks;
  std::vector<CorrectionProblem> corrections;
  std::optional<IntersectionForm> q_form;
  MatrixTable big_monodromies;
  /// Product of these, in order, is the identity (loops rearranged around the punctures).
  std::vector<std::string> product_order;

  bool has_monodromy_data() const { return q_form.has_value(); }
};

namespace detail {

inline std::vector<std::string> seven_cycle_labels(const char* c1, const char* c2, const char* c3) {
  return {"A1", "A2", "B1", "B2", c1, c2, c3};
}

inline FamilyDataset family_one() {
  FamilyDataset f;
  f.id = 1;
  f.weierstrass_form = "y^2 = -x(x-1)(x-l^2), l != 0, +1, -1, inf";
  f.bad_locus = "l in {0, 1, -1, inf}";
  f.base_change = "w^2 = t z(z-1)(z+1) + t^2";
  f.fiber_config = FiberConfig{{{2, 4}, {4, 2}, {8, 1}}, 1};
  f.local_lattice = PairedLattice::symplectic_plane("delta1", "delta2");

  f.local_monodromies["T0"] = RationalMatrix{{1, 2}, {0, 1}};
  f.local_monodromies["T1"] = RationalMatrix{{1, 0}, {-2, 1}};
  f.local_monodromies["T~-1"] = RationalMatrix{{-3, 8}, {-2, 5}};
  f.local_monodromies["T~0"] = RationalMatrix{{1, 4}, {0, 1}};
  f.local_monodromies["T~1"] = RationalMatrix{{1, 0}, {-2, 1}};

  f.vanishing_cycles["at_0"] = CycleVector{1, 0};
  f.vanishing_cycles["at_1"] = CycleVector{0, 1};
  f.vanishing_cycles["at_-1"] = CycleVector{2, 1};
  f.vanishing_cycles["eta1"] = CycleVector{0, 1};
  f.vanishing_cycles["eta2"] = CycleVector{2, 1};

  // I_2 fibres at 0 and 1 downstairs
  f.pl_data = {{"T0", {"at_0", "at_0"}}, {"T1", {"at_1", "at_1"}}};
  f.pullbacks = {{"T~-1", "T0 T1 T0^-1", "at_-1"}, {"T~0", "T0 T0", "at_0"}, {"T~1", "T1", "at_1"}};

  {
    CorrectionProblem c;
    c.cycle = "C-1";
    c.raw_intersections = {{"D-", -1}, {"D+", 1}, {"E-", -1}, {"E+", 1}};
    c.chains = {ComponentChain({"D-", "D+"}, 1), ComponentChain({"E-", "E+"}, 0)};
    c.unknowns = {"D+", "E-"};
    c.printed_solution = {make_rational(1, 2), make_rational(-1, 2)};
    f.corrections.push_back(std::move(c));
  }
  {
    CorrectionProblem c;
    c.cycle = "C0";
    c.raw_intersections = {{"L1", 1}, {"L2", 0}, {"L3", 0}, {"F1", -1}, {"F2", 0}, {"F3", 0}};
    c.chains = {ComponentChain({"L0", "L1", "L2", "L3"}, 0), ComponentChain({"F0", "F1", "F2", "F3"}, 0)};
    c.unknowns = {"L1", "L2", "L3", "F1", "F2", "F3"};
    c.printed_solution = {make_rational(3, 4),  make_rational(1, 2),  make_rational(1, 4),
                          make_rational(-3, 4), make_rational(-1, 2), make_rational(-1, 4)};
    f.corrections.push_back(std::move(c));
  }

  const Rational h = make_rational(-1, 2);
  f.q_form = IntersectionForm(RationalMatrix{{0, 0, 0, 2, 0, 0, 0},
                                             {0, 0, -2, 0, 0, 0, 0},
                                             {0, -2, 0, 0, 0, 0, 0},
                                             {2, 0, 0, 0, 0, 0, 0},
                                             {0, 0, 0, 0, -1, 1, 2},
                                             {0, 0, 0, 0, 1, h, -1},
                                             {0, 0, 0, 0, 2, -1, -1}},
                              seven_cycle_labels("C~-1", "C~0", "C~1"), Weight::Two);

  f.big_monodromies["M+"] = RationalMatrix{{1, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0},
                                           {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                           {0, 0, 0, 0, 0, 0, 1}};
  f.big_monodromies["M-"] = RationalMatrix{{1, 0, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0, 0}, {-1, 0, 1, 0, 0, 0, 0},
                                           {0, -1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                           {0, 0, 0, 0, 0, 0, 1}};
  f.big_monodromies["M0"] = RationalMatrix{{1, 2, -2, -2, 2, -1, -2},  {-2, -3, 6, 2, -4, 3, 6},
                                           {2, 6, -3, -2, 6, -3, -4},  {-2, -2, 2, 1, -2, 1, 2},
                                           {0, 0, -4, 0, 1, -2, -4},   {-4, -4, 4, 4, -4, 1, 4},
                                           {0, -4, 0, 0, -4, 2, 1}};
  f.big_monodromies["Minf"] = RationalMatrix{{0, -4, 1, 0, -4, 2, 2},   {4, 0, 4, 1, -2, 2, 4},
                                             {-1, 4, -3, -2, 6, -3, -4}, {0, -1, 2, 1, -2, 1, 2},
                                             {-4, 0, -4, 0, 1, -2, -4},  {0, 0, 4, 4, -4, 1, 4},
                                             {0, -4, 0, 0, -4, 2, 1}};
  f.product_order = {"M-", "M0", "M+", "Minf"};
  return f;
}

inline FamilyDataset family_two() {
  FamilyDataset f;
  f.id = 2;
  f.weierstrass_form = "y^2 = 4x^3 + ((l + 2)x + l)^2, l != 0, 1, -8, inf";
  f.bad_locus = "l in {0, 1, -8, inf}";
  f.base_change = "w^2 = t f(z) + t^2, f the monic cubic with the finite bad values as roots";
  return f;
}

inline FamilyDataset family_three() {
  FamilyDataset f;
  f.id = 3;
  f.weierstrass_form = "y^2 = 4x^3 + (l^2 + 6l - 11)x^2 + (10 - 10l)x + 4l - 3, l != 0, inf, l^2 + 11l - 1 != 0";
  f.bad_locus = "l in {0, inf} or l^2 + 11l - 1 = 0";
  f.base_change = "w^2 = t f(z) + t^2, f the monic cubic with the finite bad values as roots";
  return f;
}

inline FamilyDataset family_four() {
  FamilyDataset f;
  f.id = 4;
  f.weierstrass_form = "y^2 = 4x^3 + (3lx + 1)^2, l != inf, l^3 != 1";
  f.bad_locus = "l = inf or l^3 = 1";
  f.base_change = "w^2 = t(z^3 - 1) + t^2";
  f.fiber_config = FiberConfig{{{1, 6}, {18, 1}}, 1};
  f.local_lattice = PairedLattice::symplectic_plane("delta", "eta");

  f.local_monodromies["T1"] = RationalMatrix{{1, 1}, {0, 1}};
  f.local_monodromies["Tr"] = RationalMatrix{{1, 0}, {-1, 1}};
  f.local_monodromies["Trbar"] = RationalMatrix{{2, 1}, {-1, 0}};

  f.vanishing_cycles["at_1"] = CycleVector{1, 0};
  f.vanishing_cycles["at_r"] = CycleVector{0, 1};
  f.vanishing_cycles["at_rbar"] = CycleVector{1, -1};

  f.pl_data = {{"T1", {"at_1"}}, {"Tr", {"at_r"}}, {"Trbar", {"at_rbar"}}};

  f.q_form = IntersectionForm(RationalMatrix{{0, 0, 0, -1, 0, 0, 0},
                                             {0, 0, 1, 0, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0, 0},
                                             {-1, 0, 0, 0, 0, 0, 0},
                                             {0, 0, 0, 0, -2, 1, -1},
                                             {0, 0, 0, 0, 1, -2, 1},
                                             {0, 0, 0, 0, -1, 1, -2}},
                              seven_cycle_labels("C~1", "C~r", "C~rbar"), Weight::Two);

  f.big_monodromies["M1"] = RationalMatrix{{1, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0}, {-1, 0, 0, 0, 0, 0, 0},
                                           {0, -1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                           {0, 0, 0, 0, 0, 0, 1}};
  return f;
}

}  // namespace detail

/// Embedded constants for family 1..4; throws UsageError otherwise.
inline FamilyDataset family_dataset(int id) {
  switch (id) {
    case 1: return detail::family_one();
    case 2: return detail::family_two();
    case 3: return detail::family_three();
    case 4: return detail::family_four();
    default: break;
  }
  throw UsageError("family id must be 1, 2, 3 or 4, got " + std::to_string(id));
}

/// Dataset export in the shared matrix JSON format.
inline Json dataset_to_json(const FamilyDataset& f) {
  Json j;
  j["family"] = f.id;
  j["weierstrass_form"] = f.weierstrass_form;
  j["bad_locus"] = f.bad_locus;
  j["base_change"] = f.base_change;
  if (f.fiber_config) {
    Json fibers = Json::array();
    for (const auto& ft : f.fiber_config->fibers) fibers.push_back({{"type", "I" + std::to_string(ft.n)}, {"count", ft.count}});
    j["fiber_config"] = {{"fibers", fibers}, {"base_genus", f.fiber_config->base_genus}};
  }
  if (f.local_lattice) {
    j["local_lattice"] = {{"labels", f.local_lattice->labels()},
                          {"pairing", matrix_to_json(f.local_lattice->form.matrix())},
                          {"weight", static_cast<int>(f.local_lattice->weight())}};
  }
  if (!f.local_monodromies.empty()) {
    Json m;
    for (const auto& [name, mat] : f.local_monodromies) m[name] = matrix_to_json(mat);
    j["local_monodromies"] = std::move(m);
  }
  if (!f.vanishing_cycles.empty()) {
    Json m;
    for (const auto& [name, c] : f.vanishing_cycles) m[name] = vector_to_json(c.coords);
    j["vanishing_cycles"] = std::move(m);
  }
  if (f.q_form) {
    j["q_form"] = {{"labels", f.q_form->labels()}, {"matrix", matrix_to_json(f.q_form->matrix())}};
  }
  if (!f.big_monodromies.empty()) {
    Json m;
    for (const auto& [name, mat] : f.big_monodromies) m[name] = matrix_to_json(mat);
    j["big_monodromies"] = std::move(m);
  }
  if (!f.product_order.empty()) j["product_order"] = f.product_order;
  return j;
}

}  // namespace g2mono
