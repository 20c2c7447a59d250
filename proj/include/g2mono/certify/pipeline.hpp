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
 * @file pipeline.hpp
 * @brief End-to-end verification of one family, one CheckResult per claim.
 *
 * Checks run in a fixed order. Later stages read intermediate objects
 * (logarithms, the closure, the Cartan pair) computed by earlier ones; when
 * such an object is unavailable the dependent check fails with a
 * "prerequisite" witness instead of aborting the run.
 */

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2mono/certify/certificate.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/roots.hpp"
#include "g2mono/families/correction.hpp"
#include "g2mono/families/dataset.hpp"
#include "g2mono/families/hodge.hpp"
#include "g2mono/families/monodromy.hpp"
#include "g2mono/lie/closure.hpp"
#include "g2mono/lie/root_system.hpp"
#include "g2mono/plmono/loop_word.hpp"
#include "g2mono/plmono/transvection.hpp"
#include "g2mono/quasiuni/quasi_unipotent.hpp"

namespace g2mono {

struct PipelineOptions {
  std::optional<std::set<std::string>> selection;  ///< nullopt runs everything
  unsigned k_max = kDefaultTorsionBound;
};

/// Outcome of a single check body; `witness` is mandatory when `pass` is false.
struct Verdict {
  bool pass = false;
  std::optional<Json> witness;

  static Verdict ok(std::optional<Json> w = std::nullopt) { return {true, std::move(w)}; }
  static Verdict bad(Json w) { return {false, std::move(w)}; }
};

namespace detail {

class CheckRecorder {
 public:
  explicit CheckRecorder(Certificate& cert) : cert_(cert) {}

  void run(std::string id, std::string description, std::string anchor, const std::function<Verdict()>& body) {
    CheckResult r{std::move(id), std::move(description), std::move(anchor), CheckStatus::Fail, std::nullopt};
    try {
      Verdict v = body();
      r.status = v.pass ? CheckStatus::Pass : CheckStatus::Fail;
      r.witness = std::move(v.witness);
      if (!v.pass && !r.witness) r.witness = Json{{"error", "check failed"}};
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.witness = Json{{"error", e.what()}};
    }
    cert_.checks.push_back(std::move(r));
  }

  void not_provided(std::string id, std::string description, std::string anchor) {
    cert_.checks.push_back(
        {std::move(id), std::move(description), std::move(anchor), CheckStatus::NotProvided, std::nullopt});
  }

 private:
  Certificate& cert_;
};

template <class T>
const T& need(const std::optional<T>& x, const char* what) {
  if (!x) throw DomainError(std::string("prerequisite failed: ") + what + " unavailable");
  return *x;
}

inline const RationalMatrix& lookup(const MatrixTable& table, const std::string& name) {
  const auto it = table.find(name);
  if (it == table.end()) throw DomainError("dataset has no matrix named '" + name + "'");
  return it->second;
}

inline Json spectrum_to_json(const Spectrum& s) {
  Json j = Json::object();
  for (const auto& [lambda, m] : s) j[to_string(lambda)] = m;
  return j;
}

inline Json profile_to_json(const UnipotencyProfile& p) {
  return {{"torsion_order", p.torsion_order}, {"unipotency_index", p.unipotency_index}};
}

inline Json hodge_to_json(const HodgeSummary& h) {
  return {{"chi", h.chi},
          {"p_g", h.p_g},
          {"b2", h.b2},
          {"algebraic", h.algebraic_count},
          {"transcendental_bound", h.transcendental_bound}};
}

inline std::vector<CycleVector> cycles_of(const FamilyDataset& f, const std::vector<std::string>& names) {
  std::vector<CycleVector> out;
  for (const auto& n : names) {
    const auto it = f.vanishing_cycles.find(n);
    if (it == f.vanishing_cycles.end()) throw DomainError("dataset has no vanishing cycle '" + n + "'");
    out.push_back(it->second);
  }
  return out;
}

/// Every printed local monodromy equals the transvection built from its cycles.
inline Verdict check_local_pl(const FamilyDataset& f) {
  const PairedLattice& lattice = need(f.local_lattice, "local lattice");
  for (const auto& d : f.pl_data) {
    const auto cycles = cycles_of(f, d.cycles);
    const RationalMatrix built = pl_transvection(lattice, cycles);
    const RationalMatrix& printed = lookup(f.local_monodromies, d.matrix);
    if (built != printed)
      return Verdict::bad({{"matrix", d.matrix}, {"reconstructed", matrix_to_json(built)},
                           {"printed", matrix_to_json(printed)}});
  }
  return Verdict::ok();
}

inline Verdict check_correction(const CorrectionProblem& c) {
  const CorrectionSolution sol = correction_solve(c.raw_intersections, c.chains, c.unknowns);
  Json computed = Json::array();
  bool match = sol.coefficients.size() == c.printed_solution.size();
  for (std::size_t i = 0; i < sol.coefficients.size(); ++i) {
    computed.push_back({{"component", sol.coefficients[i].first}, {"coefficient", to_string(sol.coefficients[i].second)}});
    if (match && sol.coefficients[i].second != c.printed_solution[i]) match = false;
  }
  for (const auto& [cls, v] : c.raw_intersections)
    if (corrected_pairing(c.raw_intersections, c.chains, sol, cls) != 0)
      return Verdict::bad({{"not_orthogonal_to", cls}, {"solution", computed}});
  if (corrected_pairing(c.raw_intersections, c.chains, sol, kZeroSection) != 0)
    return Verdict::bad({{"not_orthogonal_to", kZeroSection}, {"solution", computed}});
  if (!match) return Verdict::bad({{"solution", computed}, {"printed", vector_to_json(c.printed_solution)}});
  return Verdict::ok(Json{{"corrected", sol.describe(c.cycle)}});
}

inline Verdict check_form_preserved(const FamilyDataset& f, const std::string& name) {
  const IntersectionForm& q = need(f.q_form, "intersection form");
  const RationalMatrix& m = lookup(f.big_monodromies, name);
  if (preserves_form(m, q)) return Verdict::ok();
  if (!m.is_square() || m.rows() != q.rank()) return Verdict::bad({{"shape", m.shape()}});
  const RationalMatrix defect = m.transpose() * q.matrix() * m - q.matrix();
  return Verdict::bad({{"MtQM_minus_Q", matrix_to_json(defect)}});
}

inline Verdict check_q_det(const FamilyDataset& f) {
  const Rational d = det(need(f.q_form, "intersection form").matrix());
  if (d == 0) return Verdict::bad({{"det", "0"}});
  return Verdict::ok(Json{{"det", to_string(d)}});
}

inline Verdict spectrum_verdict(const RationalMatrix& ad, const Spectrum& expected) {
  const Spectrum got = rational_spectrum(ad);
  std::size_t total = 0;
  for (const auto& [l, m] : got) total += m;
  if (got == expected && total == ad.rows()) return Verdict::ok(spectrum_to_json(got));
  Json w{{"spectrum", spectrum_to_json(got)}, {"expected", spectrum_to_json(expected)}};
  if (total != ad.rows()) w["rational_eigenvalue_count"] = total;
  // Report a uniform rescaling when the multiset matches up to one factor.
  const auto top_got = got.empty() ? Rational(0) : got.rbegin()->first;
  const auto top_exp = expected.empty() ? Rational(0) : expected.rbegin()->first;
  if (top_got != 0 && top_exp != 0) {
    const Rational scale = top_got / top_exp;
    Spectrum rescaled;
    for (const auto& [l, m] : expected) rescaled[Rational(l * scale)] = m;
    if (rescaled == got) w["equal_up_to_scale"] = to_string(scale);
  }
  return Verdict::bad(std::move(w));
}

inline Spectrum g2_adjoint_spectrum() { return {{-2, 1}, {-1, 4}, {0, 4}, {1, 4}, {2, 1}}; }

inline std::vector<CheckResult> family_one_checks(const FamilyDataset& f, const PipelineOptions& opt) {
  Certificate cert;
  CheckRecorder rec(cert);
  const MatrixTable& big = f.big_monodromies;

  rec.run("F1.local.pl", "T0 and T1 are Picard-Lefschetz transvections of doubled vanishing cycles",
          "I_2 fibres at 0 and 1 give T0 = [[1,2],[0,1]] and T1 = [[1,0],[-2,1]]", [&] { return check_local_pl(f); });

  rec.run("F1.pullback", "pulled-back local monodromies as loop words downstairs",
          "after the double cover: T~-1 = T0 T1 T0^-1, T~0 = T0^2, T~1 = T1", [&] {
            for (const auto& p : f.pullbacks) {
              const RationalMatrix got = evaluate_word(LoopWord::parse(p.word), f.local_monodromies);
              const RationalMatrix& printed = lookup(f.local_monodromies, p.matrix);
              if (got != printed)
                return Verdict::bad({{"matrix", p.matrix}, {"word", p.word}, {"evaluated", matrix_to_json(got)},
                                     {"printed", matrix_to_json(printed)}});
            }
            return Verdict::ok();
          });

  rec.run("F1.local.nodal", "pulled-back monodromies are unipotent with logarithm image on the vanishing cycle",
          "T~-1, T~0, T~1 are nodal, with vanishing cycles eta2, delta1, eta1", [&] {
            for (const auto& p : f.pullbacks) {
              const RationalMatrix& t = lookup(f.local_monodromies, p.matrix);
              const RationalMatrix n = nodal_log(t);
              const auto cyc = cycles_of(f, {p.vanishing_cycle});
              if (!image_spanned_by(n, cyc))
                return Verdict::bad({{"matrix", p.matrix}, {"log", matrix_to_json(n)}, {"cycle", p.vanishing_cycle}});
            }
            return Verdict::ok();
          });

  rec.run("F1.cycles", "intersection and combination of the upstairs vanishing cycles",
          "eta1 . eta2 = -2 and delta1 = (eta2 - eta1)/2", [&] {
            const PairedLattice& lat = need(f.local_lattice, "local lattice");
            const auto c = cycles_of(f, {"eta1", "eta2", "at_0"});
            const Rational pairing = lat.form.pair(c[0].coords, c[1].coords);
            const CycleVector half = make_rational(1, 2) * (c[1] - c[0]);
            if (pairing != -2 || !(half == c[2]))
              return Verdict::bad({{"eta1.eta2", to_string(pairing)}, {"half_difference", vector_to_json(half.coords)}});
            return Verdict::ok();
          });

  rec.run("F1.hodge", "Hodge bookkeeping of the pulled-back surface",
          "chi = 2, p_g = 2, b2 = 26, 19 algebraic classes, transcendental dimension at most 7", [&] {
            const HodgeSummary h = hodge_summary(need(f.fiber_config, "fibre configuration"));
            if (h != HodgeSummary{2, 2, 26, 19, 7}) return Verdict::bad(hodge_to_json(h));
            return Verdict::ok(hodge_to_json(h));
          });

  for (const auto& c : f.corrections) {
    const std::string tag = c.cycle == "C-1" ? "Cm1" : c.cycle;
    rec.run("F1.correction." + tag, "fibre-component correction making " + c.cycle + " transcendental",
            "printed correction coefficients make " + c.cycle + " orthogonal to components and zero section",
            [&] { return check_correction(c); });
  }

  rec.run("F1.Q.det", "intersection matrix of the seven cycles is nondegenerate", "det(Q) != 0",
          [&] { return check_q_det(f); });

  const std::vector<std::pair<std::string, std::string>> names = {
      {"M+", "Mplus"}, {"M-", "Mminus"}, {"M0", "M0"}, {"Minf", "Minf"}};
  for (const auto& [key, tag] : names)
    rec.run("F1.Q.preserved." + tag, key + " preserves the intersection form", key + "^T Q " + key + " = Q",
            [&, k = key] { return check_form_preserved(f, k); });

  rec.run("F1.product", "product of the four big monodromies", "Minf is the inverse of M- M0 M+", [&] {
    std::vector<RationalMatrix> ms;
    for (const auto& n : f.product_order) ms.push_back(lookup(big, n));
    if (verify_product_relation(ms)) return Verdict::ok();
    RationalMatrix acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) acc = acc * ms[i];
    return Verdict::bad({{"product", matrix_to_json(acc)}});
  });

  // Profiles feed the logarithms used by the Lie stage.
  std::map<std::string, UnipotencyProfile> profiles;
  auto profile_check = [&](const std::string& key, const std::string& tag, const std::string& anchor,
                           std::function<bool(const UnipotencyProfile&)> expected) {
    rec.run("F1.profile." + tag, "unipotency profile of " + key, anchor, [&, key] {
      const UnipotencyProfile p = unipotency_profile(lookup(big, key), opt.k_max);
      profiles[key] = p;
      if (p.unipotency_index > 3 || !expected(p)) return Verdict::bad(profile_to_json(p));
      return Verdict::ok(profile_to_json(p));
    });
  };
  profile_check("M+", "Mplus", "M+ is unipotent of index 2",
                [](const UnipotencyProfile& p) { return p.torsion_order == 1 && p.unipotency_index == 2; });
  profile_check("M-", "Mminus", "M- is unipotent of index 2",
                [](const UnipotencyProfile& p) { return p.torsion_order == 1 && p.unipotency_index == 2; });
  profile_check("M0", "M0", "M0 has finite order, hence N0 = 0",
                [](const UnipotencyProfile& p) { return p.unipotency_index == 1; });
  profile_check("Minf", "Minf", "Minf is not unipotent but Minf^3 is", [&](const UnipotencyProfile& p) {
    return p.torsion_order != 1 && is_unipotent(power(lookup(big, "Minf"), 3));
  });

  auto profile_of = [&](const std::string& key) -> const UnipotencyProfile& {
    const auto it = profiles.find(key);
    if (it == profiles.end()) throw DomainError("prerequisite failed: profile of " + key + " unavailable");
    return it->second;
  };

  rec.run("F1.JC.M0", "Jordan-Chevalley decomposition of M0", "M0 is semisimple: M0 = Ms, Mu = I, N0 = 0", [&] {
    const JordanChevalleyPair jc = jordan_chevalley(lookup(big, "M0"), profile_of("M0"));
    if (!jc.unipotent_part.is_identity() || !jc.log_unipotent.is_zero())
      return Verdict::bad({{"log_unipotent", matrix_to_json(jc.log_unipotent)}});
    return Verdict::ok();
  });

  std::optional<RationalMatrix> n_inf;
  rec.run("F1.JC.Minf", "Jordan-Chevalley decomposition of Minf",
          "Minf = Ms Mu with Ms^3 = I, Ms != I, commuting factors; N_inf = log(Minf^3)/3", [&] {
            const RationalMatrix& m = lookup(big, "Minf");
            const JordanChevalleyPair jc = jordan_chevalley(m, profile_of("Minf"));
            const bool ok = !jc.semisimple_part.is_identity() && power(jc.semisimple_part, 3).is_identity() &&
                            jc.semisimple_part * jc.unipotent_part == m && is_nilpotent(jc.log_unipotent) &&
                            !jc.log_unipotent.is_zero();
            if (!ok) return Verdict::bad({{"semisimple_part", matrix_to_json(jc.semisimple_part)},
                                          {"log_unipotent", matrix_to_json(jc.log_unipotent)}});
            n_inf = jc.log_unipotent;
            return Verdict::ok(Json{{"N_inf", matrix_to_json(jc.log_unipotent)}});
          });

  std::optional<GeneratorTable> table;
  rec.run("F1.table.independent", "the fourteen listed brackets are linearly independent",
          "N-, N+, Y1, Y4, ..., Y14 span a 14-dimensional space", [&] {
            const RationalMatrix np = log_quasi(lookup(big, "M+"), profile_of("M+"));
            const RationalMatrix nm = log_quasi(lookup(big, "M-"), profile_of("M-"));
            table = generator_table(nm, np, need(n_inf, "N_inf"));
            const std::size_t r = rank(stack_vectorized(std::span<const RationalMatrix>(table->elements)));
            if (r != 14) return Verdict::bad({{"rank", r}});
            return Verdict::ok(Json{{"rank", r}});
          });

  std::optional<LieSpan> closure;
  rec.run("F1.closure.dim", "Lie closure of the logarithms of M+, M-, Minf",
          "the monodromy Lie algebra generated by N+, N-, N_inf has dimension 14", [&] {
            const GeneratorTable& t = need(table, "generator table");
            LieSpan g = lie_closure({t.elements[1], t.elements[0], need(n_inf, "N_inf")});
            const std::size_t d = g.dimension();
            for (std::size_t i = 0; i < t.elements.size(); ++i)
              if (!g.contains(t.elements[i])) return Verdict::bad({{"dimension", d}, {"missing", GeneratorTable::kNames[i]}});
            if (d != 14) return Verdict::bad({{"dimension", d}});
            // later checks describe the 14-dimensional algebra only
            closure = std::move(g);
            return Verdict::ok(Json{{"dimension", d}});
          });

  std::optional<CartanPair> cartan;
  rec.run("F1.cartan.commute", "t1 = Y1 and t2 = [Y4, Y5] commute", "[t1, t2] = 0", [&] {
    const GeneratorTable& t = need(table, "generator table");
    CartanPair c{t.elements[2], bracket(t.elements[3], t.elements[4])};
    const RationalMatrix br = bracket(c.t1, c.t2);
    if (!br.is_zero()) return Verdict::bad({{"bracket", matrix_to_json(br)}});
    cartan = std::move(c);
    return Verdict::ok();
  });

  std::optional<RationalMatrix> ad1, ad2;
  rec.run("F1.cartan.diagonalizable", "ad(t1) and ad(t2) are diagonalizable over the rationals",
          "t1 and t2 are both diagonalizable", [&] {
            const LieSpan& g = need(closure, "closure");
            const CartanPair& c = need(cartan, "Cartan pair");
            ad1 = ad_matrix(c.t1, g);
            ad2 = ad_matrix(c.t2, g);
            const bool d1 = diagonalizable_over_rationals(*ad1), d2 = diagonalizable_over_rationals(*ad2);
            if (!d1 || !d2)
              return Verdict::bad({{"ad_t1_diagonalizable", d1},
                                   {"ad_t2_diagonalizable", d2},
                                   {"charpoly_ad_t1", polynomial_to_json(charpoly(*ad1))},
                                   {"charpoly_ad_t2", polynomial_to_json(charpoly(*ad2))}});
            return Verdict::ok();
          });

  rec.run("F1.ad_t1.spectrum", "eigenvalue multiset of ad(t1) on the closure",
          "ad(t1) has eigenvalues -2, -1 (x4), 0 (x4), 1 (x4), 2",
          [&] { return spectrum_verdict(need(ad1, "ad(t1)"), g2_adjoint_spectrum()); });
  rec.run("F1.ad_t2.spectrum", "eigenvalue multiset of ad(t2) on the closure",
          "ad(t2) has eigenvalues -2, -1 (x4), 0 (x4), 1 (x4), 2",
          [&] { return spectrum_verdict(need(ad2, "ad(t2)"), g2_adjoint_spectrum()); });

  std::optional<RationalMatrix> k_cartan;
  rec.run("F1.killing.nondegenerate", "Killing form of the closure is nondegenerate",
          "the monodromy Lie algebra is semisimple", [&] {
            const Rational d = det(killing_gram(need(closure, "closure")));
            if (d == 0) return Verdict::bad({{"det", "0"}});
            k_cartan = killing_on_cartan(need(cartan, "Cartan pair"), *closure);
            if (det(*k_cartan) == 0) return Verdict::bad({{"killing_on_cartan", matrix_to_json(*k_cartan)}});
            return Verdict::ok(Json{{"killing_on_cartan", matrix_to_json(*k_cartan)}});
          });

  std::optional<RootDatum> datum;
  rec.run("F1.roots", "joint eigenspace decomposition under <t1, t2>",
          "twelve one-dimensional root spaces and a two-dimensional Cartan subalgebra", [&] {
            RootDatum rd = simultaneous_root_decomposition(need(cartan, "Cartan pair"), need(closure, "closure"));
            Json roots = Json::array();
            bool mult_one = true, symmetric = true;
            for (const auto& r : rd.roots) {
              roots.push_back({to_string(r.on_t1), to_string(r.on_t2), r.multiplicity});
              mult_one = mult_one && r.multiplicity == 1;
              const Root neg{-r.on_t1, -r.on_t2, r.multiplicity};
              symmetric = symmetric && std::find(rd.roots.begin(), rd.roots.end(), neg) != rd.roots.end();
            }
            const Json w{{"cartan_dim", rd.cartan_dim}, {"roots", roots}};
            if (rd.roots.size() != 12 || rd.cartan_dim != 2 || !mult_one || !symmetric) return Verdict::bad(w);
            datum = std::move(rd);
            return Verdict::ok(w);
          });

  rec.run("F1.roots.length_ratio", "squared-length ratio of long to short roots", "long roots are sqrt(3) times short",
          [&] {
            const RootGeometry geo(need(datum, "root datum"), need(k_cartan, "Killing form on the Cartan"));
            const auto ratio = geo.length_ratio();
            if (!ratio || *ratio != 3)
              return Verdict::bad({{"ratio", ratio ? Json(to_string(*ratio)) : Json("not two lengths")}});
            return Verdict::ok(Json{{"ratio", to_string(*ratio)}});
          });

  rec.run("F1.type", "rank-2 root system type of the monodromy Lie algebra",
          "the Zariski closure of the monodromy group is G2", [&] {
            const RootSystemType t =
                identify_rank2_type(need(datum, "root datum"), need(k_cartan, "Killing form on the Cartan"));
            if (t != RootSystemType::G2) return Verdict::bad({{"type", to_string(t)}});
            return Verdict::ok(Json{{"type", to_string(t)}});
          });

  return std::move(cert.checks);
}

inline std::vector<CheckResult> family_four_checks(const FamilyDataset& f, const PipelineOptions& opt) {
  Certificate cert;
  CheckRecorder rec(cert);

  rec.run("F4.local.pl", "T1, Tr, Trbar are Picard-Lefschetz transvections of single vanishing cycles",
          "vanishing cycles delta at 1, eta at r and delta - eta at rbar", [&] { return check_local_pl(f); });

  rec.run("F4.local.index", "local monodromies are unipotent of index at most 2", "I_1 fibres have nodal monodromy",
          [&] {
            for (const auto& [name, t] : f.local_monodromies) {
              const unsigned m = nilpotency_index(t - RationalMatrix::identity(t.rows()));
              if (m == 0 || m > 2) return Verdict::bad({{"matrix", name}, {"matrix_value", matrix_to_json(t)}});
            }
            return Verdict::ok();
          });

  rec.run("F4.hodge", "Hodge bookkeeping of the pulled-back surface",
          "b2 = 26 with a transcendental lattice of dimension at most 7", [&] {
            const HodgeSummary h = hodge_summary(need(f.fiber_config, "fibre configuration"));
            if (h.chi != 2 || h.b2 != 26 || h.transcendental_bound != 7) return Verdict::bad(hodge_to_json(h));
            return Verdict::ok(hodge_to_json(h));
          });

  rec.run("F4.Q.det", "intersection matrix of the seven cycles is nondegenerate", "det(Q) != 0 again",
          [&] { return check_q_det(f); });

  rec.run("F4.Q.preserved.M1", "M1 preserves the intersection form", "M1^T Q M1 = Q",
          [&] { return check_form_preserved(f, "M1"); });

  const RationalPolynomial phi6{1, -1, 1};
  const RationalPolynomial x_minus_1{-1, 1};
  rec.run("F4.M1.order", "order of M1", "M1 has finite order 6, with zeta_6 eigenvalues", [&] {
    const unsigned order = finite_order(lookup(f.big_monodromies, "M1"), opt.k_max);
    if (order != 6) return Verdict::bad({{"order", order}});
    return Verdict::ok(Json{{"order", order}});
  });

  rec.run("F4.M1.charpoly", "characteristic polynomial of M1", "Jordan form diag(1, 1, 1, z, z, zbar, zbar), z = zeta_6",
          [&] {
            const RationalPolynomial cp = charpoly(lookup(f.big_monodromies, "M1"));
            const RationalPolynomial expected = pow(x_minus_1, 3) * pow(phi6, 2);
            if (cp != expected)
              return Verdict::bad({{"charpoly", polynomial_to_json(cp)}, {"expected", polynomial_to_json(expected)}});
            return Verdict::ok(polynomial_to_json(cp));
          });

  rec.run("F4.M1.minpoly", "minimal polynomial of M1", "M1 is diagonalizable (Jordan form is diagonal)", [&] {
    const RationalPolynomial mp = minpoly(lookup(f.big_monodromies, "M1"));
    const RationalPolynomial expected = x_minus_1 * phi6;
    if (mp != expected)
      return Verdict::bad({{"minpoly", polynomial_to_json(mp)}, {"expected", polynomial_to_json(expected)}});
    return Verdict::ok(polynomial_to_json(mp));
  });

  rec.not_provided("F4.M0", "monodromy around the remaining puncture", "this monodromy was not found");
  return std::move(cert.checks);
}

inline std::vector<CheckResult> equation_only_checks(const FamilyDataset& f) {
  Certificate cert;
  CheckRecorder rec(cert);
  const std::string p = "F" + std::to_string(f.id) + ".";
  rec.run(p + "equation", "Weierstrass equation and bad locus of the family", "family equation and singular values",
          [&] {
            if (f.weierstrass_form.empty() || f.bad_locus.empty()) return Verdict::bad({{"error", "missing equation"}});
            return Verdict::ok(Json{{"weierstrass_form", f.weierstrass_form}, {"bad_locus", f.bad_locus},
                                    {"base_change", f.base_change}});
          });
  rec.not_provided(p + "local", "local Picard-Lefschetz data", "local monodromies are not printed for this family");
  rec.not_provided(p + "Q", "intersection form on the transcendental lattice", "not printed for this family");
  rec.not_provided(p + "monodromy", "big monodromy matrices", "not printed for this family");
  rec.not_provided(p + "lie", "monodromy Lie algebra identification", "not carried out for this family");
  return std::move(cert.checks);
}

}  // namespace detail

/// Certificate for an explicit dataset (used for mutation testing as well as the embedded families).
inline Certificate run_pipeline(const FamilyDataset& f, const PipelineOptions& opt = {}) {
  Certificate cert;
  cert.family = f.id;
  std::vector<CheckResult> all;
  switch (f.id) {
    case 1: all = detail::family_one_checks(f, opt); break;
    case 4: all = detail::family_four_checks(f, opt); break;
    case 2:
    case 3: all = detail::equation_only_checks(f); break;
    default: throw UsageError("family id must be 1, 2, 3 or 4, got " + std::to_string(f.id));
  }
  if (!opt.selection) {
    cert.checks = std::move(all);
    return cert;
  }
  for (const auto& id : *opt.selection) {
    bool known = false;
    for (const auto& c : all) known = known || c.id == id;
    if (!known) throw UsageError("unknown check id '" + id + "' for family " + std::to_string(f.id));
  }
  for (auto& c : all)
    if (opt.selection->contains(c.id)) cert.checks.push_back(std::move(c));
  return cert;
}

inline Certificate run_pipeline(int family, const PipelineOptions& opt = {}) {
  return run_pipeline(family_dataset(family), opt);
}

}  // namespace g2mono
