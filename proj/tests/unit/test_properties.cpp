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

// Randomized invariants. Every suite uses a fixed-seed mt19937 so failures
// reproduce exactly.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <variant>

#include "g2mono/certify/pipeline.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/roots.hpp"
#include "g2mono/families/dataset.hpp"
#include "g2mono/lie/closure.hpp"
#include "g2mono/plmono/loop_word.hpp"
#include "g2mono/plmono/transvection.hpp"
#include "g2mono/quasiuni/quasi_unipotent.hpp"
#include "oracles.hpp"

using namespace g2mono;

namespace {

constexpr int kTrials = 100;

/// Standard symplectic form [[0, I], [-I, 0]] on Q^{2g}.
PairedLattice symplectic(std::size_t g) {
  RationalMatrix j(2 * g, 2 * g);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  for (std::size_t i = 0; i < 2 * g; ++i) labels.push_back("e" + std::to_string(i));
  return {IntersectionForm(j, labels, Weight::One)};
}

CycleVector random_cycle(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  CycleVector c(std::vector<Rational>(n, Rational(0)));
  for (auto& v : c.coords) v = d(rng);
  return c;
}

std::set<std::string> failing_ids(const Certificate& c) {
  std::set<std::string> out;
  for (const auto& r : c.checks)
    if (r.status == CheckStatus::Fail) out.insert(r.id);
  return out;
}

}  // namespace

TEST_CASE("products are associative and determinants multiplicative", "[property][exact]") {
  std::mt19937 rng(1001);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = oracle::random_rational_matrix(rng, 4, 4);
    const auto b = oracle::random_rational_matrix(rng, 4, 4);
    const auto c = oracle::random_rational_matrix(rng, 4, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == oracle::multiply(a, b));
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(a) == oracle::cofactor_det(a));
  }
}

TEST_CASE("solve_linear returns genuine solutions", "[property][exact]") {
  std::mt19937 rng(1002);
  std::uniform_int_distribution<int> shape(1, 5);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t m = shape(rng), n = shape(rng);
    auto a = oracle::random_integer_matrix(rng, m, n, -3, 3);
    if (t % 3 == 0 && m > 1)
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * 2;  // force dependence
    const auto b = oracle::random_integer_matrix(rng, m, 1, -5, 5);
    const LinearSolution s = solve_linear(a, b);
    if (const auto* u = std::get_if<UniqueSolution>(&s)) {
      CHECK(a * u->x == b);
      CHECK(rank(a) == n);
    } else if (const auto* f = std::get_if<AffineSolution>(&s)) {
      CHECK(a * f->particular == b);
      CHECK(f->kernel.size() == n - rank(a));
      for (const auto& k : f->kernel) CHECK((a * RationalMatrix::column(std::span<const Rational>(k))).is_zero());
    } else {
      RationalMatrix aug(m, n + 1);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b(i, 0);
      }
      CHECK(rank(aug) == rank(a) + 1);
    }
  }
}

TEST_CASE("rank-nullity", "[property][exact]") {
  std::mt19937 rng(1003);
  std::uniform_int_distribution<int> shape(1, 6);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t m = shape(rng), n = shape(rng);
    const auto a = oracle::random_integer_matrix(rng, m, n, -1, 1);
    CHECK(rank(a) + kernel(a).size() == n);
    CHECK(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("Cayley-Hamilton and minimal polynomial divisibility", "[property][exact]") {
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> size(1, 5);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = size(rng);
    RationalMatrix a = oracle::random_integer_matrix(rng, n, n, -2, 2);
    if (t % 4 == 0) a = RationalMatrix::identity(n) + oracle::random_nilpotent(rng, n);
    const RationalPolynomial cp = charpoly(a);
    const RationalPolynomial mp = minpoly(a);
    CHECK(cp == oracle::charpoly_by_interpolation(a));
    CHECK(cp(a).is_zero());
    CHECK(mp(a).is_zero());
    CHECK((cp % mp).is_zero());
    CHECK(mp.leading() == 1);
    // no proper monic divisor of lower degree annihilates a: minimality via the Krylov rank
    if (mp.degree() > 1) {
      std::vector<RationalMatrix> powers;
      RationalMatrix p = RationalMatrix::identity(n);
      for (long k = 0; k < mp.degree(); ++k) {
        powers.push_back(p);
        p = p * a;
      }
      CHECK(rank(stack_vectorized(std::span<const RationalMatrix>(powers))) == static_cast<std::size_t>(mp.degree()));
    }
  }
}

TEST_CASE("rational roots are recovered with multiplicities", "[property][exact]") {
  std::mt19937 rng(1005);
  std::uniform_int_distribution<int> count(1, 6), num(-12, 12), den(1, 4), mult(1, 3), extra(0, 2);
  for (int t = 0; t < kTrials; ++t) {
    std::map<Rational, unsigned> want;
    const int c = count(rng);
    for (int k = 0; k < c; ++k) want[make_rational(num(rng), den(rng))] += mult(rng);
    std::vector<Rational> roots;
    for (const auto& [r, m] : want) roots.insert(roots.end(), m, r);
    RationalPolynomial p = oracle::from_roots(roots);
    // an irreducible quadratic factor contributes no rational roots
    const int e = extra(rng);
    if (e == 1) p = p * RationalPolynomial{2, 0, 1};
    if (e == 2) p = p * RationalPolynomial{-2, 0, 1};
    std::map<Rational, unsigned> got;
    for (const auto& [r, m] : rational_roots(Rational(3) * p)) got[r] = m;
    CHECK(got == want);
    CHECK(splits_over_rationals(p) == (e == 0));
  }
}

TEST_CASE("transvections along pairwise orthogonal cycles are symplectic", "[property][plmono]") {
  std::mt19937 rng(2001);
  std::uniform_int_distribution<int> genus(1, 3), count(1, 4);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t g = genus(rng);
    const PairedLattice lat = symplectic(g);
    const RationalMatrix& j = lat.form.matrix();
    // a random symplectic frame: product of single transvections
    RationalMatrix s = RationalMatrix::identity(2 * g);
    for (int k = 0; k < 3; ++k) s = s * pl_transvection(lat, {random_cycle(rng, 2 * g)});
    REQUIRE(s.transpose() * j * s == j);
    // cycles in the image of the Lagrangian span(e_1..e_g) under s pair to zero
    std::vector<CycleVector> cycles;
    const int c = count(rng);
    for (int k = 0; k < c; ++k) {
      CycleVector v = random_cycle(rng, 2 * g);
      for (std::size_t i = g; i < 2 * g; ++i) v.coords[i] = 0;
      const auto col = s * RationalMatrix::column(std::span<const Rational>(v.coords));
      cycles.emplace_back(col.col(0));
    }
    for (std::size_t a = 0; a < cycles.size(); ++a)
      for (std::size_t b = 0; b < cycles.size(); ++b) REQUIRE(lat.form.pair(cycles[a].coords, cycles[b].coords) == 0);
    const RationalMatrix tr = pl_transvection(lat, cycles);
    CHECK(tr.transpose() * j * tr == j);
    CHECK(is_unipotent(tr));
    CHECK(nilpotency_index(tr - RationalMatrix::identity(2 * g)) <= 2);
  }
}

TEST_CASE("a word followed by its inverse evaluates to the identity", "[property][plmono]") {
  std::mt19937 rng(2002);
  MatrixTable table;
  for (int k = 0; k < 4; ++k) table["G" + std::to_string(k)] = oracle::random_unimodular(rng, 3);
  std::uniform_int_distribution<int> len(1, 7), pick(0, 3), sign(0, 1);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<LoopLetter> letters;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) letters.push_back({"G" + std::to_string(pick(rng)), sign(rng) ? 1 : -1});
    const LoopWord w(letters);
    CHECK(evaluate_word(w.then(w.inverse()), table).is_identity());
    CHECK(evaluate_word(w.inverse(), table) * evaluate_word(w, table) == RationalMatrix::identity(3));
    CHECK(LoopWord::parse(w.to_string()).to_string() == w.to_string());
  }
}

TEST_CASE("log and exp are mutually inverse on nilpotent and unipotent matrices", "[property][quasiuni]") {
  std::mt19937 rng(3001);
  std::uniform_int_distribution<int> size(2, 6);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = size(rng);
    const RationalMatrix p = oracle::random_unimodular(rng, n, 4);
    const RationalMatrix p_inv = inverse(p);
    const RationalMatrix nil = p * oracle::random_nilpotent(rng, n) * p_inv;
    CHECK(log_unipotent(exp_nilpotent(nil)) == nil);
    const RationalMatrix uni = RationalMatrix::identity(n) + nil;
    CHECK(exp_nilpotent(log_unipotent(uni)) == uni);
    const auto prof = unipotency_profile(uni);
    CHECK(prof.torsion_order == 1);
    CHECK(prof.unipotency_index == nilpotency_index(nil));
  }
}

TEST_CASE("Jordan-Chevalley factors of quasi-unipotent matrices", "[property][quasiuni]") {
  std::mt19937 rng(3002);
  // finite-order blocks: rotation by 90 degrees and order-3, order-6 companions
  const std::vector<RationalMatrix> blocks{RationalMatrix{{0, -1}, {1, 0}}, RationalMatrix{{0, -1}, {1, -1}},
                                           RationalMatrix{{0, -1}, {1, 1}}, RationalMatrix{{-1, 0}, {0, -1}}};
  std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
  for (int t = 0; t < kTrials; ++t) {
    // block-diagonal semisimple s of size 4, unipotent u commuting with it (polynomial in a nilpotent on a
    // repeated block), conjugated by a unimodular matrix
    const RationalMatrix b = blocks[pick(rng)];
    RationalMatrix s(4, 4), nil(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) s(i, j) = s(2 + i, 2 + j) = b(i, j);
    std::uniform_int_distribution<int> c(-3, 3);
    const int k = c(rng);
    for (std::size_t i = 0; i < 2; ++i) nil(i, 2 + i) = k;  // commutes with diag(b, b)
    const RationalMatrix p = oracle::random_unimodular(rng, 4, 5);
    const RationalMatrix p_inv = inverse(p);
    const RationalMatrix m = p * s * exp_nilpotent(nil) * p_inv;
    const auto prof = unipotency_profile(m);
    const auto jc = jordan_chevalley(m, prof);
    CHECK(jc.semisimple_part == p * s * p_inv);
    CHECK(jc.log_unipotent == p * nil * p_inv);
    CHECK(jc.semisimple_part * jc.unipotent_part == m);
  }
}

TEST_CASE("the Jacobi identity holds for the matrix bracket", "[property][lie]") {
  std::mt19937 rng(4001);
  for (int t = 0; t < kTrials; ++t) {
    const auto x = oracle::random_rational_matrix(rng, 3, 3);
    const auto y = oracle::random_rational_matrix(rng, 3, 3);
    const auto z = oracle::random_rational_matrix(rng, 3, 3);
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    CHECK(bracket(x, y) == -bracket(y, x));
  }
}

TEST_CASE("Lie closure does not depend on generator order", "[property][lie]") {
  std::mt19937 rng(4002);
  std::uniform_int_distribution<int> gens(2, 3), sparse(0, 3);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<RationalMatrix> g;
    const int c = gens(rng);
    for (int k = 0; k < c; ++k) {
      RationalMatrix m = oracle::random_nilpotent(rng, 4);
      if (sparse(rng) == 0) m = m.transpose();
      g.push_back(m);
    }
    const LieSpan a = lie_closure(std::span<const RationalMatrix>(g));
    std::shuffle(g.begin(), g.end(), rng);
    const LieSpan b = lie_closure(std::span<const RationalMatrix>(g));
    CHECK(a.dimension() == b.dimension());
    CHECK(a.echelon() == b.echelon());
    CHECK(is_bracket_closed(a));
  }
}

TEST_CASE("perturbing an embedded 7x7 entry flips some check to fail", "[property][mutation]") {
  const FamilyDataset f1 = family_dataset(1);
  const FamilyDataset f4 = family_dataset(4);
  const std::set<std::string> base1 = failing_ids(run_pipeline(f1));
  const std::set<std::string> base4 = failing_ids(run_pipeline(f4));
  REQUIRE(base4.empty());

  struct Target {
    int family;
    std::string name;  // big monodromy key, or "Q"
  };
  const std::vector<Target> targets{{1, "M+"}, {1, "M-"}, {1, "M0"}, {1, "Minf"}, {1, "Q"}, {4, "M1"}, {4, "Q"}};
  std::mt19937 rng(5001);
  std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1), idx(0, 6);
  for (int t = 0; t < kTrials; ++t) {
    const Target& tg = targets[pick(rng)];
    const std::size_t i = idx(rng), j = idx(rng);
    FamilyDataset f = tg.family == 1 ? f1 : f4;
    const auto& base = tg.family == 1 ? base1 : base4;
    if (tg.name == "Q") {
      RationalMatrix q = f.q_form->matrix();
      q(i, j) += 1;
      if (i != j) {
        // a lone off-diagonal change breaks symmetry and is rejected outright
        CHECK_THROWS_AS(IntersectionForm(q, f.q_form->labels(), Weight::Two), DomainError);
        continue;
      }
      f.q_form = IntersectionForm(q, f.q_form->labels(), Weight::Two);
    } else {
      f.big_monodromies[tg.name](i, j) += 1;
    }
    const std::set<std::string> now = failing_ids(run_pipeline(f));
    bool flipped = false;
    for (const auto& id : now) flipped = flipped || !base.contains(id);
    INFO("family " << tg.family << " " << tg.name << "(" << i << "," << j << ")");
    CHECK(flipped);
  }
}

TEST_CASE("pipeline reports are idempotent", "[property][certify]") {
  for (int id = 1; id <= 4; ++id) {
    const std::string a = render_report(run_pipeline(id), ReportFormat::Json);
    const std::string b = render_report(run_pipeline(id), ReportFormat::Json);
    CHECK(a == b);
  }
}

TEST_CASE("embedded datasets are frozen", "[property][dataset]") {
  // FNV-1a of the compact dataset dump; any edit to the embedded constants changes it
  const std::vector<std::uint64_t> expected{5137187915145321961ULL, 6227623369151357976ULL, 16395321017727527146ULL,
                                            4115004279127375071ULL};
  for (int id = 1; id <= 4; ++id) {
    const std::uint64_t h = oracle::fnv1a(dataset_to_json(family_dataset(id)).dump());
    INFO("family " << id << " checksum " << h);
    CHECK(h == expected[id - 1]);
  }
}
