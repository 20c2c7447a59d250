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

#include <catch_amalgamated.hpp>

#include <variant>

#include "g2mono/exact/json_io.hpp"
#include "g2mono/exact/linalg.hpp"
#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/exact/rational.hpp"
#include "g2mono/exact/roots.hpp"
#include "g2mono/families/dataset.hpp"
#include "oracles.hpp"

using namespace g2mono;

namespace {

const RationalMatrix& fam1(const char* name) {
  static const FamilyDataset f = family_dataset(1);
  return f.big_monodromies.at(name);
}

const RationalMatrix& fam4_m1() {
  static const FamilyDataset f = family_dataset(4);
  return f.big_monodromies.at("M1");
}

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator", "[exact][rational]") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("rational literals parse and reject malformed text", "[exact][rational]") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("+5/10") == make_rational(1, 2));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("matrix product matches hand multiplication", "[exact][matrix]") {
  const RationalMatrix t0{{1, 2}, {0, 1}};
  const RationalMatrix t1{{1, 0}, {-2, 1}};
  CHECK(t0 * t1 == RationalMatrix{{-3, 2}, {-2, 1}});
  CHECK(RationalMatrix::identity(7) * fam1("M0") == fam1("M0"));
  CHECK(fam1("M-") * fam1("M0") * fam1("M+") * fam1("Minf") == RationalMatrix::identity(7));
}

TEST_CASE("matrix shape errors are reported", "[exact][matrix]") {
  const RationalMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, DimensionError);
  CHECK_THROWS_AS(a + RationalMatrix(3, 2), DimensionError);
  CHECK_THROWS_AS(a.at(2, 0), DimensionError);
  CHECK_THROWS_AS(a.trace(), DimensionError);
  CHECK_THROWS_AS((RationalMatrix{{1, 2}, {3}}), DimensionError);
}

TEST_CASE("vectorize and unvectorize are inverse", "[exact][matrix]") {
  const RationalMatrix m{{1, 2, 3}, {4, 5, 6}};
  const auto v = vectorize(m);
  REQUIRE(v.size() == 6);
  CHECK(v[3] == 4);
  CHECK(unvectorize(std::span<const Rational>(v), 2, 3) == m);
}

TEST_CASE("determinants agree with the cofactor oracle", "[exact][det]") {
  CHECK(det(RationalMatrix::identity(7)) == 1);
  const auto q1 = family_dataset(1).q_form->matrix();
  const auto q4 = family_dataset(4).q_form->matrix();
  CHECK(oracle::cofactor_det(q1) == -8);
  CHECK(oracle::cofactor_det(q4) == -4);
  CHECK(det(q1) == -8);
  CHECK(det(q4) == -4);
  CHECK(det(RationalMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(RationalMatrix{{make_rational(1, 2), 1}, {1, 2}}) == 0);
  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("rank of simple and table matrices", "[exact][rank]") {
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(RationalMatrix::identity(7)) == 7);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("solve_linear distinguishes unique, affine and inconsistent systems", "[exact][solve]") {
  const auto u = solve_linear(RationalMatrix::identity(2), RationalMatrix{{1}, {2}});
  REQUIRE(std::holds_alternative<UniqueSolution>(u));
  CHECK(std::get<UniqueSolution>(u).x == RationalMatrix{{1}, {2}});

  const auto a = solve_linear(RationalMatrix{{1, 1}}, RationalMatrix{{0}});
  REQUIRE(std::holds_alternative<AffineSolution>(a));
  const auto& aff = std::get<AffineSolution>(a);
  REQUIRE(aff.kernel.size() == 1);
  CHECK(aff.kernel[0][0] == -aff.kernel[0][1]);
  CHECK(aff.kernel[0][0] != 0);

  const auto i = solve_linear(RationalMatrix{{1, 1}, {1, 1}}, RationalMatrix{{0}, {1}});
  CHECK(std::holds_alternative<Inconsistent>(i));
  CHECK_THROWS_AS(solve_linear(RationalMatrix::identity(2), RationalMatrix(3, 1)), DimensionError);
}

TEST_CASE("inverse and signed powers", "[exact][inverse]") {
  const RationalMatrix t{{-3, 8}, {-2, 5}};
  CHECK(inverse(t) * t == RationalMatrix::identity(2));
  CHECK(signed_power(t, -2) * power(t, 2u) == RationalMatrix::identity(2));
  CHECK(signed_power(t, 0) == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), DomainError);
}

TEST_CASE("characteristic polynomials", "[exact][charpoly]") {
  const RationalPolynomial x_minus_1{-1, 1};
  CHECK(charpoly(RationalMatrix::identity(2)) == pow(x_minus_1, 2));
  CHECK(charpoly(RationalMatrix{{1, 1}, {-1, 0}}) == RationalPolynomial{1, -1, 1});
  const RationalMatrix& m1 = fam4_m1();
  const RationalPolynomial expected = pow(x_minus_1, 3) * pow(RationalPolynomial{1, -1, 1}, 2);
  CHECK(charpoly(m1) == expected);
  CHECK(oracle::charpoly_by_interpolation(m1) == expected);
  CHECK(charpoly(fam1("M0")) == oracle::charpoly_by_interpolation(fam1("M0")));
  CHECK(charpoly(fam1("M0")) == pow(x_minus_1, 3) * pow(RationalPolynomial{1, 1}, 4));
  CHECK(charpoly(fam1("Minf")) == pow(x_minus_1, 3) * pow(RationalPolynomial{1, 1, 1}, 2));
}

TEST_CASE("minimal polynomials", "[exact][minpoly]") {
  CHECK(minpoly(RationalMatrix::identity(7)) == RationalPolynomial{-1, 1});
  CHECK(is_squarefree(minpoly(fam1("M0"))));
  const RationalMatrix& m1 = fam4_m1();
  const RationalPolynomial mp = minpoly(m1);
  CHECK(mp == RationalPolynomial{-1, 1} * RationalPolynomial{1, -1, 1});
  CHECK(mp(m1).is_zero());
  CHECK_FALSE(RationalPolynomial({-1, 1})(m1).is_zero());
  CHECK_FALSE(RationalPolynomial({1, -1, 1})(m1).is_zero());
  CHECK(minpoly(fam1("M+")) == RationalPolynomial({1, -2, 1}));
  CHECK_FALSE(is_squarefree(minpoly(fam1("M+"))));
}

TEST_CASE("squarefreeness", "[exact][polynomial]") {
  CHECK(is_squarefree(RationalPolynomial{-1, 0, 1}));
  CHECK_FALSE(is_squarefree(RationalPolynomial{1, -2, 1}));
  CHECK_THROWS_AS(is_squarefree(RationalPolynomial{}), DomainError);
}

TEST_CASE("polynomial arithmetic and printing", "[exact][polynomial]") {
  const RationalPolynomial p{1, -1, 1};
  CHECK(p.to_string() == "x^2 - x + 1");
  CHECK(RationalPolynomial{}.degree() == -1);
  const auto [q, r] = divmod(pow(p, 2) + RationalPolynomial{3}, p);
  CHECK(q == p);
  CHECK(r == RationalPolynomial{3});
  CHECK(gcd(pow(p, 2) * RationalPolynomial{-1, 1}, p * RationalPolynomial{1, 1}) == p);
  CHECK(multiplicity(pow(RationalPolynomial{-1, 1}, 3) * p, RationalPolynomial{-1, 1}) == 3);
  CHECK_THROWS_AS(divmod(p, RationalPolynomial{}), DomainError);
}

TEST_CASE("rational roots with multiplicity", "[exact][roots]") {
  const auto roots = rational_roots(oracle::from_roots(
      {make_rational(-3, 2), make_rational(-3, 2), 0, make_rational(2, 5), 7}));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == std::pair<Rational, unsigned>{make_rational(-3, 2), 2});
  CHECK(roots[1].first == 0);
  CHECK(roots[2].first == make_rational(2, 5));
  CHECK(roots[3].first == 7);
  CHECK(rational_roots(RationalPolynomial{1, 0, 1}).empty());
  CHECK(splits_over_rationals(oracle::from_roots({1, 2, 3})));
  CHECK_FALSE(splits_over_rationals(RationalPolynomial{-2, 0, 1}));
}

TEST_CASE("matrix JSON round trip uses p/q strings", "[exact][json]") {
  const RationalMatrix m{{make_rational(1, 2), -3}, {0, make_rational(-7, 9)}};
  const Json j = matrix_to_json(m);
  CHECK(j["entries"][0][0] == "1/2");
  CHECK(j["entries"][1][1] == "-7/9");
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1})")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
}
