#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltak/errors.hpp"
#include "deltak/laurent.hpp"
#include "deltak/linalg.hpp"
#include "deltak/lp.hpp"
#include "deltak/series.hpp"
#include "deltak/unipoly.hpp"

using namespace deltak;

namespace {

LaurentPoly T(int nvars, const IntVec& e, long c = 1) { return LaurentPoly::monomial(e, Rational(c)); }

UniPoly poly(std::vector<long> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return UniPoly(q);
}

// 1 - e^{-a s} up to s^end, from the factorial expansion.
Series one_minus_exp_series(const Rational& a, int end) {
  Series s(0, end);
  Rational term = 1;
  for (int k = 1; k < end; ++k) {
    term *= -a / k;
    s.set_coeff(k, -term);
  }
  return s;
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidInputError);
  CHECK(primitive(IntVec{4, -6, 0}) == IntVec{2, -3, 0});
}

TEST_CASE("laurent ring operations") {
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  CHECK((one - T(1, {1})) * (one + T(1, {1})) == one - T(1, {2}));
  CHECK(T(1, {1}) * T(1, {-1}) == one);
  const LaurentPoly f = LaurentPoly::constant(2, 1) + T(2, {1, -1});
  CHECK(f + LaurentPoly::constant(2, -1) == T(2, {1, -1}));
  CHECK((one - T(1, {1})).evaluate_at_one() == 0);
}

TEST_CASE("monomial substitution") {
  const LaurentPoly f = T(2, {1, 0}) + T(2, {0, -1}, 3);
  const LaurentPoly g = f.substitute_monomials({{2}, {1}});
  CHECK(g == T(1, {2}) + T(1, {-1}, 3));
}

TEST_CASE("divisibility by 1 - T^v") {
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  CHECK(divisible_by(one - T(1, {-1}), {1}));
  CHECK(divisible_by(one - T(1, {1}), {-1}));
  CHECK_FALSE(divisible_by(one + T(1, {1}), {1}));
  const LaurentPoly f = LaurentPoly::constant(2, 1) - T(2, {2, -2});
  auto q = divide_one_minus(f, {1, -1});
  REQUIRE(q.has_value());
  CHECK(*q * LaurentPoly::one_minus({1, -1}) == f);
  CHECK_FALSE(divide_one_minus(LaurentPoly::constant(2, 1), {1, 0}).has_value());
}

TEST_CASE("series of substituted characters") {
  const Series a = exp_substitute(T(1, {1}), {1}, 2);
  CHECK(a.coeff(0) == 1);
  CHECK(a.coeff(1) == 1);
  CHECK(a.coeff(2) == Rational(1, 2));
  const Series b = exp_substitute(LaurentPoly::constant(1, 1) - T(1, {-1}), {1}, 2);
  CHECK(b.coeff(0) == 0);
  CHECK(b.coeff(1) == 1);
  CHECK(b.coeff(2) == Rational(-1, 2));
  CHECK(exp_substitute(LaurentPoly::constant(1, 5), {3}, 3).coeff(0) == 5);
}

TEST_CASE("inverse of 1 - e^{-as}") {
  const Series r = inv_one_minus_exp(1, 1);
  CHECK(r.start() == -1);
  CHECK(r.coeff(-1) == 1);
  CHECK(r.coeff(0) == Rational(1, 2));
  CHECK(r.coeff(1) == Rational(1, 12));
  for (const Rational a : {Rational(3), Rational(-5, 2)}) {
    const Series inv = inv_one_minus_exp(a, 6);
    const Series prod = inv * one_minus_exp_series(a, 9);
    CHECK(prod.coeff(0) == 1);
    for (int k = 1; k < prod.end(); ++k) CHECK(prod.coeff(k) == 0);
  }
  CHECK_THROWS_AS(inv_one_minus_exp(0, 2), DirectionError);
}

TEST_CASE("bernoulli numbers, plus convention") {
  CHECK(bernoulli_plus(0) == 1);
  CHECK(bernoulli_plus(1) == Rational(1, 2));
  CHECK(bernoulli_plus(2) == Rational(1, 6));
  CHECK(bernoulli_plus(3) == 0);
  CHECK(bernoulli_plus(4) == Rational(-1, 30));
}

TEST_CASE("psi image of a monomial") {
  // (1+s)/(1-s) = 1 + 2s + 2s^2 + ...
  const Series p = psi_monomial({1}, {1}, 5);
  CHECK(p.coeff(0) == 1);
  for (int k = 1; k < 5; ++k) CHECK(p.coeff(k) == 2);
  // T_1^2 T_2^{-1} at c = (2, 3): product of the factor series.
  const Direction c{2, 3};
  const Series lhs = psi_monomial({2, -1}, c, 6);
  const Series f1 = psi_monomial({1, 0}, c, 6);
  const Series f2 = psi_monomial({0, 1}, c, 6);
  CHECK(lhs.agrees_with(f1 * f1 * f2.inverse()));
}

TEST_CASE("interpolation with guards") {
  using Node = std::pair<Rational, Rational>;
  CHECK(interpolate({Node{0, 4}, Node{1, 8}}, 1) == poly({4, 4}));
  CHECK(interpolate({Node{0, 1}, Node{1, 4}, Node{2, 9}}, 2) == poly({1, 2, 1}));
  CHECK(interpolate({Node{0, 4}, Node{1, 16}, Node{2, 36}, Node{-1, 0}}, 2) == poly({4, 8, 4}));
  CHECK_THROWS_AS(interpolate({Node{0, 0}, Node{1, 1}, Node{2, 4}}, 1), DegreeBoundError);
}

TEST_CASE("univariate helpers") {
  CHECK(poly({1, 1}).pow(2) == poly({1, 2, 1}));
  CHECK(poly({4, 8, 4}).divide_by_root(-1) == poly({4, 4}));
  CHECK_THROWS_AS(poly({1, 1}).divide_by_root(1), ConsistencyError);
  CHECK(poly({4, 8, 4}).to_string() == "4 + 8v + 4v^2");
}

TEST_CASE("exact linear algebra") {
  const QMatrix m = to_qmatrix({{2, 1}, {1, 1}});
  CHECK(determinant(m) == 1);
  CHECK(rank(to_qmatrix({{1, 2}, {2, 4}})) == 1);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == 1);
  CHECK((*inv)[0][1] == -1);
  CHECK(gf2_determinant({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == false);
  CHECK(gf2_rank({{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("integer lattices") {
  const auto k = integer_kernel({{2}, {3}});
  REQUIRE(k.size() == 1);
  CHECK(std::abs(k[0][0]) == 3);
  CHECK(2 * k[0][0] + 3 * k[0][1] == 0);
  // Z{(2,0),(0,2),(1,1)} has index 2 in Z^2.
  const auto b = lattice_basis({{2, 0}, {0, 2}, {1, 1}});
  REQUIRE(b.size() == 2);
  CHECK(abs(determinant(to_qmatrix(b))) == 2);
  const auto s = saturated_basis({{2, 0}}, 2);
  REQUIRE(s.size() == 1);
  CHECK(primitive(s[0]) == s[0]);
}

TEST_CASE("linear programming") {
  CHECK(in_cone({{1, 0}, {1, 2}}, {1, 1}));
  CHECK_FALSE(in_cone({{1, 0}, {1, 2}}, {0, 1}));
  CHECK(is_pointed({{1, 0}, {1, 2}}));
  CHECK_FALSE(is_pointed({{1, 0}, {-1, 0}}));
  const IntVec l = positive_grading({{-1, 1, 0}, {-1, 0, 1}, {0, 1, 1}}, 3);
  for (const IntVec& a : std::vector<IntVec>{{-1, 1, 0}, {-1, 0, 1}, {0, 1, 1}}) CHECK(dot(l, a) > 0);
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6 in standard form.
  const QMatrix A = to_qmatrix({{1, 2, 1, 0}, {3, 1, 0, 1}});
  const LpResult r = solve_standard_lp(A, to_qvector({4, 6}), to_qvector({-1, -1, 0, 0}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(-14, 5));
}
