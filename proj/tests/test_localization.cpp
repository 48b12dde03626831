#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltak/enumerate.hpp"
#include "deltak/errors.hpp"
#include "deltak/localization.hpp"
#include "deltak/selftest.hpp"

using namespace deltak;

namespace {

UniPoly poly(std::vector<long> c) { return UniPoly(std::vector<Rational>(c.begin(), c.end())); }

}  // namespace

TEST_CASE("directions are odd, distinct and seeded") {
  DirectionSource a(7), b(7);
  const Direction c = a.draw(5);
  CHECK(c == b.draw(5));
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i] % 2 != 0);
    CHECK(c[i] >= 1);
    CHECK(c[i] <= (1 << 20));
    for (std::size_t j = 0; j < i; ++j) CHECK(c[i] != c[j]);
  }
}

TEST_CASE("localization on the projective line") {
  // 1/(1 - T^{-1}) + 1/(1 - T) = 1
  const std::vector<KTerm> terms{{{LaurentPoly::constant(1, 1)}, {{1}}}, {{LaurentPoly::constant(1, 1)}, {{-1}}}};
  CHECK(localization_sum(terms, {3})[0] == 1);
  // A lone pole never cancels.
  CHECK_THROWS_AS(localization_sum({terms[0]}, {3}), CancellationError);
  CHECK_THROWS_AS(localization_sum(terms, {0}), DirectionError);
}

TEST_CASE("structure sheaves") {
  for (int n = 1; n <= 4; ++n) CHECK(euler_char_X(x_constant(n, 1)) == 1);
  for (int n = 1; n <= 3; ++n) {
    const auto chi = euler_char_ogr_multi(
        ogr_structure_sheaf(n), [n](Subset) { return std::vector<LaurentPoly>{LaurentPoly::constant(n, 1)}; });
    CHECK(chi[0] == 1);
  }
  CHECK(euler_char_HRR(x_constant(2, 1)) == 1);
}

TEST_CASE("Chow integrals") {
  for (int n = 1; n <= 3; ++n) CHECK(integrate_chow(ChowExpr::gamma().pow(n), n) == (1 << n));
  const DeltaMatroid d = three_singletons_family();
  const ChowExpr e = ChowExpr::chern_isotropic(d, 1, true) * ChowExpr::gamma_geometric(3);
  CHECK(integrate_chow(e, 3) == 32);
}

TEST_CASE("R-polynomials on small families") {
  CHECK(r_poly_y(DeltaMatroid::create(1, {0})) == poly({1, 2, 1}));
  CHECK(r_poly_y(DeltaMatroid::create(1, {0, 1})) == poly({2, 2}));
  const DeltaMatroid d = three_singletons_family();
  CHECK(r_poly_y(d) == poly({4, 8, 4}));
  CHECK(r_poly_y_ogr(d) == poly({4, 8, 4}));
  CHECK(r_poly_orbit(d) == poly({4, 8, 4}));
  CHECK(r_poly_y(star_failure_family()) == poly({9, 16, 7}));
}

TEST_CASE("interlace through the Chow integral") {
  const DeltaMatroid d = three_singletons_family();
  CHECK(interlace_via_integral(d) == interlace_transform(d.interlace(), 3));
  CHECK(interlace_via_integral(d)(1) == 32);
  // (1+v)^1 Int((1-v)/(1+v)) for Int = 1 + v is 2.
  CHECK(interlace_transform(poly({1, 1}), 1) == poly({2}));
}

TEST_CASE("transfer between OGr and X") {
  for (const auto& d : all_delta_matroids(1)) CHECK(chi_transfer_check(d));
  CHECK(chi_transfer_check(three_singletons_family()));
}

TEST_CASE("results do not depend on seed or worker count") {
  const DeltaMatroid d = star_failure_family();
  EngineOptions a;
  EngineOptions b;
  b.seed = 12345;
  b.jobs = 3;
  CHECK(r_poly_y(d, a) == r_poly_y(d, b));
  CHECK(euler_char_X(k_polytope(d, true), a) == euler_char_X(k_polytope(d, true), b));
}

TEST_CASE("resource budgets") {
  EngineOptions tight;
  tight.budget.max_generators = 2;
  CHECK_THROWS_AS(r_poly_orbit(three_singletons_family(), tight), ResourceError);
}
