#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltak/classes.hpp"
#include "deltak/enumerate.hpp"
#include "deltak/selftest.hpp"

using namespace deltak;

namespace {

LaurentPoly T(const IntVec& e) { return LaurentPoly::monomial(e); }
LaurentPoly one(int n) { return LaurentPoly::constant(n, 1); }

const SignedPermutation kId1({1});
const SignedPermutation kBar1({-1});

}  // namespace

TEST_CASE("polytope classes on the segment") {
  const DeltaMatroid seg = DeltaMatroid::create(1, {0, 1});
  const XClass p = k_polytope(seg, false);
  CHECK(p.at(kId1) == one(1));
  CHECK(p.at(kBar1) == T({-1}));
  const XClass q = k_polytope(seg, true);
  CHECK(q.at(kId1) == T({1}));
  CHECK(q.at(kBar1) == T({-1}));
}

TEST_CASE("wedge powers of the dual quotient") {
  const DeltaMatroid seg = DeltaMatroid::create(1, {0, 1});
  CHECK(k_wedge_qdual(seg, 0).at(kId1) == one(1));
  CHECK(k_wedge_qdual(seg, 1).at(kId1) == one(1) + T({-1}));
  CHECK(k_wedge_qdual(seg, 1).at(kBar1) == one(1) + T({1}));
  CHECK(k_wedge_qdual(seg, 5).at(kId1).is_zero());
  const DeltaMatroid d = three_singletons_family();
  for_each_signed_permutation(3, [&](const SignedPermutation& w) {
    // Top wedge is prod_{b in B_w} T^{e_b}.
    LaurentPoly top = T(signed_indicator(3, d.minimal_feasible(w)));
    CHECK(k_wedge_qdual(d, 4).at(w) == top);
    // Coefficients sum to 2^{n+1} at T = 1.
    Rational total = 0;
    for (int p = 0; p <= 4; ++p) total += k_wedge_qdual(d, p).at(w).evaluate_at_one();
    CHECK(total == 16);
  });
}

TEST_CASE("Weyl action") {
  const DeltaMatroid d = three_singletons_family();
  const XClass p = k_polytope(d, false);
  const XClass same = w_act(p, SignedPermutation::identity(3));
  for_each_signed_permutation(3, [&](const SignedPermutation& w) { CHECK(same.at(w) == p.at(w)); });
  const SignedPermutation u({2, -3, 1});
  const XClass moved = w_act(p, u);
  const XClass back = w_act(moved, u.inverse());
  for_each_signed_permutation(3, [&](const SignedPermutation& w) { CHECK(back.at(w) == p.at(w)); });
}

TEST_CASE("Chern classes along a direction") {
  const DeltaMatroid empty = DeltaMatroid::create(1, {0});
  const Direction c{3};
  CHECK(ChowExpr::chern_isotropic(empty, 0, true)(kId1, c, 1).agrees_with(Series::constant(1, 2)));
  for (const auto& w : {kId1, kBar1}) {
    const Series got = ChowExpr::chern_isotropic(empty, 1, true)(w, c, 1);
    CHECK(got.coeff(0) == 1);
    CHECK(got.coeff(1) == 3);
  }
  // gamma = t_{w(1)}
  const Series g = ChowExpr::gamma()(SignedPermutation({-2, 1}), Direction{5, 7}, 2);
  CHECK(g.coeff(1) == -7);
}

TEST_CASE("OGr classes") {
  const DeltaMatroid seg = DeltaMatroid::create(1, {0, 1});
  const OgrClass y = ogr_y_class(seg);
  const OgrClass orbit = ogr_orbit_class(seg);
  for (Subset s = 0; s < 2; ++s) CHECK(ogr_equal_at(y, orbit, s));

  const DeltaMatroid single = DeltaMatroid::create(2, {1});
  const OgrClass ys = ogr_y_class(single);
  const OgrClass os = ogr_orbit_class(single);
  for (Subset s = 0; s < 4; ++s) CHECK(ogr_equal_at(ys, os, s));

  const DeltaMatroid d = three_singletons_family();
  const OgrClass o = ogr_orbit_class(d);
  const Subset v = subset_from_elements({1});
  REQUIRE(o.at.at(v).size() == 1);
  CHECK(o.at.at(v)[0].numerator == one(3));
  CHECK(o.at.at(v)[0].denominators.size() == 3);
  CHECK_FALSE(ogr_equal_at(ogr_y_class(d), o, v));

  // The structure sheaf restricts to 1 at every fixed point.
  const OgrClass str = ogr_structure_sheaf(3);
  for (Subset s = 0; s < 8; ++s) {
    auto r = ogr_restriction(str, s);
    REQUIRE(r.has_value());
    CHECK(*r == one(3));
  }
}
