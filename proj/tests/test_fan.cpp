#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "deltak/classes.hpp"
#include "deltak/enumerate.hpp"
#include "deltak/fan.hpp"

using namespace deltak;

TEST_CASE("group orders and unranking") {
  CHECK(group_order(1) == 2);
  CHECK(group_order(2) == 8);
  CHECK(group_order(3) == 48);
  for (int n = 1; n <= 4; ++n) {
    std::set<SignedPermutation> seen;
    for (std::uint64_t i = 0; i < group_order(n); ++i) seen.insert(unrank_signed_permutation(n, i));
    CHECK(seen.size() == group_order(n));
  }
  const SignedPermutation w({-2, 3, 1});
  CHECK(w * w.inverse() == SignedPermutation::identity(3));
  CHECK(w.apply(-1) == 2);
}

TEST_CASE("dual basis examples") {
  CHECK(dual_basis(SignedPermutation({1, 2})) == std::vector<IntVec>{{1, -1}, {0, 1}});
  CHECK(dual_basis(SignedPermutation({-2, 1})) == std::vector<IntVec>{{-1, -1}, {1, 0}});
  CHECK(dual_basis(SignedPermutation({-1})) == std::vector<IntVec>{{-1}});
}

TEST_CASE("closed-form dual basis matches exact inversion") {
  for (int n = 1; n <= 5; ++n) {
    for_each_signed_permutation(n, [&](const SignedPermutation& w) {
      const FixedPointData data = cone_data(w);
      CHECK(data.dual == dual_basis(w));
      // <m_j, u_k> = δ_jk, checked directly.
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) CHECK(dot(data.dual[j], data.generators[k]) == (j == k ? 1 : 0));
    });
  }
}

TEST_CASE("moment graph edges") {
  for (int n = 1; n <= 3; ++n) {
    for_each_signed_permutation(n, [&](const SignedPermutation& w) {
      const auto edges = moment_edges(w);
      REQUIRE(edges.size() == static_cast<std::size_t>(n));
      const auto gens = cone_data(w).generators;
      for (const auto& e : edges) {
        CHECK(e.to == w.times_simple(e.simple_index));
        // The label is normal to the wall shared by the two cones.
        for (int k = 1; k <= n; ++k)
          if (k != e.simple_index) CHECK(dot(e.label, gens[k - 1]) == 0);
        CHECK(dot(e.label, gens[e.simple_index - 1]) != 0);
      }
    });
  }
}

TEST_CASE("OGr chart data") {
  for (int n = 1; n <= 4; ++n) {
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
      CHECK(ogr_chart_characters(n, s).size() == static_cast<std::size_t>(n * (n + 1) / 2));
      for (const auto& e : ogr_edges(n, s)) {
        const IntVec target = signed_indicator(n, s) + scaled(e.label, 2);
        CHECK(target == signed_indicator(n, e.to));
      }
    }
  }
}

TEST_CASE("GKM congruences") {
  CHECK(gkm_check_x(3, [](const SignedPermutation&) { return LaurentPoly::constant(3, 1); }).ok);
  const DeltaMatroid seg = DeltaMatroid::create(1, {0, 1});
  CHECK(gkm_check_x(1, k_polytope(seg, false).at).ok);
  // (1, T^2 + T) is not a class: at T = 1 the entries are 1 and 2.
  const auto bad = [](const SignedPermutation& w) {
    return w(1) > 0 ? LaurentPoly::constant(1, 1) : LaurentPoly::monomial({2}) + LaurentPoly::monomial({1});
  };
  CHECK_FALSE(gkm_check_x(1, bad).ok);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : all_delta_matroids(n)) {
      CHECK(gkm_check_x(n, k_polytope(d, false).at).ok);
      CHECK(gkm_check_x(n, k_polytope(d, true).at).ok);
      CHECK(gkm_check_x(n, k_isotropic(d).at).ok);
      for (int p = 0; p <= n + 1; ++p) CHECK(gkm_check_x(n, k_wedge_qdual(d, p).at).ok);
    }
    CHECK(gkm_check_ogr(n, [n](Subset s) { return ogr_o1(n, s); }).ok);
    CHECK(gkm_check_ogr(n, [n](Subset s) { return ogr_o2(n, s); }).ok);
  }
}
