#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "deltak/cone.hpp"
#include "deltak/errors.hpp"
#include "deltak/lp.hpp"
#include "deltak/polytope_audit.hpp"
#include "deltak/selftest.hpp"
#include "deltak/toric.hpp"

using namespace deltak;

namespace {

LaurentPoly T(const IntVec& e) { return LaurentPoly::monomial(e); }

// sum of T^{-m} over m in NA with <l, m> <= level, by breadth-first sums.
LaurentPoly semigroup_oracle(const std::vector<IntVec>& A, const IntVec& l, int level) {
  std::set<IntVec> seen{IntVec(l.size(), 0)};
  std::vector<IntVec> frontier{IntVec(l.size(), 0)};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& m : frontier)
      for (const auto& a : A) {
        const IntVec s = m + a;
        if (dot(l, s) <= level && seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  LaurentPoly out(static_cast<int>(l.size()));
  for (const auto& m : seen) out += T(-m);
  return out;
}

// Lattice points of the cone with <l, m> <= level, by box search and LP.
LaurentPoly cone_oracle(const std::vector<IntVec>& gens, const IntVec& l, int level, int box) {
  const int d = static_cast<int>(l.size());
  LaurentPoly out(d);
  IntVec x(d, -box);
  while (true) {
    if (dot(l, x) <= level && in_cone(gens, x)) out += T(-x);
    int i = 0;
    while (i < d && x[i] == box) x[i++] = -box;
    if (i == d) break;
    ++x[i];
  }
  return out;
}

bool contains(const std::vector<IntVec>& v, const IntVec& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

const std::vector<IntVec> kFreeTriple{{-1, 1, 0}, {-1, 0, 1}, {0, 1, 1}};

}  // namespace

TEST_CASE("tangent cones") {
  const DeltaMatroid d = three_singletons_family();
  const auto gens = tangent_cone(d, subset_from_elements({1})).generators();
  CHECK(gens.size() == 3);
  for (const auto& g : kFreeTriple) CHECK(contains(gens, g));
  CHECK(tangent_cone(DeltaMatroid::create(2, {1}), 1).generators().empty());
  CHECK(tangent_cone(DeltaMatroid::create(1, {0, 1}), 0).generators() == std::vector<IntVec>{{1}});
}

TEST_CASE("cone Hilbert series") {
  const HilbertSeriesRep h1 = cone_hilbert(RationalCone(1, {{1}}));
  REQUIRE(h1.pieces.size() == 1);
  CHECK(h1.pieces[0].numerator == LaurentPoly::constant(1, 1));

  const std::vector<IntVec> g2{{1, 0}, {1, 2}};
  const HilbertSeriesRep h2 = cone_hilbert(RationalCone(2, g2));
  REQUIRE(h2.pieces.size() == 1);
  CHECK(h2.pieces[0].numerator == LaurentPoly::constant(2, 1) + T({-1, -1}));
  CHECK(truncate_series(h2, {1, 0}, 12) == cone_oracle(g2, {1, 0}, 12, 24));

  const HilbertSeriesRep h3 = cone_hilbert(RationalCone(3, kFreeTriple));
  bool found = false;
  for (const auto& p : h3.pieces) found = found || p.numerator.coefficient({1, -1, -1}) != 0;
  CHECK(found);
  const IntVec l = positive_grading(kFreeTriple, 3);
  CHECK(truncate_series(h3, l, 5) == cone_oracle(kFreeTriple, l, 5, 10));
}

TEST_CASE("Hilbert bases") {
  const auto hb = hilbert_basis(RationalCone(2, {{1, 0}, {1, 2}}), LatticeKind::Standard);
  CHECK(hb.size() == 3);
  for (const IntVec& v : std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}}) CHECK(contains(hb, v));
  const auto unit = hilbert_basis(RationalCone(2, {{1, 0}, {0, 1}}), LatticeKind::Standard);
  CHECK(unit.size() == 2);
  const auto hb3 = hilbert_basis(RationalCone(3, kFreeTriple), LatticeKind::Standard);
  CHECK(contains(hb3, {-1, 1, 1}));
  // In the lattice spanned by the generators the cone is unimodular.
  CHECK(hilbert_basis(RationalCone(3, kFreeTriple), LatticeKind::VertexSpan).size() == 3);
}

TEST_CASE("semigroup Hilbert series by toric Groebner bases") {
  const HilbertSeriesRep a = semigroup_hilbert({{2}, {3}});
  REQUIRE(a.pieces.size() == 1);
  CHECK(a.pieces[0].numerator == LaurentPoly::constant(1, 1) - T({-6}));
  CHECK(truncate_series(a, {1}, 20) == semigroup_oracle({{2}, {3}}, {1}, 20));

  const HilbertSeriesRep b = semigroup_hilbert({{1, 0}, {0, 1}, {1, 1}});
  CHECK(b.pieces[0].numerator == LaurentPoly::constant(2, 1) - T({-1, -1}));

  const HilbertSeriesRep c = semigroup_hilbert(kFreeTriple);
  CHECK(c.pieces[0].numerator == LaurentPoly::constant(3, 1));

  const std::vector<std::vector<IntVec>> cases{
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{3, 0}, {2, 1}, {0, 3}},
      {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}},
      {{2, 0, 1}, {0, 2, 1}, {1, 1, 1}, {1, 0, 2}}};
  for (const auto& A : cases) {
    const IntVec l = positive_grading(A, static_cast<int>(A[0].size()));
    CHECK(truncate_series(semigroup_hilbert(A), l, 12) == semigroup_oracle(A, l, 12));
  }
  CHECK_THROWS_AS(semigroup_hilbert({{1}, {-1}}), InvalidInputError);
}

TEST_CASE("membership") {
  CHECK_FALSE(member({-1, 1, 1}, kFreeTriple));
  for (const auto& g : kFreeTriple) CHECK(member(g, kFreeTriple));
  CHECK(member({-2, 1, 1}, kFreeTriple));
  CHECK_FALSE(member({1}, {{2}, {3}}));
  CHECK(member({7}, {{2}, {3}}));
  std::vector<IntVec> edges;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}}) {
    IntVec e(7, 0);
    e[i - 1] = e[j - 1] = 1;
    edges.push_back(e);
  }
  CHECK_FALSE(member({1, 1, 1, 0, 1, 1, 1}, edges));
  CHECK(member({2, 2, 2, 0, 2, 2, 2}, edges));
}

TEST_CASE("minimal generators") {
  CHECK(minimal_generators({{1}, {2}, {3}}) == std::vector<IntVec>{{1}});
  CHECK(minimal_generators({{2}, {3}, {5}, {0}}).size() == 2);
}

TEST_CASE("very ampleness and normality") {
  CHECK(is_very_ample(DeltaMatroid::create(1, {0, 1}), LatticeKind::Standard).very_ample);
  const VeryAmpleReport r = is_very_ample(three_singletons_family(), LatticeKind::Standard);
  CHECK_FALSE(r.very_ample);
  bool witness = false;
  for (const auto& g : r.gaps) witness = witness || (g.vertex == subset_from_elements({1}) && g.point == IntVec{-1, 1, 1});
  CHECK(witness);
  CHECK(is_very_ample(three_singletons_family(), LatticeKind::VertexSpan).very_ample);

  CHECK(is_normal_bounded(DeltaMatroid::create(1, {0, 1}), 3));
  CHECK(is_normal_bounded(DeltaMatroid::create(2, {0, 1, 2, 3}), 3));
  // (1,1,1) lies in 2P but is no sum of two vertices.
  CHECK_FALSE(is_normal_bounded(three_singletons_family(), 2));
  CHECK_THROWS_AS(is_normal_bounded(three_singletons_family(), 1), InvalidInputError);
}
