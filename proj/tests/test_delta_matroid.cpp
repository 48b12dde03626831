#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "deltak/delta_matroid.hpp"
#include "deltak/enumerate.hpp"
#include "deltak/errors.hpp"
#include "deltak/realization.hpp"
#include "deltak/selftest.hpp"

using namespace deltak;

namespace {

Subset S(std::vector<int> e) { return subset_from_elements(e); }

std::vector<Subset> fam(std::vector<std::vector<int>> f) {
  std::vector<Subset> out;
  for (auto& e : f) out.push_back(S(e));
  std::sort(out.begin(), out.end());
  return out;
}

// Int_D by the definition, with distances by popcount.
UniPoly interlace_oracle(const DeltaMatroid& d) {
  std::vector<Rational> c(d.n() + 1);
  for (Subset s = 0; s < (Subset{1} << d.n()); ++s) {
    int best = d.n();
    for (Subset f : d.feasible()) best = std::min(best, std::popcount(s ^ f));
    c[best] += 1;
  }
  return UniPoly(c);
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(3, fam({{1, 2, 3}, {1}, {2}, {3}})).valid);
  CHECK(validate(3, fam({{}})).valid);
  const auto r = validate(3, fam({{}, {1, 2, 3}}));
  CHECK_FALSE(r.valid);
  REQUIRE(r.bad_edge.has_value());
  CHECK(r.bad_edge->first == 0);
  CHECK(r.bad_edge->second == S({1, 2, 3}));
  CHECK_THROWS_AS(validate(3, {}), InvalidInputError);
  CHECK_THROWS_AS(DeltaMatroid::create(2, fam({{}, {1, 2, 3}})), InvalidInputError);
}

TEST_CASE("polytope edges agree with the symmetric exchange axiom") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (1 << n)); ++mask) {
      std::vector<Subset> f;
      for (Subset s = 0; s < (Subset{1} << n); ++s)
        if (mask >> s & 1) f.push_back(s);
      CHECK(validate(n, f).valid == satisfies_symmetric_exchange(n, f));
    }
  }
}

TEST_CASE("enumeration counts and validity") {
  const auto one = all_delta_matroids(1);
  CHECK(one.size() == 3);
  CHECK(all_delta_matroids(2).size() == 15);
  const auto three = all_delta_matroids(3);
  CHECK(three.size() == 155);
  CHECK(std::find(three.begin(), three.end(), three_singletons_family()) != three.end());
  for (const auto& d : three) CHECK(satisfies_symmetric_exchange(3, d.feasible()));
  CHECK_THROWS_AS(enumerate_all(5, [](const DeltaMatroid&) {}), InvalidInputError);
}

TEST_CASE("lattice distance and interlace polynomial") {
  const DeltaMatroid d = three_singletons_family();
  CHECK(d.lattice_distance(0) == 1);
  for (Subset f : d.feasible()) CHECK(d.lattice_distance(f) == 0);
  CHECK(d.interlace() == UniPoly({Rational(4), Rational(4)}));
  CHECK(star_failure_family().interlace() == UniPoly({Rational(9), Rational(7)}));
  const DeltaMatroid empty = DeltaMatroid::create(3, {0});
  CHECK(empty.lattice_distance(S({1, 2, 3})) == 3);
  CHECK(empty.interlace() == UniPoly({Rational(1), Rational(3), Rational(3), Rational(1)}));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& dm : all_delta_matroids(n)) {
      const UniPoly p = dm.interlace();
      CHECK(p == interlace_oracle(dm));
      CHECK(p(0) == static_cast<long>(dm.size()));
      CHECK(p(1) == (1 << n));
    }
  }
}

TEST_CASE("w-minimal feasible sets") {
  const DeltaMatroid seg = DeltaMatroid::create(1, {0, 1});
  CHECK(seg.minimal_feasible(SignedPermutation({1})) == 0);
  CHECK(seg.minimal_feasible(SignedPermutation({-1})) == 1);
  CHECK(three_singletons_family().minimal_feasible(SignedPermutation({-1, -2, -3})) == S({1, 2, 3}));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : all_delta_matroids(n)) {
      for_each_signed_permutation(n, [&](const SignedPermutation& w) {
        CHECK(d.minimal_feasible(w) == d.minimal_feasible_alt(w));
      });
    }
  }
}

TEST_CASE("matrix realizations") {
  // Rows of the isotropic subspace with a, b, c = 1, 2, 3; columns 3̄ 2̄ 1̄ 0 1 2 3.
  GroundMatrix m{Field::Rationals, 3, {}};
  auto row = [](std::vector<long> v) { return std::vector<Rational>(v.begin(), v.end()); };
  m.rows = {row({2, 1, 0, 0, 1, 0, 0}), row({3, 0, -1, 0, 0, 1, 0}), row({0, -3, -2, 0, 0, 0, 1})};
  CHECK(from_matrix(m) == three_singletons_family());

  GroundMatrix one{Field::Rationals, 1, {row({0, 0, 1})}};
  CHECK(from_matrix(one).feasible() == fam({{1}}));

  GroundMatrix bad{Field::Rationals, 1, {row({0, 1, 1})}};
  CHECK(isotropy_witness(bad).has_value());
  CHECK_THROWS_AS(from_matrix(bad), InvalidInputError);
}

TEST_CASE("graph realizations") {
  CHECK(from_graph(2, {{1, 2}}).first.feasible() == fam({{}, {1, 2}}));
  CHECK(from_graph(3, {{1, 2}, {1, 3}, {2, 3}}).first.feasible() == fam({{}, {1, 2}, {1, 3}, {2, 3}}));
  const auto [g, m] = from_graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
  CHECK(g.size() == 32);
  CHECK(from_matrix(m) == g);
}

TEST_CASE("hyperoctahedral action") {
  const DeltaMatroid d = three_singletons_family();
  CHECK(act(SignedPermutation::identity(3), d) == d);
  const SignedPermutation w({-2, 3, 1});
  const SignedPermutation u({3, -1, -2});
  CHECK(act(u * w, d) == act(u, act(w, d)));
  std::set<std::vector<Subset>> orbit;
  for_each_signed_permutation(3, [&](const SignedPermutation& x) { orbit.insert(act(x, d).feasible()); });
  CHECK(canonical_form(d).feasible() == *orbit.begin());
  CHECK(canonical_form(act(w, d)) == canonical_form(d));
}
