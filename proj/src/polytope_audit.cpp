#include "deltak/polytope_audit.hpp"

#include <set>

#include "deltak/enumerate.hpp"
#include "deltak/errors.hpp"
#include "deltak/lp.hpp"

namespace deltak {

VeryAmpleReport is_very_ample(const DeltaMatroid& d, LatticeKind lattice, const ToricBudget& budget) {
  VeryAmpleReport report;
  for (Subset s : d.feasible()) {
    const RationalCone cone = tangent_cone(d, s);
    if (cone.generators().empty()) continue;
    const auto gens = minimal_generators(cone.generators(), budget);
    for (const auto& h : hilbert_basis(cone, lattice)) {
      if (!member(h, gens, budget)) {
        report.very_ample = false;
        report.gaps.push_back({s, h});
      }
    }
  }
  return report;
}

bool is_normal_bounded(const DeltaMatroid& d, int level) {
  if (level < 2) throw InvalidInputError("normality level must be at least 2");
  const int n = d.n();
  std::vector<IntVec> verts;
  for (Subset s : d.feasible()) verts.push_back(indicator(n, s));
  std::set<IntVec> sums(verts.begin(), verts.end());
  for (int l = 2; l <= level; ++l) {
    std::set<IntVec> next;
    for (const auto& a : sums)
      for (const auto& v : verts) next.insert(a + v);
    sums = std::move(next);
    // Lattice points of lP inside the box [0, l]^n.
    IntVec x(n, 0);
    while (true) {
      if (!sums.count(x)) {
        // x in lP iff x = sum λ_v v with sum λ_v = l, λ >= 0.
        QMatrix A(n + 1, QVector(verts.size()));
        for (std::size_t j = 0; j < verts.size(); ++j) {
          for (int i = 0; i < n; ++i) A[i][j] = verts[j][i];
          A[n][j] = 1;
        }
        QVector b = to_qvector(x);
        b.push_back(l);
        if (solve_standard_lp(A, b, QVector(verts.size())).status == LpStatus::Optimal) return false;
      }
      int i = 0;
      while (i < n && x[i] == l) x[i++] = 0;
      if (i == n) break;
      ++x[i];
    }
  }
  return true;
}

StarSearchResult search_star_failures(int n, const EngineOptions& options) {
  if (n < 1 || n > 4) throw InvalidInputError("star search supports 1 <= n <= 4");
  std::set<std::vector<Subset>> seen;
  StarSearchResult result;
  enumerate_all(n, [&](const DeltaMatroid& d) {
    const DeltaMatroid canon = canonical_form(d);
    if (!seen.insert(canon.feasible()).second) return;
    ++result.checked;
    const UniPoly expected = UniPoly({Rational(1), Rational(1)}) * canon.interlace();
    try {
      const UniPoly got = r_poly_orbit(canon, options);
      if (got != expected) result.failures.push_back({canon, got, expected});
    } catch (const ResourceError& e) {
      result.errors.emplace_back(canon, e.what());
    }
  });
  return result;
}

}  // namespace deltak
