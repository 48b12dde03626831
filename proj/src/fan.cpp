#include "deltak/fan.hpp"

#include <cstdlib>

#include "deltak/errors.hpp"
#include "deltak/linalg.hpp"

namespace deltak {

std::vector<IntVec> dual_basis(const SignedPermutation& w) {
  const int n = w.n();
  std::vector<IntVec> m(n, IntVec(n, 0));
  for (int k = 1; k <= n; ++k) {
    const int a = w(k);
    m[k - 1][std::abs(a) - 1] += a > 0 ? 1 : -1;
    if (k < n) {
      const int b = w(k + 1);
      m[k - 1][std::abs(b) - 1] -= b > 0 ? 1 : -1;
    }
  }
  return m;
}

FixedPointData cone_data(const SignedPermutation& w) {
  const int n = w.n();
  FixedPointData d{w, {}, {}};
  IntVec u(n, 0);
  for (int k = 1; k <= n; ++k) {
    u = u + signed_unit(n, w(k));
    d.generators.push_back(u);
  }
  // Rows of (U^T)^{-1} pair with the generators to the identity.
  QMatrix ut(n, QVector(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) ut[i][k] = d.generators[k][i];
  const Rational det = determinant(ut);
  if (det != 1 && det != -1) throw ConsistencyError("cone generators are not unimodular at " + w.to_string());
  auto inv = inverse(ut);
  for (int j = 0; j < n; ++j) {
    IntVec mj(n);
    for (int i = 0; i < n; ++i) {
      // Row j of (U^T)^{-1}: m_j = sum_i inv[j][i] e_i.
      const Rational& x = (*inv)[j][i];
      if (!is_integer(x)) throw ConsistencyError("dual basis is not integral at " + w.to_string());
      mj[i] = static_cast<int>(x.get_num().get_si());
    }
    d.dual.push_back(std::move(mj));
  }
  return d;
}

std::vector<MomentEdge> moment_edges(const SignedPermutation& w) {
  const int n = w.n();
  std::vector<MomentEdge> edges;
  for (int i = 1; i <= n; ++i) {
    IntVec label = i < n ? signed_unit(n, w(i)) - signed_unit(n, w(i + 1)) : signed_unit(n, w(n));
    edges.push_back({w, w.times_simple(i), i, std::move(label)});
  }
  return edges;
}

std::vector<IntVec> ogr_chart_characters(int n, Subset s) {
  auto sgn = [&](int i) { return ((s >> (i - 1)) & 1) ? 1 : -1; };
  std::vector<IntVec> chars;
  for (int i = 1; i <= n; ++i) {
    IntVec v(n, 0);
    v[i - 1] = -sgn(i);
    chars.push_back(std::move(v));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      IntVec v(n, 0);
      v[i - 1] = -sgn(i);
      v[j - 1] = -sgn(j);
      chars.push_back(std::move(v));
    }
  }
  return chars;
}

std::vector<OgrEdge> ogr_edges(int n, Subset s) {
  std::vector<OgrEdge> edges;
  for (const auto& v : ogr_chart_characters(n, s)) {
    Subset t = s;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) t ^= Subset{1} << i;
    edges.push_back({s, t, v});
  }
  return edges;
}

GkmResult gkm_check_x(int n, const std::function<LaurentPoly(const SignedPermutation&)>& cls) {
  GkmResult result;
  for_each_signed_permutation(n, [&](const SignedPermutation& w) {
    if (!result.ok) return;
    const LaurentPoly fw = cls(w);
    for (const auto& e : moment_edges(w)) {
      if (!(w < e.to)) continue;
      const LaurentPoly diff = fw - cls(e.to);
      if (!divisible_by(diff, e.label)) {
        result.ok = false;
        result.violation = "edge " + w.to_string() + " -- " + e.to.to_string() + " label " + to_string(e.label);
        return;
      }
    }
  });
  return result;
}

GkmResult gkm_check_ogr(int n, const std::function<LaurentPoly(Subset)>& cls) {
  GkmResult result;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const LaurentPoly fs = cls(s);
    for (const auto& e : ogr_edges(n, s)) {
      if (e.to < s) continue;
      if (!divisible_by(fs - cls(e.to), e.label)) {
        result.ok = false;
        result.violation = "edge " + subset_to_string(s) + " -- " + subset_to_string(e.to) + " label " + to_string(e.label);
        return result;
      }
    }
  }
  return result;
}

}  // namespace deltak
