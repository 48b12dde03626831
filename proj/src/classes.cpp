#include "deltak/classes.hpp"

#include <algorithm>
#include <cstdlib>

#include "deltak/errors.hpp"
#include "deltak/fan.hpp"
#include "deltak/parallel.hpp"

namespace deltak {

namespace {

Series linear_form(const IntVec& m, const Direction& c, int order) {
  Series r(0, order + 1);
  if (order >= 1) r.set_coeff(1, pairing(m, c));
  return r;
}

// Removes one copy of each element of `sub` from `from`; false if some
// element is missing.
bool multiset_remove(std::vector<IntVec>& from, const std::vector<IntVec>& sub) {
  for (const auto& x : sub) {
    auto it = std::find(from.begin(), from.end(), x);
    if (it == from.end()) return false;
    from.erase(it);
  }
  return true;
}

LaurentPoly euler_product(int n, const std::vector<IntVec>& chars) {
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (const auto& v : chars) p *= LaurentPoly::one_minus(-v);
  return p;
}

}  // namespace

XClass x_constant(int n, const Rational& c) {
  return {n, [n, c](const SignedPermutation&) { return LaurentPoly::constant(n, c); }};
}

XClass operator*(const XClass& a, const XClass& b) {
  return {a.n, [a, b](const SignedPermutation& w) { return a.at(w) * b.at(w); }};
}

XClass operator+(const XClass& a, const XClass& b) {
  return {a.n, [a, b](const SignedPermutation& w) { return a.at(w) + b.at(w); }};
}

LaurentPoly polytope_character(int n, Subset s, bool doubled) {
  return LaurentPoly::monomial(doubled ? -signed_indicator(n, s) : -indicator(n, s));
}

std::vector<LaurentPoly> wedge_qdual_coefficients(int n, Subset s) {
  // Coefficients of a polynomial in v with Laurent coefficients.
  std::vector<LaurentPoly> coeffs{LaurentPoly::constant(n, 1), LaurentPoly::constant(n, 1)};
  const IntVec eb = signed_indicator(n, s);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = eb[i];
    const LaurentPoly t = LaurentPoly::monomial(e);
    std::vector<LaurentPoly> next(coeffs.size() + 1, LaurentPoly(n));
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      next[p] += coeffs[p];
      next[p + 1] += coeffs[p] * t;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

LaurentPoly isotropic_character(int n, Subset s) {
  LaurentPoly r(n);
  const IntVec eb = signed_indicator(n, s);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = eb[i];
    r.add_term(e, 1);
  }
  return r;
}

XClass k_polytope(const DeltaMatroid& d, bool doubled) {
  return {d.n(), [d, doubled](const SignedPermutation& w) {
            return polytope_character(d.n(), d.minimal_feasible(w), doubled);
          }};
}

XClass k_wedge_qdual(const DeltaMatroid& d, int p) {
  if (p < 0 || p > d.n() + 1) return x_constant(d.n(), 0);
  return {d.n(), [d, p](const SignedPermutation& w) {
            return wedge_qdual_coefficients(d.n(), d.minimal_feasible(w))[p];
          }};
}

XClass k_isotropic(const DeltaMatroid& d) {
  return {d.n(), [d](const SignedPermutation& w) { return isotropic_character(d.n(), d.minimal_feasible(w)); }};
}

XClass w_act(const XClass& f, const SignedPermutation& w) {
  const int n = f.n;
  std::vector<IntVec> images;
  for (int i = 1; i <= n; ++i) images.push_back(signed_unit(n, w(i)));
  const SignedPermutation winv = w.inverse();
  return {n, [f, images, winv](const SignedPermutation& wp) {
            return f.at(winv * wp).substitute_monomials(images);
          }};
}

ChowExpr ChowExpr::constant(const Rational& value) {
  return ChowExpr([value](const SignedPermutation&, const Direction&, int order) {
    return Series::constant(value, order + 1);
  });
}

ChowExpr ChowExpr::chern_isotropic(const DeltaMatroid& d, const Rational& v0, bool dual) {
  return ChowExpr([d, v0, dual](const SignedPermutation& w, const Direction& c, int order) {
    const int n = d.n();
    const IntVec eb = signed_indicator(n, d.minimal_feasible(w));
    Series r = Series::constant(1, order + 1);
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = eb[i];
      Series f = Series::constant(1, order + 1) + linear_form(e, c, order) * (dual ? -v0 : v0);
      r = r * f;
    }
    return r;
  });
}

ChowExpr ChowExpr::chern_quotient(const DeltaMatroid& d, bool dual) {
  return ChowExpr([d, dual](const SignedPermutation& w, const Direction& c, int order) {
    const int n = d.n();
    // Characters of C^{2n+1}: ±e_i and 0. Drop those of I_D.
    std::vector<IntVec> chars;
    for (int i = 1; i <= n; ++i) {
      chars.push_back(signed_unit(n, i));
      chars.push_back(signed_unit(n, -i));
    }
    const IntVec eb = signed_indicator(n, d.minimal_feasible(w));
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = eb[i];
      chars.erase(std::find(chars.begin(), chars.end(), e));
    }
    Series r = Series::constant(1, order + 1);
    for (const auto& e : chars)
      r = r * (Series::constant(1, order + 1) + linear_form(e, c, order) * (dual ? -1 : 1));
    return r;
  });
}

ChowExpr ChowExpr::trivial_bundle_chern(int n) {
  return ChowExpr([n](const SignedPermutation&, const Direction& c, int order) {
    Series r = Series::constant(1, order + 1);
    for (int i = 1; i <= n; ++i) {
      Series t = linear_form(signed_unit(n, i), c, order);
      r = r * (Series::constant(1, order + 1) - t * t);
    }
    return r;
  });
}

ChowExpr ChowExpr::gamma() {
  return ChowExpr([](const SignedPermutation& w, const Direction& c, int order) {
    return linear_form(signed_unit(w.n(), w(1)), c, order);
  });
}

ChowExpr ChowExpr::gamma_geometric(int n) {
  return ChowExpr([n](const SignedPermutation& w, const Direction& c, int order) {
    const Series g = linear_form(signed_unit(w.n(), w(1)), c, order);
    Series acc = Series::constant(1, order + 1);
    Series power = acc;
    for (int k = 1; k <= n; ++k) {
      power = power * g;
      acc += power;
    }
    return acc;
  });
}

ChowExpr ChowExpr::psi(const XClass& k) {
  return ChowExpr([k](const SignedPermutation& w, const Direction& c, int order) {
    return psi_substitute(k.at(w), c, order);
  });
}

ChowExpr operator+(const ChowExpr& a, const ChowExpr& b) {
  return ChowExpr([a, b](const SignedPermutation& w, const Direction& c, int order) {
    return a(w, c, order) + b(w, c, order);
  });
}

ChowExpr operator*(const ChowExpr& a, const ChowExpr& b) {
  return ChowExpr([a, b](const SignedPermutation& w, const Direction& c, int order) {
    return a(w, c, order) * b(w, c, order);
  });
}

ChowExpr ChowExpr::scaled(const Rational& k) const {
  ChowExpr self = *this;
  return ChowExpr([self, k](const SignedPermutation& w, const Direction& c, int order) {
    return self(w, c, order) * k;
  });
}

ChowExpr ChowExpr::pow(int k) const {
  ChowExpr self = *this;
  return ChowExpr([self, k](const SignedPermutation& w, const Direction& c, int order) {
    const Series base = self(w, c, order);
    Series r = Series::constant(1, order + 1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
  });
}

ChowExpr ChowExpr::inverse() const {
  ChowExpr self = *this;
  return ChowExpr([self](const SignedPermutation& w, const Direction& c, int order) {
    return self(w, c, order).inverse();
  });
}

OgrClass ogr_structure_sheaf(int n) {
  OgrClass cls{n, {}};
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    cls.at[s].push_back({LaurentPoly::constant(n, 1), ogr_chart_characters(n, s)});
  return cls;
}

OgrClass ogr_y_class(const DeltaMatroid& d) {
  const int n = d.n();
  OgrClass cls{n, {}};
  for (Subset s : d.feasible()) {
    const auto chars = ogr_chart_characters(n, s);
    const HilbertSeriesRep h = cone_hilbert(tangent_cone(d, s));
    for (const auto& piece : h.pieces) {
      auto rest = chars;
      if (!multiset_remove(rest, piece.denominators))
        throw ConsistencyError("pole not cleared: tangent cone ray outside the chart characters at " +
                               subset_to_string(s));
    }
    cls.at[s] = h.pieces;
  }
  return cls;
}

OgrClass ogr_orbit_class(const DeltaMatroid& d, const ToricBudget& budget, int jobs) {
  const int n = d.n();
  const auto& feasible = d.feasible();
  std::vector<std::vector<HilbertPiece>> pieces(feasible.size());
  parallel_chunks(feasible.size(), std::max(1, jobs), [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const Subset s = feasible[k];
      std::vector<IntVec> diffs;
      for (Subset f : feasible)
        if (f != s) diffs.push_back(indicator(n, f) - indicator(n, s));
      if (diffs.empty()) {
        pieces[k].push_back({LaurentPoly::constant(n, 1), {}});
        continue;
      }
      try {
        const auto gens = minimal_generators(diffs, budget);
        pieces[k] = semigroup_hilbert(gens, budget).pieces;
      } catch (const ResourceError& e) {
        throw ResourceError(std::string(e.what()) + " (vertex " + subset_to_string(s) + ")");
      }
    }
  });
  OgrClass cls{n, {}};
  for (std::size_t k = 0; k < feasible.size(); ++k) cls.at[feasible[k]] = std::move(pieces[k]);
  return cls;
}

LaurentPoly ogr_o1(int n, Subset s) { return LaurentPoly::monomial(-indicator(n, s)); }

LaurentPoly ogr_o2(int n, Subset s) { return LaurentPoly::monomial(-signed_indicator(n, s)); }

std::optional<LaurentPoly> ogr_restriction(const OgrClass& cls, Subset s) {
  auto it = cls.at.find(s);
  if (it == cls.at.end()) return LaurentPoly(cls.n);
  const auto chars = ogr_chart_characters(cls.n, s);
  LaurentPoly total(cls.n);
  for (const auto& piece : it->second) {
    auto rest = chars;
    if (multiset_remove(rest, piece.denominators)) {
      total += piece.numerator * euler_product(cls.n, rest);
      continue;
    }
    // Generic denominators: divide the cleared numerator exactly.
    LaurentPoly num = piece.numerator * euler_product(cls.n, chars);
    for (const auto& a : piece.denominators) {
      auto q = divide_one_minus(num, -a);
      if (!q) return std::nullopt;
      num = std::move(*q);
    }
    total += num;
  }
  return total;
}

bool ogr_equal_at(const OgrClass& a, const OgrClass& b, Subset s) {
  const int n = a.n;
  static const std::vector<HilbertPiece> empty;
  auto ia = a.at.find(s);
  auto ib = b.at.find(s);
  const auto& pa = ia == a.at.end() ? empty : ia->second;
  const auto& pb = ib == b.at.end() ? empty : ib->second;
  // Common denominator: multiset union of all piece denominators.
  std::vector<IntVec> common;
  for (const auto* side : {&pa, &pb}) {
    for (const auto& piece : *side) {
      auto have = common;
      for (const auto& d : piece.denominators) {
        auto it = std::find(have.begin(), have.end(), d);
        if (it != have.end())
          have.erase(it);
        else
          common.push_back(d);
      }
    }
  }
  auto numerator = [&](const std::vector<HilbertPiece>& pieces) {
    LaurentPoly total(n);
    for (const auto& piece : pieces) {
      auto rest = common;
      multiset_remove(rest, piece.denominators);
      total += piece.numerator * euler_product(n, rest);
    }
    return total;
  };
  return numerator(pa) == numerator(pb);
}

}  // namespace deltak
