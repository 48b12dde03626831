#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "deltak/cone.hpp"
#include "deltak/delta_matroid.hpp"
#include "deltak/laurent.hpp"
#include "deltak/series.hpp"
#include "deltak/signed_permutation.hpp"
#include "deltak/toric.hpp"

namespace deltak {

// ---------------------------------------------------------------------------
// Equivariant K-classes on the type B permutohedral variety, given by their
// restrictions to the fixed points pt_w. Evaluated lazily so that large n
// never materializes all 2^n n! entries.

struct XClass {
  int n = 0;
  std::function<LaurentPoly(const SignedPermutation&)> at;
};

XClass x_constant(int n, const Rational& c);
XClass operator*(const XClass& a, const XClass& b);
XClass operator+(const XClass& a, const XClass& b);

/// T^{-e_{s}} (vertex of P(D)) or T^{-e_B} (vertex of the doubled polytope).
LaurentPoly polytope_character(int n, Subset s, bool doubled);
/// Coefficients p = 0..n+1 of (1+v) prod_{b in B} (1 + T^{e_b} v).
std::vector<LaurentPoly> wedge_qdual_coefficients(int n, Subset s);
/// sum_{b in B} T^{e_b}
LaurentPoly isotropic_character(int n, Subset s);

XClass k_polytope(const DeltaMatroid& d, bool doubled);
/// p outside [0, n+1] gives the zero class.
XClass k_wedge_qdual(const DeltaMatroid& d, int p);
XClass k_isotropic(const DeltaMatroid& d);

/// (w.f)_{w'}(T_1..T_n) = f_{w^{-1} w'}(T_{w(1)}, ..., T_{w(n)}), T_ī = T_i^{-1}.
XClass w_act(const XClass& f, const SignedPermutation& w);

// ---------------------------------------------------------------------------
// Chow-side expressions, evaluated per fixed point along t = c s.

class ChowExpr {
 public:
  using Eval = std::function<Series(const SignedPermutation&, const Direction&, int order)>;

  explicit ChowExpr(Eval eval) : eval_(std::make_shared<Eval>(std::move(eval))) {}

  /// Exact on [0, order].
  Series operator()(const SignedPermutation& w, const Direction& c, int order) const {
    return (*eval_)(w, c, order);
  }

  static ChowExpr constant(const Rational& value);
  /// prod_{b in B_w} (1 ± v0 t_b), sign - when dual.
  static ChowExpr chern_isotropic(const DeltaMatroid& d, const Rational& v0, bool dual);
  /// Product over the characters of C^{2n+1} not used by I_D (dual: negated).
  static ChowExpr chern_quotient(const DeltaMatroid& d, bool dual);
  /// prod_k (1 - t_k^2)
  static ChowExpr trivial_bundle_chern(int n);
  /// t_{w(1)}, signed.
  static ChowExpr gamma();
  /// 1 + γ + ... + γ^n
  static ChowExpr gamma_geometric(int n);
  /// ψ image: T_i -> (1 + t_i)/(1 - t_i).
  static ChowExpr psi(const XClass& k);

  friend ChowExpr operator+(const ChowExpr& a, const ChowExpr& b);
  friend ChowExpr operator*(const ChowExpr& a, const ChowExpr& b);
  ChowExpr scaled(const Rational& c) const;
  ChowExpr pow(int k) const;
  ChowExpr inverse() const;

 private:
  std::shared_ptr<Eval> eval_;
};

// ---------------------------------------------------------------------------
// Classes on OGr(n; 2n+1). Each fixed point stores f_B / prod_{v in T_B}
// (1 - T^{-v}) as a sum of pieces, so Euler factors cancel symbolically.

struct OgrClass {
  int n = 0;
  /// Missing fixed points carry the zero class.
  std::map<Subset, std::vector<HilbertPiece>> at;
};

OgrClass ogr_structure_sheaf(int n);
OgrClass ogr_y_class(const DeltaMatroid& d);
/// Vertices are processed on `jobs` threads.
OgrClass ogr_orbit_class(const DeltaMatroid& d, const ToricBudget& budget = {}, int jobs = 1);

/// Integral lift T^{-e_{B ∩ [n]}} of O(1) and its square T^{-e_B}.
LaurentPoly ogr_o1(int n, Subset s);
LaurentPoly ogr_o2(int n, Subset s);

/// f_B itself, when the pieces times the Euler factor form a Laurent
/// polynomial; nullopt otherwise.
std::optional<LaurentPoly> ogr_restriction(const OgrClass& cls, Subset s);

/// Equality at B as rational functions.
bool ogr_equal_at(const OgrClass& a, const OgrClass& b, Subset s);

}  // namespace deltak
