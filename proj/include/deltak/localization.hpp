#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "deltak/classes.hpp"
#include "deltak/delta_matroid.hpp"
#include "deltak/laurent.hpp"
#include "deltak/series.hpp"
#include "deltak/toric.hpp"
#include "deltak/unipoly.hpp"

namespace deltak {

/// Draws generic directions: distinct random odd integers in [1, 2^20].
class DirectionSource {
 public:
  explicit DirectionSource(std::uint64_t seed);
  Direction draw(int n);

 private:
  std::uint64_t state_;
};

struct EngineOptions {
  int jobs = 1;
  /// Independent directions that must give identical results.
  int directions = 3;
  std::uint64_t seed = 0x5eed2024ULL;
  ToricBudget budget;
};

/// One fixed-point contribution: numerators[j] / prod_d (1 - T^{-d}).
struct KTerm {
  std::vector<LaurentPoly> numerators;
  std::vector<IntVec> denominators;
};

/// Accumulates localization terms along one direction, keeping every
/// order from the deepest pole up to s^0 so cancellation can be checked.
class KSum {
 public:
  KSum(std::size_t outputs, Direction c);
  void add(const KTerm& term);
  void merge(const KSum& other);
  /// The s^0 coefficients; throws CancellationError if a negative order
  /// survived.
  std::vector<Rational> finish() const;

 private:
  std::size_t outputs_;
  Direction c_;
  std::vector<std::map<int, Rational>> acc_;
};

/// sum_terms numerators / Euler factors at T = 1, along direction c.
std::vector<Rational> localization_sum(const std::vector<KTerm>& terms, const Direction& c);

/// Runs eval over options.directions fresh generic directions (retrying a
/// direction on DirectionError up to 16 times) and insists they agree.
std::vector<Rational> across_directions(int n, const EngineOptions& options,
                                        const std::function<std::vector<Rational>(const Direction&)>& eval);

/// chi on X_{B_n} of several classes sharing the fixed-point loop:
/// numerators(w) returns one Laurent polynomial per output.
std::vector<Rational> euler_char_x_multi(
    int n, const std::function<std::vector<LaurentPoly>(const SignedPermutation&)>& numerators,
    const EngineOptions& options);

Rational euler_char_X(const XClass& k, const EngineOptions& options = {});

/// Degree map on A^n(X_{B_n}) applied to the degree-n part of expr.
Rational integrate_chow(const ChowExpr& expr, int n, const EngineOptions& options = {});

/// (1/2^n) ∫ ψ(k) (1 + γ + ... + γ^n)
Rational euler_char_HRR(const XClass& k, const EngineOptions& options = {});

/// chi on OGr(n; 2n+1) of cls times a fixed-point-wise twist (one per output).
std::vector<Rational> euler_char_ogr_multi(const OgrClass& cls,
                                           const std::function<std::vector<LaurentPoly>(Subset)>& twist,
                                           const EngineOptions& options = {});

/// sum_p chi(X, [P(D)] [∧^p Q_D^∨]) v^p
UniPoly r_poly_y(const DeltaMatroid& d, const EngineOptions& options = {});
/// Same polynomial computed on OGr from y(D) [O(1)] [∧^p Q^∨].
UniPoly r_poly_y_ogr(const DeltaMatroid& d, const EngineOptions& options = {});
/// sum_p chi(OGr, [O_{T.D}] [O(1)] [∧^p Q^∨]) v^p
UniPoly r_poly_orbit(const DeltaMatroid& d, const EngineOptions& options = {});

/// ∫ c(I_D^∨, v) (1 + γ + ... + γ^n) by node evaluation and interpolation.
UniPoly interlace_via_integral(const DeltaMatroid& d, const EngineOptions& options = {});
/// (1+v)^n Int_D((1-v)/(1+v)) expanded.
UniPoly interlace_transform(const UniPoly& interlace, int n);

/// chi(OGr, y(D) O(2) ∧^p Q^∨) == chi(X, [P̂(D)] ∧^p Q_D^∨) for all p.
bool chi_transfer_check(const DeltaMatroid& d, const EngineOptions& options = {});

}  // namespace deltak
