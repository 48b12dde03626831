#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltak/cone.hpp"
#include "deltak/delta_matroid.hpp"
#include "deltak/localization.hpp"
#include "deltak/toric.hpp"

namespace deltak {

struct GapWitness {
  Subset vertex;
  /// Hilbert basis element of the tangent cone missing from the semigroup.
  IntVec point;
};

struct VeryAmpleReport {
  bool very_ample = true;
  std::vector<GapWitness> gaps;
};

/// At every vertex, checks that the Hilbert basis of the tangent cone
/// (w.r.t. Z^n or the lattice spanned by vertex differences) lies in the
/// semigroup generated by the lattice points of P(D) - vertex.
VeryAmpleReport is_very_ample(const DeltaMatroid& d, LatticeKind lattice, const ToricBudget& budget = {});

/// (lP) ∩ Z^n equals the l-fold sums of vertices for l = 2..level.
/// A true result certifies normality only up to `level`.
bool is_normal_bounded(const DeltaMatroid& d, int level);

struct StarFailure {
  DeltaMatroid d;
  UniPoly orbit_r;
  UniPoly expected;
};

struct StarSearchResult {
  std::size_t checked = 0;
  std::vector<StarFailure> failures;
  /// Instances whose orbit class exhausted a budget, with the message.
  std::vector<std::pair<DeltaMatroid, std::string>> errors;
};

/// Checks R_orbit = (v+1) Int_D on one delta-matroid per W-orbit on [n]
/// (canonical forms). Budget exhaustion is recorded and the search goes on.
StarSearchResult search_star_failures(int n, const EngineOptions& options = {});

}  // namespace deltak
