#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltak/rational.hpp"
#include "deltak/signed_permutation.hpp"
#include "deltak/unipoly.hpp"

namespace deltak {

/// Subset of [n] as a bitmask: bit i-1 set iff i is in the subset.
using Subset = std::uint32_t;

constexpr int kMaxGroundSize = 20;

Subset subset_from_elements(const std::vector<int>& elements);
std::vector<int> subset_elements(Subset s);
int subset_size(Subset s);
/// e_S in {0,1}^n
IntVec indicator(int n, Subset s);
/// e_B in {-1,1}^n for the maximal admissible set B with B ∩ [n] = s.
IntVec signed_indicator(int n, Subset s);
/// "{1,2,3}"
std::string subset_to_string(Subset s);

struct ValidationResult {
  bool valid = true;
  /// Endpoints of an edge of the polytope that is not parallel to
  /// e_i or e_i ± e_j.
  std::optional<std::pair<Subset, Subset>> bad_edge;
};

/// Checks the polytope edge condition for conv{e_S : S in family}.
/// Throws InvalidInputError for an empty family or subsets outside [n].
ValidationResult validate(int n, const std::vector<Subset>& family);

/// Whether [e_a, e_b] is an edge of conv{e_S : S in family} (exact LP on the
/// smallest cube face containing both points).
bool is_polytope_edge(int n, const std::vector<Subset>& family, Subset a, Subset b);

/// Symmetric exchange: for feasible S, S' and i in S△S' there is j in
/// S△S' with S△{i,j} feasible (j = i allowed).
bool satisfies_symmetric_exchange(int n, const std::vector<Subset>& family);

/// Delta-matroid on [n] given by its feasible sets. Immutable.
class DeltaMatroid {
 public:
  /// Validates; throws InvalidInputError naming a bad edge.
  static DeltaMatroid create(int n, std::vector<Subset> family);
  /// Skips the polytope check (callers that already validated).
  static DeltaMatroid unchecked(int n, std::vector<Subset> family);

  int n() const { return n_; }
  /// Sorted, duplicate-free.
  const std::vector<Subset>& feasible() const { return feasible_; }
  std::size_t size() const { return feasible_.size(); }
  bool is_feasible(Subset s) const { return member_[s] != 0; }

  /// min over feasible F of |S △ F|.
  int lattice_distance(Subset s) const;
  /// sum over S ⊆ [n] of v^{d(S)}
  UniPoly interlace() const;

  /// The feasible set minimizing <e_S, v> for v = sum_k (n+1-k) ε_k e_|w(k)|.
  /// Throws ConsistencyError on a tie.
  Subset minimal_feasible(const SignedPermutation& w) const;
  /// Same argmin with weights 2^{n-k}; used to cross-check.
  Subset minimal_feasible_alt(const SignedPermutation& w) const;

  std::string to_string() const;
  friend bool operator==(const DeltaMatroid& a, const DeltaMatroid& b) {
    return a.n_ == b.n_ && a.feasible_ == b.feasible_;
  }

 private:
  DeltaMatroid(int n, std::vector<Subset> family);
  Subset argmin_with_weights(const std::vector<long long>& weights) const;

  int n_;
  std::vector<Subset> feasible_;
  std::vector<char> member_;
};

}  // namespace deltak
