#pragma once

#include <utility>
#include <vector>

#include "deltak/delta_matroid.hpp"
#include "deltak/rational.hpp"

namespace deltak {

enum class Field { Rationals, GF2 };

/// n x (2n+1) matrix whose columns are labeled n̄, ..., 1̄, 0, 1, ..., n.
struct GroundMatrix {
  Field field = Field::Rationals;
  int n = 0;
  std::vector<std::vector<Rational>> rows;

  /// Column index of a signed label (ī as -i, 0 for the middle column).
  int column(int signed_label) const { return n + signed_label; }
};

/// Feasible sets of the delta-matroid represented by the row space.
/// Throws InvalidInputError if the rows are not isotropic for
/// q = x_1 x_1̄ + ... + x_n x_n̄ + x_0^2 or have rank below n.
DeltaMatroid from_matrix(const GroundMatrix& m);

/// Vector in the row space on which q (or its polar form) fails to vanish,
/// if any.
std::optional<std::vector<Rational>> isotropy_witness(const GroundMatrix& m);

/// Delta-matroid of the principal GF(2) minors of a simple graph's
/// adjacency matrix, plus its representing matrix [A | I | 0].
std::pair<DeltaMatroid, GroundMatrix> from_graph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace deltak
