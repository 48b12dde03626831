#pragma once

#include <cstddef>
#include <vector>

#include "deltak/delta_matroid.hpp"
#include "deltak/laurent.hpp"
#include "deltak/linalg.hpp"

namespace deltak {

/// numerator / prod_d (1 - T^{-d})
struct HilbertPiece {
  LaurentPoly numerator;
  std::vector<IntVec> denominators;
};

/// Sum of pieces; with Hilb(S) = sum_{m in S} T^{-m}.
struct HilbertSeriesRep {
  int dim = 0;
  std::vector<HilbertPiece> pieces;
};

enum class LatticeKind { Standard, VertexSpan };

/// Cone generated by integer vectors (zero vectors dropped).
class RationalCone {
 public:
  RationalCone(int dim, std::vector<IntVec> generators);

  int dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return gens_; }
  bool is_pointed() const;

 private:
  int dim_;
  std::vector<IntVec> gens_;
};

/// Simplicial subdivision of a cone in coordinates of a lattice basis.
struct Triangulation {
  /// Basis of the lattice (vectors in Z^dim); coordinates below refer to it.
  std::vector<IntVec> basis;
  /// Primitive extreme rays, in lattice coordinates.
  std::vector<IntVec> rays;
  /// Each simplex lists basis.size() ray indices.
  std::vector<std::vector<int>> simplices;
  /// Inverse of the ray matrix (columns = rays) per simplex.
  std::vector<QMatrix> inverses;

  IntVec to_ambient(const IntVec& coords) const;
  /// Whether a point in lattice coordinates lies in the cone.
  bool contains(const IntVec& coords) const;
};

/// Placing triangulation over the extreme rays, processed in
/// lexicographic order. Throws InvalidInputError for non-pointed cones.
Triangulation triangulate(const RationalCone& cone, LatticeKind lattice);

/// Lattice points of the fundamental parallelepiped of a simplex,
/// { sum λ_i r_i : λ_i in [0,1) }, with λ_i in (0,1] instead for the
/// facets flagged in `excluded`. Coordinates are lattice coordinates.
std::vector<IntVec> parallelepiped_points(const Triangulation& t, std::size_t simplex,
                                          const std::vector<bool>& excluded);

/// Exact Hilbert series of cone ∩ Z^dim by a half-open decomposition.
HilbertSeriesRep cone_hilbert(const RationalCone& cone);

/// Minimal generating set of cone ∩ L, L the chosen lattice.
std::vector<IntVec> hilbert_basis(const RationalCone& cone, LatticeKind lattice);

/// Cone over P(D) - e_s at a feasible vertex s.
RationalCone tangent_cone(const DeltaMatroid& d, Subset s);

/// Terms T^{-m} of the series with <grading, m> <= level, as a Laurent
/// polynomial (used to compare series against brute-force counts).
LaurentPoly truncate_series(const HilbertSeriesRep& h, const IntVec& grading, int level);

}  // namespace deltak
