#pragma once

#include <optional>
#include <vector>

#include "deltak/rational.hpp"

namespace deltak {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

QMatrix to_qmatrix(const std::vector<IntVec>& rows);
QVector to_qvector(const IntVec& v);

/// Row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(QMatrix& m);

int rank(QMatrix m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
/// Basis of {x : m x = 0} over Q.
QMatrix nullspace(const QMatrix& m);
QMatrix transpose(const QMatrix& m);

/// Determinant over GF(2) of a square 0/1 matrix.
bool gf2_determinant(std::vector<std::vector<int>> m);
int gf2_rank(std::vector<std::vector<int>> m);

/// Lattice basis of {x in Z^k : sum_j x_j cols[j] = 0}, where `cols` are
/// k vectors of equal length.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& cols);

/// Basis of the lattice Z{gens} (row Hermite normal form, zero rows dropped).
std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens);

/// Basis of span_R{gens} ∩ Z^n.
std::vector<IntVec> saturated_basis(const std::vector<IntVec>& gens, int n);

/// Coordinates of x in a linearly independent basis, or nullopt if x is
/// outside the rational span.
std::optional<QVector> coordinates(const std::vector<IntVec>& basis, const IntVec& x);

}  // namespace deltak
