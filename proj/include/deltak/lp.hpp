#pragma once

#include <vector>

#include "deltak/linalg.hpp"

namespace deltak {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // objective value when Optimal
  QVector x;
};

/// minimize c.x subject to A x = b, x >= 0, in exact arithmetic
/// (two-phase simplex with Bland's rule).
LpResult solve_standard_lp(const QMatrix& A, const QVector& b, const QVector& c);

/// True iff x is a nonnegative combination of gens.
bool in_cone(const std::vector<IntVec>& gens, const IntVec& x);

/// True iff cone(gens) contains no line.
bool is_pointed(const std::vector<IntVec>& gens);

/// Integer functional l with <l, g> >= 1 for every generator, or empty
/// if none exists.
IntVec positive_grading(const std::vector<IntVec>& gens, int dim);

}  // namespace deltak
