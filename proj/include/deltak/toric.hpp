#pragma once

#include <cstddef>
#include <vector>

#include "deltak/cone.hpp"
#include "deltak/laurent.hpp"

namespace deltak {

struct ToricBudget {
  std::size_t max_generators = 16;
  std::size_t max_pairs = 2'000'000;
  std::size_t max_states = 2'000'000;
};

/// Binomial x^lead - x^trail over variables (t, x_1, ..., x_k).
struct Binomial {
  IntVec lead;
  IntVec trail;
};

/// Reduced data of the toric ideal of A: the Groebner basis (in the x
/// variables only) for the order used by semigroup_hilbert.
std::vector<Binomial> toric_groebner_basis(const std::vector<IntVec>& A, const ToricBudget& budget = {});

/// K-polynomial of S/M for the monomial ideal M generated by `gens`
/// (exponent vectors in k variables), with deg x_j = degrees[j].
LaurentPoly k_polynomial(const std::vector<IntVec>& gens, const std::vector<IntVec>& degrees);

/// Hilb(N A) = numerator / prod_{a in A} (1 - T^{-a}).
/// Throws ResourceError when a budget is exhausted and InvalidInputError
/// when A admits no positive grading.
HilbertSeriesRep semigroup_hilbert(const std::vector<IntVec>& A, const ToricBudget& budget = {});

/// Whether x is in N A (memoized search bounded by a positive grading).
bool member(const IntVec& x, const std::vector<IntVec>& A, const ToricBudget& budget = {});

/// Elements of A not expressible through the others; zero vectors and
/// duplicates dropped.
std::vector<IntVec> minimal_generators(const std::vector<IntVec>& A, const ToricBudget& budget = {});

/// Elements of N A with <grading, m> <= level, by brute force.
std::vector<IntVec> enumerate_semigroup(const std::vector<IntVec>& A, const IntVec& grading, int level);

}  // namespace deltak
