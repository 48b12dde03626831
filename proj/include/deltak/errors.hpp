#pragma once

#include <stdexcept>
#include <string>

namespace deltak {

/// Malformed or out-of-range input (CLI exit code 2).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical contract was violated: identity mismatch, directions
/// disagreeing, non-integral Euler characteristic (CLI exit code 1).
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken, e.g. a tie for the w-minimal feasible set
/// or a pole that failed to clear. Usually means the input is not a
/// delta-matroid.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A denominator character pairs to zero with the chosen direction.
/// Callers draw a fresh direction and retry.
class DirectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Negative powers of the series parameter survived a localization sum.
class CancellationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Interpolation guard node disagrees with the fitted polynomial.
class DegreeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured budget (Groebner pairs, DP states, enumeration size)
/// was exhausted (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deltak
