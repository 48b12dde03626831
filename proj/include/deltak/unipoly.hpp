#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltak/rational.hpp"

namespace deltak {

/// Dense univariate polynomial over Q; coefficient i multiplies v^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  /// v
  static UniPoly variable();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int i) const;
  Rational operator()(const Rational& v) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(int k) const;

  /// Quotient by (v - r); throws ConsistencyError if r is not a root.
  UniPoly divide_by_root(const Rational& r) const;

  bool has_integer_coeffs() const;
  /// "4 + 8v + 4v^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Lagrange interpolation through `nodes` with degree at most `degree_bound`.
/// The first degree_bound + 1 nodes determine the polynomial; every further
/// node is a guard and must lie on it (DegreeBoundError otherwise).
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& nodes, int degree_bound);

}  // namespace deltak
