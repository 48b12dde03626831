#pragma once

#include <vector>

#include "deltak/laurent.hpp"
#include "deltak/rational.hpp"

namespace deltak {

/// Truncated Laurent series in one variable s:
///   sum_{k=start}^{end-1} c_k s^k + O(s^end).
/// Products and sums track the order up to which the result is exact.
class Series {
 public:
  Series() = default;
  /// Zero series known exactly on [start, end).
  Series(int start, int end);

  static Series constant(const Rational& c, int end);
  /// c * s^k, exact below `end`.
  static Series monomial(const Rational& c, int k, int end);

  int start() const { return start_; }
  int end() const { return start_ + static_cast<int>(coeffs_.size()); }
  /// Coefficient of s^k; zero below start, error at or above end.
  Rational coeff(int k) const;
  void set_coeff(int k, const Rational& c);
  void add_to_coeff(int k, const Rational& c);

  /// Drops terms of order >= end.
  Series truncated(int end) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }

  /// Multiplicative inverse; the series must start at order 0 with a
  /// nonzero constant term.
  Series inverse() const;
  /// exp of a series with zero constant term, over [0, end).
  static Series exp(const Series& x, int end);

  /// Coefficientwise equality on the common exact range.
  bool agrees_with(const Series& other) const;

 private:
  int start_ = 0;
  std::vector<Rational> coeffs_;
};

/// sum_terms coeff * exp(<c,m> s), exact on [0, order].
Series exp_substitute(const LaurentPoly& f, const Direction& c, int order);

/// 1 / (1 - e^{-a s}) on [-1, order]; throws DirectionError when a == 0.
Series inv_one_minus_exp(const Rational& a, int order);

/// Bernoulli numbers with B_1 = +1/2, i.e. x / (1 - e^{-x}) = sum B_k x^k / k!.
const Rational& bernoulli_plus(int k);

/// ((1+as)/(1-as))^m over [0, end) as exp(2 m artanh(as)), for the
/// monomial T^m with T_i -> (1+c_i s)/(1-c_i s).
Series psi_monomial(const IntVec& m, const Direction& c, int end);

/// Image of f under T_i -> (1+t_i)/(1-t_i), t = c s, exact on [0, order].
Series psi_substitute(const LaurentPoly& f, const Direction& c, int order);

}  // namespace deltak
