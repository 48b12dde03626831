#pragma once

#include <map>
#include <optional>
#include <string>

#include "deltak/rational.hpp"

namespace deltak {

/// Sparse Laurent polynomial in T_1..T_k with rational coefficients.
/// Terms are kept in lexicographic exponent order; zero coefficients are
/// never stored.
class LaurentPoly {
 public:
  using Exponent = IntVec;
  using TermMap = std::map<Exponent, Rational>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(const Exponent& e, const Rational& c = 1);
  /// 1 - T^a
  static LaurentPoly one_minus(const Exponent& a);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Substitutes T_i -> T^{images[i]}; the result lives in
  /// images[i].size() variables.
  LaurentPoly substitute_monomials(const std::vector<IntVec>& images) const;

  /// Value at T = (1,...,1).
  Rational evaluate_at_one() const;

  std::string to_string() const;

 private:
  void check_vars(const LaurentPoly& other) const;

  int nvars_;
  TermMap terms_;
};

/// True iff (1 - T^v) divides f. Exponents are grouped into cosets of Z·v;
/// each coset restricted to the subtorus T^v = 1 must sum to zero.
bool divisible_by(const LaurentPoly& f, const IntVec& v);

/// Exact quotient f / (1 - T^a), or nullopt when the division leaves a
/// remainder.
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& f, const IntVec& a);

}  // namespace deltak
