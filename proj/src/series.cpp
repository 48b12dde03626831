#include "deltak/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "deltak/errors.hpp"

namespace deltak {

Series::Series(int start, int end) : start_(start), coeffs_(std::max(0, end - start)) {}

Series Series::constant(const Rational& c, int end) {
  Series r(0, end);
  if (end > 0) r.coeffs_[0] = c;
  return r;
}

Series Series::monomial(const Rational& c, int k, int end) {
  Series r(k, std::max(k, end));
  if (end > k) r.coeffs_[0] = c;
  return r;
}

Rational Series::coeff(int k) const {
  if (k < start_) return 0;
  if (k >= end()) throw ConsistencyError("series coefficient requested beyond its precision");
  return coeffs_[k - start_];
}

void Series::set_coeff(int k, const Rational& c) {
  if (k < start_ || k >= end()) throw ConsistencyError("series index out of range");
  coeffs_[k - start_] = c;
}

void Series::add_to_coeff(int k, const Rational& c) {
  if (k < start_ || k >= end()) throw ConsistencyError("series index out of range");
  coeffs_[k - start_] += c;
}

Series Series::truncated(int new_end) const {
  if (new_end >= end()) return *this;
  Series r(start_, std::max(start_, new_end));
  for (int k = start_; k < r.end(); ++k) r.coeffs_[k - start_] = coeffs_[k - start_];
  return r;
}

Series& Series::operator+=(const Series& other) {
  const int lo = std::min(start_, other.start_);
  const int hi = std::min(end(), other.end());
  Series r(lo, std::max(lo, hi));
  for (int k = lo; k < r.end(); ++k) {
    Rational v = 0;
    if (k >= start_) v += coeffs_[k - start_];
    if (k >= other.start_) v += other.coeffs_[k - other.start_];
    r.coeffs_[k - lo] = v;
  }
  *this = std::move(r);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  Series neg = other;
  neg *= Rational(-1);
  return *this += neg;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int lo = a.start_ + b.start_;
  const int hi = std::min(a.end() + b.start_, b.end() + a.start_);
  Series r(lo, std::max(lo, hi));
  const int len = r.end() - lo;
  Rational tmp;
  for (int i = 0; i < static_cast<int>(a.coeffs_.size()) && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < len && j < static_cast<int>(b.coeffs_.size()); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += tmp;
    }
  }
  return r;
}

Series Series::inverse() const {
  if (start_ != 0 || coeffs_.empty() || coeffs_[0] == 0)
    throw ConsistencyError("series inverse needs a nonzero constant term");
  Series r(0, end());
  const Rational inv0 = 1 / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (int k = 1; k < end(); ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -acc * inv0;
  }
  return r;
}

Series Series::exp(const Series& x, int end) {
  // y' = x' y, solved coefficientwise.
  if (x.coeff(0) != 0) throw ConsistencyError("series exp needs zero constant term");
  end = std::min(end, x.end());
  Series y(0, end);
  if (end <= 0) return y;
  y.coeffs_[0] = 1;
  for (int k = 1; k < end; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (j < x.start_) continue;
      const Rational& xj = x.coeffs_[j - x.start_];
      if (xj == 0) continue;
      acc += j * xj * y.coeffs_[k - j];
    }
    y.coeffs_[k] = acc / k;
  }
  return y;
}

bool Series::agrees_with(const Series& other) const {
  const int lo = std::min(start_, other.start_);
  const int hi = std::min(end(), other.end());
  for (int k = lo; k < hi; ++k)
    if (coeff(k) != other.coeff(k)) return false;
  return true;
}

Series exp_substitute(const LaurentPoly& f, const Direction& c, int order) {
  // Group terms by the value <c,m> so each exponential is expanded once.
  std::map<Integer, Rational> by_weight;
  for (const auto& [m, coeff] : f.terms()) {
    Rational a = pairing(m, c);
    by_weight[a.get_num()] += coeff;
  }
  Series r(0, order + 1);
  for (const auto& [a, coeff] : by_weight) {
    if (coeff == 0) continue;
    Rational term = coeff;
    for (int k = 0; k <= order; ++k) {
      r.add_to_coeff(k, term);
      term *= Rational(a) / (k + 1);
    }
  }
  return r;
}

const Rational& bernoulli_plus(int k) {
  static std::mutex mu;
  static std::vector<Rational> table;
  std::lock_guard<std::mutex> lock(mu);
  // Recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_1 = -1/2, flipped at the end.
  while (static_cast<int>(table.size()) <= k) {
    const int m = static_cast<int>(table.size());
    if (m == 0) {
      table.emplace_back(1);
      continue;
    }
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      Rational bj = (j == 1) ? Rational(-1, 2) : table[j];
      acc += Rational(binom) * bj;
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational bm = -acc / Rational(m + 1);
    if (m == 1) bm = -bm;
    table.push_back(bm);
  }
  return table[k];
}

Series inv_one_minus_exp(const Rational& a, int order) {
  if (a == 0) throw DirectionError("character pairs to zero with the direction");
  Series r(-1, order + 1);
  Rational apow = 1 / a;  // a^{k-1}
  Rational fact = 1;      // k!
  for (int k = 0; k <= order + 1; ++k) {
    if (k > 0) fact *= k;
    r.set_coeff(k - 1, bernoulli_plus(k) * apow / fact);
    apow *= a;
  }
  return r;
}

Series psi_monomial(const IntVec& m, const Direction& c, int end) {
  // log((1+x)/(1-x)) = 2 sum_{k odd} x^k / k.
  Series log_part(0, end);
  for (int k = 1; k < end; k += 2) {
    Integer pk = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Integer ci;
      mpz_set_si(ci.get_mpz_t(), static_cast<long>(c[i]));
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), ci.get_mpz_t(), static_cast<unsigned long>(k));
      pk += p * m[i];
    }
    log_part.set_coeff(k, Rational(2 * pk) / k);
  }
  return Series::exp(log_part, end);
}

Series psi_substitute(const LaurentPoly& f, const Direction& c, int order) {
  Series r(0, order + 1);
  for (const auto& [m, coeff] : f.terms()) r += psi_monomial(m, c, order + 1) * coeff;
  return r;
}

}  // namespace deltak
