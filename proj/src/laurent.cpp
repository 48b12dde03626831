#include "deltak/laurent.hpp"

#include <sstream>
#include <unordered_map>

#include "deltak/errors.hpp"

namespace deltak {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Splits m = rep + k*v with rep canonical for the coset m + Z*v.
std::pair<IntVec, long> coset_split(const IntVec& m, const IntVec& v, std::size_t pivot) {
  long k = floor_div(m[pivot], v[pivot]);
  IntVec rep(m);
  for (std::size_t i = 0; i < m.size(); ++i) rep[i] = static_cast<int>(m[i] - k * v[i]);
  return {rep, k};
}

std::size_t first_nonzero(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  throw InvalidInputError("zero character where a nonzero one is required");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const Exponent& a) {
  LaurentPoly p = constant(static_cast<int>(a.size()), 1);
  p.add_term(a, -1);
  return p;
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw InvalidInputError("LaurentPoly: exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_vars(const LaurentPoly& other) const {
  if (other.nvars_ != nvars_) throw InvalidInputError("LaurentPoly: variable count mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_vars(b);
  LaurentPoly r(a.nvars_);
  LaurentPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::substitute_monomials(const std::vector<IntVec>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw InvalidInputError("substitute_monomials: need one image per variable");
  const int target = images.empty() ? 0 : static_cast<int>(images.front().size());
  LaurentPoly r(target);
  Exponent e(target);
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars_; ++i) {
      if (src[i] == 0) continue;
      for (int j = 0; j < target; ++j) e[j] += src[i] * images[i][j];
    }
    r.add_term(e, c);
  }
  return r;
}

Rational LaurentPoly::evaluate_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out << "*T" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

bool divisible_by(const LaurentPoly& f, const IntVec& v) {
  if (static_cast<int>(v.size()) != f.nvars())
    throw InvalidInputError("divisible_by: variable count mismatch");
  const std::size_t pivot = first_nonzero(v);
  std::map<IntVec, Rational> coset_sums;
  for (const auto& [e, c] : f.terms()) coset_sums[coset_split(e, v, pivot).first] += c;
  for (const auto& [rep, s] : coset_sums)
    if (s != 0) return false;
  return true;
}

std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& f, const IntVec& a) {
  if (static_cast<int>(a.size()) != f.nvars())
    throw InvalidInputError("divide_one_minus: variable count mismatch");
  const std::size_t pivot = first_nonzero(a);
  // Within a coset m0 + Z*a write f = sum c_k X^k with X = T^a; then
  // f / (1 - X) has coefficients g_k = sum_{j <= k} c_j.
  std::map<IntVec, std::map<long, Rational>> chains;
  for (const auto& [e, c] : f.terms()) {
    auto [rep, k] = coset_split(e, a, pivot);
    chains[rep][k] += c;
  }
  LaurentPoly q(f.nvars());
  for (const auto& [rep, chain] : chains) {
    Rational running = 0;
    long prev = chain.begin()->first;
    for (const auto& [k, c] : chain) {
      if (k != prev && running != 0) {
        for (long j = prev; j < k; ++j) {
          IntVec e(rep);
          for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(e[i] + j * a[i]);
          q.add_term(e, running);
        }
      }
      running += c;
      prev = k;
    }
    if (running != 0) return std::nullopt;
  }
  return q;
}

}  // namespace deltak
