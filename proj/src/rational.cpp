#include "deltak/rational.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "deltak/errors.hpp"

namespace deltak {

Rational pairing(const IntVec& m, const Direction& c) {
  if (m.size() != c.size()) throw InvalidInputError("pairing: dimension mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Integer ci;
    mpz_set_si(ci.get_mpz_t(), static_cast<long>(c[i]));
    acc += ci * m[i];
  }
  return Rational(acc);
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}
std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const IntVec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty rational literal");
  std::string s(text);
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw InvalidInputError("bad rational literal: " + s);
  }
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInputError("bad rational literal: " + std::string(text));
  if (q.get_den() == 0) throw InvalidInputError("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a);
  for (int& x : r) x = -x;
  return r;
}

IntVec scaled(const IntVec& a, int k) {
  IntVec r(a);
  for (int& x : r) x *= k;
  return r;
}

bool is_zero(const IntVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

IntVec primitive(const IntVec& a) {
  int g = 0;
  for (int x : a) g = std::gcd(g, x < 0 ? -x : x);
  if (g <= 1) return a;
  IntVec r(a);
  for (int& x : r) x /= g;
  return r;
}

}  // namespace deltak
