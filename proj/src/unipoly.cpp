#include "deltak/unipoly.hpp"

#include <sstream>

#include "deltak/errors.hpp"

namespace deltak {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational UniPoly::operator()(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(int k) const {
  UniPoly r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

UniPoly UniPoly::divide_by_root(const Rational& root) const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  if (coeffs_[0] + carry * root != 0)
    throw ConsistencyError("divide_by_root: " + root.get_str() + " is not a root");
  return UniPoly(std::move(q));
}

bool UniPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (i == 0 || c != 1) out << c.get_str();
    if (i >= 1) out << "v";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& nodes, int degree_bound) {
  const int needed = degree_bound + 1;
  if (degree_bound < 0 || static_cast<int>(nodes.size()) < needed)
    throw InvalidInputError("interpolate: not enough nodes for the degree bound");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].first == nodes[j].first) throw InvalidInputError("interpolate: repeated node");

  // Newton divided differences on the first `needed` nodes.
  std::vector<Rational> dd(needed);
  for (int i = 0; i < needed; ++i) dd[i] = nodes[i].second;
  for (int level = 1; level < needed; ++level)
    for (int i = needed - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].first - nodes[i - level].first);

  UniPoly result;
  UniPoly basis = UniPoly::constant(1);
  for (int i = 0; i < needed; ++i) {
    result += basis * dd[i];
    basis = basis * UniPoly({-nodes[i].first, Rational(1)});
  }
  for (std::size_t i = needed; i < nodes.size(); ++i) {
    if (result(nodes[i].first) != nodes[i].second)
      throw DegreeBoundError("interpolation guard node v=" + nodes[i].first.get_str() +
                             " disagrees with the degree-" + std::to_string(degree_bound) + " fit");
  }
  return result;
}

}  // namespace deltak
