#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deltak {

using Integer = mpz_class;
using Rational = mpq_class;

/// Small integer lattice vector (exponents, characters, cone generators).
using IntVec = std::vector<int>;

/// Direction vector for one-parameter evaluation of characters.
using Direction = std::vector<std::int64_t>;

Rational pairing(const IntVec& m, const Direction& c);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const IntVec& v);

/// Parses "7", "-3/4" (whitespace not allowed).
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec scaled(const IntVec& a, int k);
bool is_zero(const IntVec& a);
long long dot(const IntVec& a, const IntVec& b);

/// Divides by the gcd of the entries; the zero vector is returned as is.
IntVec primitive(const IntVec& a);

}  // namespace deltak
