#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sphpart {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(int n);
BigInt binomial(int n, int r);

/// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument on
/// anything else, including floating point notation and q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool fits_int64(const BigInt& value);

}  // namespace sphpart
