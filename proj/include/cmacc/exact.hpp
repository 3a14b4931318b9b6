#pragma once

// Arbitrary-precision integers and rationals used wherever a value can leave
// machine-word range (baseline subpacketizations) or must stay exact (rates,
// memory ratios).

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmacc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const BigInt& num, const BigInt& den);

/// Binomial coefficient; zero when k < 0 or k > n (and for negative n).
BigInt binomial(std::int64_t n, std::int64_t k);

/// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& x);

/// Decimal rendering rounded half-to-even at `places` digits.
std::string to_decimal(const Rational& r, int places = 2);

/// Ceiling of a rational.
BigInt ceil(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace cmacc
