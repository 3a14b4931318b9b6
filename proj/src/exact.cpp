#include "cmacc/exact.hpp"

#include <stdexcept>

namespace cmacc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

BigInt ceil(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

std::string to_decimal(const Rational& r, int places) {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  const BigInt num = boost::multiprecision::numerator(a) * scale;
  const BigInt den = boost::multiprecision::denominator(a);
  BigInt q = num / den;
  const BigInt rem2 = 2 * (num % den);
  if (rem2 > den || (rem2 == den && q % 2 == 1)) q += 1;

  std::string digits = q.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && q != 0) digits.insert(0, "-");
  return digits;
}

}  // namespace cmacc
