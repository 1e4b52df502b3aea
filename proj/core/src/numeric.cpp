#include "satfrac/numeric.hpp"

#include <stdexcept>

namespace satfrac {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (int t = 1; t <= k; ++t) {
    out *= n - k + t;
    out /= t;
  }
  return out;
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    std::string tail = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - tail.size(), '0') + tail;
  }
  return out;
}

}  // namespace satfrac
