#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satfrac {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Rounds half away from zero to `digits` decimals, e.g. "0.64".
std::string to_decimal(const Rational& q, int digits);

}  // namespace satfrac
