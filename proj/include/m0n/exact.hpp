#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace m0n {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k), taken to be 0 whenever n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

/// base^exp as a rational; negative exponents allowed for nonzero base.
Rational rational_pow(long base, long exp);

}  // namespace m0n
