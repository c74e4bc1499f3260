#include "m0n/exact.hpp"

#include <stdexcept>

namespace m0n {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational rational_pow(long base, long exp) {
  if (base == 0 && exp < 0) throw std::domain_error("zero to a negative power");
  BigInt p = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp < 0 ? -exp : exp));
  // cpp_rational rejects a negative denominator, so keep the sign on top
  if (exp >= 0) return Rational(p);
  return p < 0 ? Rational(BigInt(-1), BigInt(-p)) : Rational(BigInt(1), p);
}

}  // namespace m0n
