#include "m0n/wz.hpp"

#include <stdexcept>

#include "m0n/associahedron.hpp"

namespace m0n {

BigInt catalan(long k) {
  if (k < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * k, k) / (k + 1);
}

Rational wz_summand(long p, long k) {
  if (p < 0 || k < 0 || k > p) return Rational(0);
  return rational_pow(-2, p - k) * Rational(binomial(p, k) * binomial(p + k + 2, k + 1), BigInt(p + 2));
}

Rational wz_certificate(long p, long k) {
  if (p < 0 || k < 0 || k > p + 2) return Rational(0);
  // C(p,k) / ((p-k+1)(p-k+2)) = p! / (k! (p-k+2)!)
  const Rational reduced_binomial(factorial(p), factorial(k) * factorial(p - k + 2));
  const Rational ratio(BigInt(-8) * (p + 1) * (2 * p + 5) * k * (k + 1), BigInt(p + 3));
  return ratio * rational_pow(-2, p - k) * reduced_binomial * Rational(binomial(p + k + 2, k + 1), BigInt(p + 2));
}

Rational wz_lhs(long p) {
  if (p < 0) throw std::invalid_argument("wz_lhs: negative p");
  // T_k = (-2)^{p-k} C(p,k) C(p+k+2,k+1) is an integer;
  // T_{k+1} = T_k (p-k)(p+k+3) / (-2 (k+1)(k+2)) exactly.
  BigInt term = boost::multiprecision::pow(BigInt(-2), static_cast<unsigned>(p)) * (p + 2);
  BigInt sum = term;
  for (long k = 0; k < p; ++k) {
    term *= (p - k) * (p + k + 3);
    term /= -2 * (k + 1) * (k + 2);
    sum += term;
  }
  return Rational(sum, BigInt(p + 2));
}

Rational wz_rhs(long p) {
  if (p < 0) throw std::invalid_argument("wz_rhs: negative p");
  if (p % 2) return Rational(0);
  const BigInt c = catalan(p / 2);
  return Rational((p / 2) % 2 ? BigInt(-c) : c);
}

bool certificate_check(long p, long k) {
  const Rational lhs = (p + 4) * wz_summand(p + 2, k) + 4 * (p + 1) * wz_summand(p, k);
  return lhs == wz_certificate(p, k + 1) - wz_certificate(p, k);
}

bool recurrence_check(long p) {
  return (p + 4) * wz_lhs(p + 2) + 4 * (p + 1) * wz_lhs(p) == 0;
}

BigInt cf_face_sum(int n) {
  if (n < 3) throw std::invalid_argument("cf_face_sum: need n >= 3");
  BigInt sum = 0;
  for_each_face(CircularOrder::identity(n), 0, n - 3, [&](const Face& f) {
    const BigInt term = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(f.dim()));
    sum += f.dim() % 2 ? BigInt(-term) : term;
  });
  return sum;
}

BigInt cf_face_sum_closed(int n) {
  if (n < 3) throw std::invalid_argument("cf_face_sum_closed: need n >= 3");
  BigInt sum = 0;
  for (int k = 0; k <= n - 3; ++k) {
    const int dim = n - 3 - k;
    const BigInt term = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(dim)) * face_count(n, k);
    sum += dim % 2 ? BigInt(-term) : term;
  }
  return sum;
}

}  // namespace m0n
