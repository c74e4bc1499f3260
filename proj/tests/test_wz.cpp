#include <doctest.h>

#include "m0n/wz.hpp"

using namespace m0n;

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(4) == 14);
}

TEST_CASE("lhs and rhs examples") {
  CHECK(wz_lhs(0) == 1);
  CHECK(wz_lhs(1) == 0);
  CHECK(wz_lhs(2) == -1);
  CHECK(wz_rhs(0) == 1);
  CHECK(wz_rhs(2) == -1);
  CHECK(wz_rhs(7) == 0);
  CHECK(wz_rhs(8) == 14);
}

TEST_CASE("lhs against the direct sum of the summand") {
  for (long p = 0; p <= 40; ++p) {
    Rational sum = 0;
    for (long k = 0; k <= p; ++k) sum += wz_summand(p, k);
    CHECK(sum == wz_lhs(p));
  }
}

TEST_CASE("identity, p <= 500") {
  for (long p = 0; p <= 500; ++p) REQUIRE(wz_lhs(p) == wz_rhs(p));
}

TEST_CASE("certificate, p <= 100") {
  for (long p = 0; p <= 100; ++p)
    for (long k = 0; k <= p + 2; ++k) REQUIRE(certificate_check(p, k));
  for (long p = 0; p <= 20; ++p)
    for (long k = p + 3; k <= p + 6; ++k) {
      CHECK(wz_summand(p + 2, k) == 0);
      CHECK(wz_certificate(p, k) == 0);
      CHECK(certificate_check(p, k));
    }
}

TEST_CASE("recurrence, p <= 500") {
  for (long p = 0; p <= 500; ++p) REQUIRE(recurrence_check(p));
}

TEST_CASE("alternating face sum") {
  CHECK(cf_face_sum(3) == 1);
  CHECK(cf_face_sum(4) == 0);
  CHECK(cf_face_sum(5) == -1);
  for (int n = 3; n <= 9; ++n) {
    CHECK(cf_face_sum(n) == cf_face_sum_closed(n));
    CHECK(Rational(cf_face_sum(n)) == wz_rhs(n - 3));
  }
}
