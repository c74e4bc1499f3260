#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "m0n/errors.hpp"
#include "m0n/intersect.hpp"
#include "m0n/moduli.hpp"

using namespace m0n;
using test::close;
using test::order;

namespace {

const Complex I{0.0, 1.0};

double S(const Kinematics& k, std::initializer_list<Label> l) { return s_subset(k, LabelSet(l)); }
double cot(const Kinematics& k, std::initializer_list<Label> l) { return 1.0 / std::tan(std::numbers::pi * S(k, l)); }
double csc(const Kinematics& k, std::initializer_list<Label> l) { return 1.0 / std::sin(std::numbers::pi * S(k, l)); }
Complex inv_e_minus_one(double x) { return 1.0 / (std::exp(2.0 * std::numbers::pi * I * x) - 1.0); }

}  // namespace

TEST_CASE("cot_pi and csc_pi") {
  CHECK(cot_pi(0.25) == doctest::Approx(1.0));
  CHECK(cot_pi(3.25) == doctest::Approx(1.0));
  CHECK(csc_pi(0.5) == doctest::Approx(1.0));
  CHECK(csc_pi(2.5) == doctest::Approx(1.0));
  CHECK(csc_pi(1.5) == doctest::Approx(-1.0));
  CHECK(half_i_power(3) == Complex(0.0, -0.125));
}

TEST_CASE("m_value examples") {
  const Kinematics k = sample_generic(6, 21);
  CHECK(m_value(std::vector<std::vector<Label>>{{1, 2}, {3, 4}, {5, 6}}, k) == 1.0);
  CHECK(m_value(std::vector<std::vector<Label>>{{1}, {2, 3, 4}, {5}, {6}}, k) ==
        doctest::Approx(cot(k, {2, 3, 4, 5}) + cot(k, {1, 2, 3, 4})).epsilon(1e-12));

  const Kinematics k5 = sample_generic(5, 4);
  const double expect = 1 + cot(k5, {1, 2}) * cot(k5, {1, 2, 3}) + cot(k5, {2, 3}) * cot(k5, {1, 2, 3}) +
                        cot(k5, {2, 3}) * cot(k5, {2, 3, 4}) + cot(k5, {3, 4}) * cot(k5, {2, 3, 4}) +
                        cot(k5, {1, 2}) * cot(k5, {3, 4});
  CHECK(m_value(std::vector<std::vector<Label>>{{1}, {2}, {3}, {4}, {5}}, k5) == doctest::Approx(expect).epsilon(1e-12));

  CHECK_THROWS(m_value(std::vector<std::vector<Label>>{{1, 2}, {3, 4, 5, 6}}, k));
  CHECK_THROWS(m_value(std::vector<std::vector<Label>>{{1}, {2}, {3}, {5}, {6}}, k));
}

TEST_CASE("diagonal examples") {
  const Kinematics k4 = sample_generic(4, 1);
  const Complex d4 = diagonal(CircularOrder::identity(4), k4).value;
  CHECK(close(d4, 0.5 * I * (cot(k4, {1, 2}) + cot(k4, {2, 3})), 1e-12));
  const Complex brute = -(1.0 + inv_e_minus_one(k4(1, 2)) + inv_e_minus_one(k4(2, 3)));
  CHECK(close(d4, brute, 1e-12));
  CHECK(close(oracle_diagonal(k4, 4), brute, 1e-12));

  CHECK(diagonal(CircularOrder::identity(3), sample(3, 1)).value == Complex(1.0, 0.0));
  CHECK(oracle_diagonal(sample(3, 1), 3) == Complex(1.0, 0.0));
}

TEST_CASE("diagonal agrees with its face-sum oracle") {
  for (int n = 4; n <= 7; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Kinematics k = sample_generic(n, 100 * seed);
      for (const auto& a : {CircularOrder::identity(n), standard_representatives(n).back()})
        CHECK(close(diagonal(a, k).value, oracle_diagonal(k, a), 1e-9));
    }
}

TEST_CASE("worked example and empty cell") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Kinematics k = sample_generic(6, seed * 7);
    const PairValue v = pair(order("123456"), order("134256"), k);
    const Complex expect = -half_i_power(3) * csc(k, {3, 4}) * csc(k, {2, 3, 4}) *
                           (cot(k, {2, 3, 4, 5}) + cot(k, {1, 2, 3, 4}));
    CHECK(std::abs(v.value - expect) <= 1e-10 * std::abs(expect));
    CHECK(v.sign == -1);
    CHECK(v.winding == 2);
    CHECK(v.prefactor_power == 3);
    CHECK(v.csc_args.size() == 2);
    CHECK(v.m_factors.size() == 3);
    CHECK(close(v.recompose(), v.value, 1e-12));
    CHECK(close(oracle_pair(order("123456"), order("134256"), k), v.value, 1e-9));

    const PairValue e = pair(order("123456"), order("146325"), k);
    CHECK(e.empty);
    CHECK(e.value == Complex{});
    CHECK_THROWS_AS(oracle_pair(order("123456"), order("146325"), k), std::invalid_argument);
  }
}

TEST_CASE("off-diagonal n = 5 by hand") {
  const Kinematics k = sample_generic(5, 12);
  // common facet (23); w(12345|13245) = 2
  const Complex expect = -half_i_power(2) * csc(k, {2, 3}) * (cot(k, {1, 2, 3}) + cot(k, {2, 3, 4}));
  CHECK(close(pair(order("12345"), order("13245"), k).value, expect, 1e-12));
  CHECK(close(oracle_pair(order("12345"), order("13245"), k), expect, 1e-9));
}

TEST_CASE("pair agrees with its oracle, n = 5 and 6") {
  for (int n = 5; n <= 6; ++n) {
    const Kinematics k = sample_generic(n, 77);
    const auto reps = standard_representatives(n);
    for (const auto& a : reps)
      for (const auto& b : reps) {
        const PairValue v = pair(a, b, k);
        CHECK(v.empty == !intersection_face_oracle(a, b).has_value());
        if (v.empty) continue;
        CHECK(close(v.value, oracle_pair(a, b, k), 1e-9));
        const Complex unfolded = v.value / half_i_power(n - 3);
        CHECK(std::abs(unfolded.imag()) <= 1e-12 * std::abs(unfolded));
        if (a == b) {
          const PairValue d = diagonal(a, k);
          CHECK(d.value == v.value);
          CHECK(d.m_factors == v.m_factors);
          CHECK(v.csc_args.empty());
        }
      }
  }
}

TEST_CASE("relabeling equivariance") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const int n = 4 + t % 4;
    const Kinematics k = sample_generic(n, rng());
    const CircularOrder a(test::random_permutation(n, rng)), b(test::random_permutation(n, rng));
    const auto sigma = test::random_permutation(n, rng);
    auto apply = [&](const CircularOrder& x) {
      std::vector<Label> out;
      for (Label l : x.labels()) out.push_back(sigma[static_cast<std::size_t>(l - 1)]);
      return CircularOrder(out);
    };
    CHECK(close(pair(apply(a), apply(b), k.relabeled(sigma)).value, pair(a, b, k).value, 1e-12));
  }
}

TEST_CASE("non-generic kinematics are rejected") {
  Eigen::MatrixXd t(4, 4);
  t << 0, 1, -1, 0, 1, 0, 0, -1, -1, 0, 0, 1, 0, -1, 1, 0;
  const Kinematics k(t);
  try {
    (void)diagonal(CircularOrder::identity(4), k);
    FAIL("expected GenericityError");
  } catch (const GenericityError& e) {
    CHECK(e.subset().size() == 2);
  }
}

TEST_CASE("field-theory limit") {
  const Kinematics k4 = sample_generic(4, 5);
  CHECK(ft_inverse_kernel(order("1234"), order("1234"), k4) == doctest::Approx(1 / k4(1, 2) + 1 / k4(2, 3)));

  const Kinematics k5 = sample_generic(5, 5);
  const double ft5 = 1 / (S(k5, {1, 2}) * S(k5, {1, 2, 3})) + 1 / (S(k5, {2, 3}) * S(k5, {1, 2, 3})) +
                     1 / (S(k5, {2, 3}) * S(k5, {2, 3, 4})) + 1 / (S(k5, {3, 4}) * S(k5, {2, 3, 4})) +
                     1 / (S(k5, {1, 2}) * S(k5, {3, 4}));
  CHECK(ft_inverse_kernel(order("12345"), order("12345"), k5) == doctest::Approx(ft5).epsilon(1e-12));
  CHECK(ft_inverse_kernel(order("123456"), order("146325"), sample_generic(6, 1)) == 0.0);

  for (int n = 4; n <= 6; ++n) {
    const Kinematics k = sample_generic(n, 40);
    const CircularOrder a = CircularOrder::identity(n);
    const double ft = ft_inverse_kernel(a, a, k);
    double err[2];
    const double eps[2] = {1e-3, 1e-4};
    for (int e = 0; e < 2; ++e) {
      const double m = (pair(a, a, k.scaled(eps[e]), 0.0).value / half_i_power(n - 3)).real();
      err[e] = std::abs(std::pow(std::numbers::pi * eps[e], n - 3) * m - ft);
    }
    CHECK(err[1] <= 0.15 * err[0]);
  }
}

TEST_CASE("intersection matrices") {
  const Kinematics k4 = sample_generic(4, 2);
  const auto m4 = intersection_matrix(4, k4, Basis::bounded_chambers);
  REQUIRE(m4.labels.size() == 1);
  CHECK(close(m4.values()(0, 0), 0.5 * I * (cot(k4, {1, 2}) + cot(k4, {2, 3})), 1e-12));

  const Kinematics k5 = sample_generic(5, 2);
  const auto b5 = intersection_matrix(5, k5, Basis::bounded_chambers);
  REQUIRE(b5.labels.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(b5.entries[i][i].value == diagonal(b5.labels[i], k5).value);

  const auto a5 = intersection_matrix(5, k5, Basis::all_classes);
  REQUIRE(a5.labels.size() == 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      CHECK((a5.entries[i][j].value == Complex{}) == !intersection_face(a5.labels[i], a5.labels[j]).has_value());
}
