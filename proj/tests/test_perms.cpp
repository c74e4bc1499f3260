#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "m0n/circular_order.hpp"

using namespace m0n;
using test::order;

TEST_CASE("construction rejects non-permutations") {
  CHECK_THROWS_AS(CircularOrder({1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CircularOrder({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CircularOrder({1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(CircularOrder::parse("12a"), std::invalid_argument);
  CHECK(order("312").to_string() == "312");
}

TEST_CASE("cyclic_normalize") {
  CHECK(cyclic_normalize(order("561234")) == order("123456"));
  CHECK(cyclic_normalize(order("123456")) == order("123456"));
  CHECK(cyclic_normalize(order("462513")) == order("251346"));
}

TEST_CASE("dihedral_equal") {
  CHECK(dihedral_equal(order("1234"), order("4321")));
  CHECK(dihedral_equal(order("1234"), order("2341")));
  CHECK_FALSE(dihedral_equal(order("1234"), order("1324")));
  CHECK_THROWS(dihedral_equal(order("123"), order("1234")));
}

TEST_CASE("dihedral_equal against the eight images of 1234") {
  std::set<CircularOrder> images;
  const CircularOrder a = order("1234");
  for (int r = 0; r < 4; ++r) {
    images.insert(a.rotated(r));
    images.insert(a.reversed().rotated(r));
  }
  CHECK(images.size() == 8);
  std::vector<Label> p{1, 2, 3, 4};
  do {
    const CircularOrder b(p);
    CHECK(dihedral_equal(a, b) == (images.count(b) == 1));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("standard_representatives") {
  auto strings = [](int n) {
    std::vector<std::string> out;
    for (const auto& a : standard_representatives(n)) out.push_back(a.to_string());
    return out;
  };
  CHECK(strings(3) == std::vector<std::string>{"123"});
  CHECK(strings(4) == std::vector<std::string>{"1234", "1324", "2134"});
  const auto five = standard_representatives(5);
  CHECK(five.size() == 12);
  for (const auto& a : five) {
    CHECK(a.back() == 5);
    CHECK(a.position(1) < a.position(4));
  }
}

TEST_CASE("one representative per dihedral class, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    const auto reps = standard_representatives(n);
    const std::set<CircularOrder> rep_set(reps.begin(), reps.end());
    std::vector<Label> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::set<CircularOrder> hit;
    do {
      const CircularOrder a(p);
      const CircularOrder r = dihedral_normalize(a);
      REQUIRE(rep_set.count(r) == 1);
      CHECK(dihedral_equal(a, r));
      hit.insert(r);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(hit.size() == reps.size());
  }
}

TEST_CASE("bounded_chambers") {
  CHECK(bounded_chambers(4).size() == 1);
  CHECK(bounded_chambers(5).size() == 2);
  CHECK(bounded_chambers(6).size() == 6);
  for (const auto& a : bounded_chambers(6)) {
    CHECK(is_standard(a));
    CHECK(a[0] == 1);
    CHECK(a[4] == 5);
  }
}

TEST_CASE("winding number examples") {
  CHECK(winding_number(order("12345"), order("31425")) == 3);
  CHECK(winding_number(order("12345"), order("12345")) == 1);
  CHECK(winding_number(order("123456"), order("134256")) == 2);
  CHECK(winding_number(order("123"), order("321")) == 2);
}

TEST_CASE("winding number properties") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const CircularOrder a(test::random_permutation(n, rng)), b(test::random_permutation(n, rng));
    const int w = winding_number(a, b);
    CHECK(w >= 1);
    CHECK(w <= n - 1);
    CHECK(winding_number(a, a) == 1);
    CHECK(winding_number(a.rotated(static_cast<int>(rng() % static_cast<std::uint64_t>(n))), b) == w);
    CHECK(winding_number(a, b.rotated(static_cast<int>(rng() % static_cast<std::uint64_t>(n)))) == w);
    // b's clockwise path around a, read backwards, winds n - w times
    CHECK(winding_number(a, b.reversed()) == n - w);
  }
}
