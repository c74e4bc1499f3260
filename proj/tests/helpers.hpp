#pragma once

#include <complex>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "m0n/associahedron.hpp"
#include "m0n/circular_order.hpp"

namespace m0n::test {

inline CircularOrder order(const char* digits) { return CircularOrder::parse(digits); }

inline Face face(const char* word, std::initializer_list<std::initializer_list<Label>> brackets = {}) {
  const CircularOrder w = order(word);
  std::vector<Bracket> b;
  for (auto l : brackets) b.emplace_back(LabelSet(l), w.size());
  return Face(w, std::move(b));
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

inline std::vector<Label> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Label> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace m0n::test
