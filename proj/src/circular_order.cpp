#include "m0n/circular_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace m0n {

CircularOrder::CircularOrder(std::vector<Label> order) : order_(std::move(order)) {
  const int n = size();
  if (n < 3) throw std::invalid_argument("circular order needs n >= 3");
  position_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    const Label l = order_[static_cast<std::size_t>(i)];
    if (l < 1 || l > n || position_[static_cast<std::size_t>(l)] != -1)
      throw std::invalid_argument("circular order is not a permutation of 1..n");
    position_[static_cast<std::size_t>(l)] = i;
  }
}

CircularOrder CircularOrder::parse(std::string_view digits) {
  std::vector<Label> order;
  order.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("circular order digit string must use 1-9");
    order.push_back(c - '0');
  }
  return CircularOrder(std::move(order));
}

CircularOrder CircularOrder::identity(int n) {
  if (n < 3) throw std::invalid_argument("circular order needs n >= 3");
  std::vector<Label> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return CircularOrder(std::move(order));
}

CircularOrder CircularOrder::reversed() const {
  return CircularOrder(std::vector<Label>(order_.rbegin(), order_.rend()));
}

CircularOrder CircularOrder::rotated(int k) const {
  const int n = size();
  k = ((k % n) + n) % n;
  std::vector<Label> out(order_);
  std::rotate(out.begin(), out.begin() + k, out.end());
  return CircularOrder(std::move(out));
}

std::string CircularOrder::to_string() const {
  std::string s;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(order_[i]);
  }
  return s;
}

CircularOrder cyclic_normalize(const CircularOrder& a) {
  return a.rotated(a.position(a.size()) + 1);
}

namespace {

void require_same_size(const CircularOrder& a, const CircularOrder& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("circular orders have different n");
}

}  // namespace

bool rotation_equal(const CircularOrder& a, const CircularOrder& b) {
  require_same_size(a, b);
  return cyclic_normalize(a) == cyclic_normalize(b);
}

bool dihedral_equal(const CircularOrder& a, const CircularOrder& b) {
  require_same_size(a, b);
  const CircularOrder nb = cyclic_normalize(b);
  return cyclic_normalize(a) == nb || cyclic_normalize(a.reversed()) == nb;
}

CircularOrder dihedral_normalize(const CircularOrder& a) {
  CircularOrder r = cyclic_normalize(a);
  if (is_standard(r)) return r;
  return cyclic_normalize(a.reversed());
}

bool is_standard(const CircularOrder& a) {
  const int n = a.size();
  if (a.back() != n) return false;
  return a.position(1) < a.position(n - 1);
}

std::vector<CircularOrder> standard_representatives(int n) {
  if (n < 3) throw std::invalid_argument("standard_representatives needs n >= 3");
  std::vector<Label> head(static_cast<std::size_t>(n - 1));
  std::iota(head.begin(), head.end(), 1);
  std::vector<CircularOrder> out;
  do {
    std::vector<Label> order(head);
    order.push_back(n);
    CircularOrder c(std::move(order));
    if (is_standard(c)) out.push_back(std::move(c));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

std::vector<CircularOrder> bounded_chambers(int n) {
  if (n < 3) throw std::invalid_argument("bounded_chambers needs n >= 3");
  std::vector<Label> middle;
  for (Label l = 2; l <= n - 2; ++l) middle.push_back(l);
  std::vector<CircularOrder> out;
  do {
    std::vector<Label> order{1};
    order.insert(order.end(), middle.begin(), middle.end());
    order.push_back(n - 1);
    order.push_back(n);
    out.emplace_back(std::move(order));
  } while (std::next_permutation(middle.begin(), middle.end()));
  return out;
}

int winding_number(const CircularOrder& a, const CircularOrder& b) {
  require_same_size(a, b);
  const int n = a.size();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    const int from = a.position(b[i]);
    const int to = a.position(b[(i + 1) % n]);
    total += ((to - from) % n + n) % n;
  }
  return total / n;
}

}  // namespace m0n
