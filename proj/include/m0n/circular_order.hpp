#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace m0n {

using Label = int;

/// A permutation of {1,...,n} read clockwise around a circle. Names a cell
/// Delta(alpha) of M_{0,n}(R); only the dihedral class matters geometrically,
/// but the sequence itself (and its rotation class) carries orientation.
class CircularOrder {
 public:
  /// Throws std::invalid_argument unless `order` is a permutation of 1..n
  /// with n >= 3.
  explicit CircularOrder(std::vector<Label> order);

  /// Parses a digit string such as "134256" (n <= 9).
  static CircularOrder parse(std::string_view digits);
  static CircularOrder identity(int n);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  std::span<const Label> labels() const noexcept { return order_; }
  Label operator[](int i) const { return order_[static_cast<std::size_t>(i)]; }
  Label back() const { return order_.back(); }

  /// Index of `label` in the sequence.
  int position(Label label) const { return position_[static_cast<std::size_t>(label)]; }

  CircularOrder reversed() const;
  /// Cyclic shift by `k` places to the left.
  CircularOrder rotated(int k) const;

  /// Digit string for n <= 9, otherwise comma separated.
  std::string to_string() const;

  friend bool operator==(const CircularOrder& a, const CircularOrder& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const CircularOrder& a, const CircularOrder& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<Label> order_;
  std::vector<int> position_;  // indexed by label, slot 0 unused
};

/// Canonical representative of the rotation class: the rotation ending in n.
CircularOrder cyclic_normalize(const CircularOrder& a);

bool rotation_equal(const CircularOrder& a, const CircularOrder& b);

/// True iff `b` is a rotation of `a` or of `a` reversed. Throws
/// std::invalid_argument on mismatched n.
bool dihedral_equal(const CircularOrder& a, const CircularOrder& b);

/// Representative of the dihedral class: last entry n and label 1 before
/// label n-1.
CircularOrder dihedral_normalize(const CircularOrder& a);

bool is_standard(const CircularOrder& a);

/// One order per class of S_n / D_n, each ending in n with 1 before n-1,
/// in lexicographic order. There are (n-1)!/2 of them (1 for n = 3).
std::vector<CircularOrder> standard_representatives(int n);

/// The (n-3)! orders fixing 1, n-1 and n in their own slots.
std::vector<CircularOrder> bounded_chambers(int n);

/// Relative winding number w(a|b): place a's labels clockwise on a circle,
/// walk through b's labels always moving clockwise, and count full turns.
int winding_number(const CircularOrder& a, const CircularOrder& b);

}  // namespace m0n
