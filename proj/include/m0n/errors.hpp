#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace m0n {

/// Raised when a subset sum s_S sits within the genericity margin of an
/// integer, i.e. a cot/csc or 1/(e(s)-1) factor is at (or near) a pole.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(std::vector<int> subset, double value)
      : std::runtime_error(describe(subset, value)),
        subset_(std::move(subset)),
        value_(value) {}

  const std::vector<int>& subset() const noexcept { return subset_; }
  double value() const noexcept { return value_; }

 private:
  static std::string describe(const std::vector<int>& subset, double value) {
    std::string s = "non-generic kinematics: s_{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(subset[i]);
    }
    s += "} = " + std::to_string(value) + " is too close to an integer";
    return s;
  }

  std::vector<int> subset_;
  double value_;
};

/// An internal consistency check failed (e.g. two incomparable maximal
/// common faces). Signals a bug, never a data condition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace m0n
