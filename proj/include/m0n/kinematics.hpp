#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "m0n/label_set.hpp"

namespace m0n {

/// Default distance from the integers below which a subset sum counts as
/// non-generic.
inline constexpr double kGenericityMargin = 1e-3;

/// Symmetric exponents s_ij with vanishing row sums, sum_{j != i} s_ij = 0.
/// Stored as an n x n matrix with a zero diagonal.
class Kinematics {
 public:
  /// Throws std::invalid_argument if `s` is not n x n symmetric or a row sum
  /// exceeds kRowSumTolerance (scaled by max(1, max|s_ij|)).
  explicit Kinematics(Eigen::MatrixXd s);

  static constexpr double kRowSumTolerance = 1e-12;

  int n() const noexcept { return static_cast<int>(s_.rows()); }
  double operator()(Label i, Label j) const { return s_(i - 1, j - 1); }
  const Eigen::MatrixXd& table() const noexcept { return s_; }

  /// sum_{j != i} s_ij for each i.
  Eigen::VectorXd row_residuals() const { return s_.rowwise().sum(); }

  /// Every s_ij is zero (as forced for n = 3).
  bool degenerate() const { return s_.isZero(0.0); }

  Kinematics scaled(double factor) const { return Kinematics(factor * s_); }

  /// The table seen through a relabeling: result(sigma(i), sigma(j)) = s_ij.
  /// `sigma[i-1]` is the image of label i.
  Kinematics relabeled(const std::vector<Label>& sigma) const;

 private:
  Eigen::MatrixXd s_;
};

/// Uniform draws in [-1, 1] for pairs inside {1..n-1}, the last such pair
/// balancing their total to zero, then s_in fixed by the row sums. Identical
/// seeds give bit-identical tables.
Kinematics sample(int n, std::uint64_t seed);

/// s_S = sum over pairs i < j in S. Equals s_{S^c}. Throws
/// std::invalid_argument unless 2 <= |S| <= n-2.
double s_subset(const Kinematics& k, LabelSet subset);

/// Subsets S (one per complementary pair, the one without n) whose s_S lies
/// within `margin` of an integer. Empty means the table is generic.
std::vector<LabelSet> genericity_check(const Kinematics& k, double margin = kGenericityMargin);

/// Number of subsets genericity_check inspects: 2^{n-1} - n - 1.
long genericity_subset_count(int n);

/// The first table sample(n, s) with s = seed, seed+1, ... that passes
/// genericity_check. Returns the seed used through `used_seed` if given.
Kinematics sample_generic(int n, std::uint64_t seed, std::uint64_t* used_seed = nullptr);

/// Parses {"n": 6, "s": {"1,2": 0.31, ...}}. Missing pairs are rejected.
Kinematics kinematics_from_json(const std::string& text);
std::string kinematics_to_json(const Kinematics& k);

}  // namespace m0n
