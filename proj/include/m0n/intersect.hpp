#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "m0n/associahedron.hpp"
#include "m0n/circular_order.hpp"
#include "m0n/kinematics.hpp"

namespace m0n {

using Complex = std::complex<double>;

/// cot(pi x) and csc(pi x), reduced modulo the period first.
double cot_pi(double x);
double csc_pi(double x);

/// An intersection number <C+(alpha), C-(beta)> and its factored form
///   value = sign (i/2)^prefactor_power prod csc(csc_args) prod m_factors.
struct PairValue {
  Complex value{0.0, 0.0};
  int sign = 1;             // (-1)^{w(alpha|beta)+1}
  int prefactor_power = 0;  // n - 3
  std::vector<double> csc_args;   // pi s_e, one per internal edge
  std::vector<double> m_factors;  // one per internal vertex
  bool empty = false;

  // provenance for reporting
  int winding = 0;
  std::optional<Face> face;
  std::vector<LabelSet> edge_subsets;                       // parallel to csc_args
  std::vector<std::vector<std::vector<Label>>> vertex_blocks;  // parallel to m_factors

  /// Recomputes the value from the factored form.
  Complex recompose() const;
};

/// (i/2)^power, exact in binary floating point.
Complex half_i_power(int power);

/// m(a_1, ..., a_p): sum over admissible faces of K_{p-1} on the letters
/// a_1 ... a_{p-1} (a_p in the role of n) of
///   prod_v C_{(|v|-3)/2} prod_e cot(pi s_e),
/// with s_e the subset sum over the blocks spanned by e. The blocks must
/// partition {1..n}; p >= 3. Throws GenericityError if some s_e is within
/// `margin` of an integer.
double m_value(std::span<const LabelSet> blocks, const Kinematics& k, double margin = kGenericityMargin);
double m_value(const std::vector<std::vector<Label>>& blocks, const Kinematics& k,
               double margin = kGenericityMargin);

/// One admissible face's contribution to m: Catalan weight times the
/// cotangents of its edges.
struct MTerm {
  std::vector<LabelSet> edges;  // s_e subsets, in bracket order
  double weight = 1.0;
  double value = 0.0;
};

/// The individual terms of m_value (they sum to it).
std::vector<MTerm> m_expansion(std::span<const LabelSet> blocks, const Kinematics& k,
                               double margin = kGenericityMargin);

/// (i/2)^{n-3} m(alpha(1), ..., alpha(n)).
PairValue diagonal(const CircularOrder& alpha, const Kinematics& k, double margin = kGenericityMargin);

/// (-1)^{n-3} sum over all faces F of K(alpha) of prod_{a in F} 1/(e(s_a)-1),
/// e(x) = exp(2 pi i x).
Complex oracle_diagonal(const Kinematics& k, const CircularOrder& alpha, double margin = kGenericityMargin);
Complex oracle_diagonal(const Kinematics& k, int n, double margin = kGenericityMargin);

/// Admissible-tree expansion of <C+(alpha), C-(beta)>; zero (empty) when
/// the cells do not meet. Both orders are rotated to end in n first.
PairValue pair(const CircularOrder& alpha, const CircularOrder& beta, const Kinematics& k,
               double margin = kGenericityMargin);

/// Face-sum evaluation through the local intersection formula:
///   prod_{a in F} (-1)^{|a|-2} (1/2i)^{|F|} prod csc(pi s_a) (-1)^{dim F}
///   sum_{F' ⊇ F} prod_{a in F' \ F} 1/(e(s_a)-1),
/// times (-1)^n when beta is reached only as the reversal of a twist of
/// alpha. Uses intersection_face_oracle. Throws std::invalid_argument if
/// the cells do not meet.
Complex oracle_pair(const CircularOrder& alpha, const CircularOrder& beta, const Kinematics& k,
                    double margin = kGenericityMargin);

/// Field-theory limit: (-1)^{w+1} sum over triangulations T refining
/// F = K(alpha) ∩ K(beta) of prod_{e in T} 1/s_e. Zero if the cells do not
/// meet; throws GenericityError if some s_e vanishes.
double ft_inverse_kernel(const CircularOrder& alpha, const CircularOrder& beta, const Kinematics& k);

enum class Basis { all_classes, bounded_chambers };

struct IntersectionMatrix {
  int n = 0;
  Basis basis = Basis::all_classes;
  std::vector<CircularOrder> labels;
  std::vector<std::vector<PairValue>> entries;  // entries[row][col] = pair(labels[row], labels[col])

  Eigen::MatrixXcd values() const;
};

IntersectionMatrix intersection_matrix(int n, const Kinematics& k, Basis basis,
                                       double margin = kGenericityMargin);

}  // namespace m0n
