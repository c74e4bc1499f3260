#include "m0n/intersect.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "m0n/errors.hpp"
#include "m0n/moduli.hpp"
#include "m0n/wz.hpp"

namespace m0n {

namespace {

constexpr double kPi = std::numbers::pi;

void require_generic(double s, LabelSet subset, double margin) {
  if (std::abs(s - std::round(s)) < margin) throw GenericityError(subset.labels(), s);
}

/// One admissible face of K_{p-1} on the letters 1..p-1: its Catalan
/// weight and its brackets as letter masks.
struct AdmissibleTerm {
  double weight;
  std::vector<std::uint32_t> brackets;
};

const std::vector<AdmissibleTerm>& admissible_terms(int p) {
  static std::mutex mutex;
  static std::map<int, std::vector<AdmissibleTerm>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::vector<AdmissibleTerm> terms;
  for_each_face(CircularOrder::identity(p), 0, p - 3, [&](const Face& f) {
    if (!is_admissible(f)) return;
    AdmissibleTerm t{1.0, {}};
    for (int v : internal_valencies(f)) t.weight *= catalan((v - 3) / 2).convert_to<double>();
    for (const Bracket& b : f.brackets()) t.brackets.push_back(b.labels().bits());
    terms.push_back(std::move(t));
  });
  return cache.emplace(p, std::move(terms)).first->second;
}

Complex inverse_e_minus_one(double s) {
  return 1.0 / (std::polar(1.0, 2.0 * kPi * s) - 1.0);
}

int parity_sign(long k) { return k % 2 == 0 ? 1 : -1; }

PairValue evaluate_on_face(const Face& f, int winding, const Kinematics& k, double margin) {
  PairValue out;
  const int n = f.n();
  out.winding = winding;
  out.sign = parity_sign(winding + 1);
  out.prefactor_power = n - 3;
  double real = out.sign;
  for (const Bracket& b : f.brackets()) {
    const double s = s_subset(k, b.labels());
    require_generic(s, b.labels(), margin);
    real *= csc_pi(s);
    out.csc_args.push_back(kPi * s);
    out.edge_subsets.push_back(b.labels());
  }
  const LabeledTree tree = face_to_tree(f);
  for (int v : tree.internal_vertices()) {
    auto blocks = vertex_blocks(tree, v);
    out.m_factors.push_back(m_value(blocks, k, margin));
    real *= out.m_factors.back();
    out.vertex_blocks.push_back(std::move(blocks));
  }
  out.face = f;
  out.value = half_i_power(out.prefactor_power) * real;
  return out;
}

}  // namespace

double cot_pi(double x) {
  const double r = x - std::round(x);
  return std::cos(kPi * r) / std::sin(kPi * r);
}

double csc_pi(double x) {
  const double m = std::round(x);
  const double r = x - m;
  return (std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0) / std::sin(kPi * r);
}

Complex half_i_power(int power) {
  static constexpr Complex kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kUnits[((power % 4) + 4) % 4] * std::ldexp(1.0, -power);
}

Complex PairValue::recompose() const {
  if (empty) return {0.0, 0.0};
  double real = sign;
  for (double a : csc_args) real /= std::sin(a);
  for (double m : m_factors) real *= m;
  return half_i_power(prefactor_power) * real;
}

namespace {

// Subset sum of the blocks spanned by each bracket of K_{p-1}, keyed by
// the bracket's letter mask. Validates the blocks.
std::unordered_map<std::uint32_t, LabelSet> spanned_subsets(std::span<const LabelSet> blocks, int n) {
  const int p = static_cast<int>(blocks.size());
  if (p < 3) throw std::invalid_argument("m_value needs at least three blocks");
  LabelSet seen;
  for (LabelSet b : blocks) {
    if (b.empty() || !b.disjoint(seen)) throw std::invalid_argument("m_value: blocks must be nonempty and disjoint");
    seen = seen | b;
  }
  if (seen != LabelSet::all(n)) throw std::invalid_argument("m_value: blocks must cover 1..n");
  std::unordered_map<std::uint32_t, LabelSet> out;
  if (p == 3) return out;
  for (const Bracket& letters : all_brackets(CircularOrder::identity(p))) {
    LabelSet labels;
    for (Label letter : letters.labels().labels()) labels = labels | blocks[static_cast<std::size_t>(letter - 1)];
    out.emplace(letters.labels().bits(), labels);
  }
  return out;
}

}  // namespace

double m_value(std::span<const LabelSet> blocks, const Kinematics& k, double margin) {
  const auto spanned = spanned_subsets(blocks, k.n());
  if (blocks.size() == 3) return 1.0;
  std::unordered_map<std::uint32_t, double> cot_of;
  for (const auto& [letters, labels] : spanned) {
    const double s = s_subset(k, labels);
    require_generic(s, labels, margin);
    cot_of.emplace(letters, cot_pi(s));
  }
  double sum = 0.0;
  for (const AdmissibleTerm& term : admissible_terms(static_cast<int>(blocks.size()))) {
    double t = term.weight;
    for (std::uint32_t b : term.brackets) t *= cot_of.at(b);
    sum += t;
  }
  return sum;
}

std::vector<MTerm> m_expansion(std::span<const LabelSet> blocks, const Kinematics& k, double margin) {
  const auto spanned = spanned_subsets(blocks, k.n());
  if (blocks.size() == 3) return {MTerm{{}, 1.0, 1.0}};
  std::vector<MTerm> out;
  for (const AdmissibleTerm& term : admissible_terms(static_cast<int>(blocks.size()))) {
    MTerm t{{}, term.weight, term.weight};
    for (std::uint32_t b : term.brackets) {
      const LabelSet labels = spanned.at(b);
      const double s = s_subset(k, labels);
      require_generic(s, labels, margin);
      t.edges.push_back(labels);
      t.value *= cot_pi(s);
    }
    out.push_back(std::move(t));
  }
  return out;
}

double m_value(const std::vector<std::vector<Label>>& blocks, const Kinematics& k, double margin) {
  std::vector<LabelSet> sets;
  sets.reserve(blocks.size());
  for (const auto& b : blocks) sets.emplace_back(std::span<const Label>(b));
  return m_value(std::span<const LabelSet>(sets), k, margin);
}

PairValue diagonal(const CircularOrder& alpha, const Kinematics& k, double margin) {
  if (alpha.size() != k.n()) throw std::invalid_argument("diagonal: order and kinematics disagree on n");
  return evaluate_on_face(Face(cyclic_normalize(alpha)), 1, k, margin);
}

Complex oracle_diagonal(const Kinematics& k, const CircularOrder& alpha, double margin) {
  const int n = alpha.size();
  if (n != k.n()) throw std::invalid_argument("oracle_diagonal: order and kinematics disagree on n");
  std::map<std::uint32_t, Complex> factor;
  for (const Bracket& b : all_brackets(cyclic_normalize(alpha))) {
    const double s = s_subset(k, b.labels());
    require_generic(s, b.labels(), margin);
    factor.emplace(b.labels().bits(), inverse_e_minus_one(s));
  }
  Complex sum{0.0, 0.0};
  for_each_face(alpha, 0, n - 3, [&](const Face& f) {
    Complex term{1.0, 0.0};
    for (const Bracket& b : f.brackets()) term *= factor.at(b.labels().bits());
    sum += term;
  });
  return static_cast<double>(parity_sign(n - 3)) * sum;
}

Complex oracle_diagonal(const Kinematics& k, int n, double margin) {
  return oracle_diagonal(k, CircularOrder::identity(n), margin);
}

PairValue pair(const CircularOrder& alpha, const CircularOrder& beta, const Kinematics& k, double margin) {
  if (alpha.size() != beta.size() || alpha.size() != k.n())
    throw std::invalid_argument("pair: orders and kinematics disagree on n");
  const CircularOrder a = cyclic_normalize(alpha);
  const CircularOrder b = cyclic_normalize(beta);
  const int w = winding_number(a, b);
  const std::optional<Face> f = intersection_face(a, b);
  if (!f) {
    PairValue out;
    out.empty = true;
    out.winding = w;
    out.sign = parity_sign(w + 1);
    out.prefactor_power = a.size() - 3;
    return out;
  }
  return evaluate_on_face(*f, w, k, margin);
}

Complex oracle_pair(const CircularOrder& alpha, const CircularOrder& beta, const Kinematics& k, double margin) {
  const int n = alpha.size();
  if (beta.size() != n || k.n() != n) throw std::invalid_argument("oracle_pair: orders and kinematics disagree on n");
  const std::optional<Face> f = intersection_face_oracle(alpha, beta);
  if (!f) throw std::invalid_argument("oracle_pair: the cells do not meet");
  const std::optional<Orientation> orientation = orbit_match(twist_orbit(*f), beta);
  if (!orientation) throw InternalError("oracle_pair: beta missing from the orbit of its own face");

  Complex prefactor{1.0, 0.0};
  for (const Bracket& a : f->brackets()) {
    const double s = s_subset(k, a.labels());
    require_generic(s, a.labels(), margin);
    prefactor *= static_cast<double>(parity_sign(a.size() - 2)) * Complex(0.0, -0.5) * csc_pi(s);
  }
  prefactor *= static_cast<double>(parity_sign(f->dim()));
  if (*orientation == Orientation::reversed) prefactor *= static_cast<double>(parity_sign(n));

  Complex sum{0.0, 0.0};
  for (const Face& g : subfaces(*f)) {
    Complex term{1.0, 0.0};
    for (const Bracket& a : g.brackets()) {
      if (f->contains(a)) continue;
      const double s = s_subset(k, a.labels());
      require_generic(s, a.labels(), margin);
      term *= inverse_e_minus_one(s);
    }
    sum += term;
  }
  return prefactor * sum;
}

double ft_inverse_kernel(const CircularOrder& alpha, const CircularOrder& beta, const Kinematics& k) {
  if (alpha.size() != beta.size() || alpha.size() != k.n())
    throw std::invalid_argument("ft_inverse_kernel: orders and kinematics disagree on n");
  const CircularOrder a = cyclic_normalize(alpha);
  const CircularOrder b = cyclic_normalize(beta);
  const std::optional<Face> f = intersection_face(a, b);
  if (!f) return 0.0;
  double sum = 0.0;
  for (const Face& t : subfaces(*f)) {
    if (t.dim() != 0) continue;
    double term = 1.0;
    for (const Bracket& e : t.brackets()) {
      const double s = s_subset(k, e.labels());
      if (s == 0.0) throw GenericityError(e.labels().labels(), s);
      term /= s;
    }
    sum += term;
  }
  return parity_sign(winding_number(a, b) + 1) * sum;
}

Eigen::MatrixXcd IntersectionMatrix::values() const {
  const auto size = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXcd out(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = 0; c < size; ++c)
      out(r, c) = entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].value;
  return out;
}

IntersectionMatrix intersection_matrix(int n, const Kinematics& k, Basis basis, double margin) {
  if (k.n() != n) throw std::invalid_argument("intersection_matrix: kinematics has a different n");
  IntersectionMatrix m;
  m.n = n;
  m.basis = basis;
  m.labels = basis == Basis::all_classes ? standard_representatives(n) : bounded_chambers(n);
  for (const CircularOrder& row : m.labels) {
    std::vector<PairValue> line;
    for (const CircularOrder& col : m.labels) line.push_back(pair(row, col, k, margin));
    m.entries.push_back(std::move(line));
  }
  return m;
}

}  // namespace m0n
