#include "m0n/kinematics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "m0n/format.hpp"

namespace m0n {

Kinematics::Kinematics(Eigen::MatrixXd s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols() || s_.rows() < 3 || s_.rows() > LabelSet::kMaxLabel)
    throw std::invalid_argument("kinematics table must be n x n with 3 <= n <= 31");
  if (!s_.allFinite()) throw std::invalid_argument("kinematics table has non-finite entries");
  s_.diagonal().setZero();
  if (s_ != s_.transpose()) throw std::invalid_argument("kinematics table is not symmetric");
  const double scale = std::max(1.0, s_.cwiseAbs().maxCoeff());
  if (row_residuals().cwiseAbs().maxCoeff() > kRowSumTolerance * scale)
    throw std::invalid_argument("kinematics rows do not sum to zero");
}

Kinematics Kinematics::relabeled(const std::vector<Label>& sigma) const {
  const int m = n();
  if (static_cast<int>(sigma.size()) != m) throw std::invalid_argument("relabeling has wrong size");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(sigma[static_cast<std::size_t>(i)] - 1, sigma[static_cast<std::size_t>(j)] - 1) = s_(i, j);
  return Kinematics(std::move(out));
}

Kinematics sample(int n, std::uint64_t seed) {
  if (n < 3 || n > LabelSet::kMaxLabel) throw std::invalid_argument("sample: need 3 <= n <= 31");
  std::mt19937_64 rng(seed);
  // explicit 53-bit mapping; std::uniform_real_distribution is not portable
  auto uniform = [&rng] { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  const int last = n - 1;  // labels 1..last are drawn
  double total = 0.0;
  for (int i = 1; i <= last; ++i)
    for (int j = i + 1; j <= last; ++j) {
      const double x = uniform();
      if (i == last - 1 && j == last) continue;
      s(i - 1, j - 1) = s(j - 1, i - 1) = x;
      total += x;
    }
  s(last - 2, last - 1) = s(last - 1, last - 2) = -total;
  for (int i = 0; i < last; ++i) {
    double row = 0.0;
    for (int j = 0; j < last; ++j) row += s(i, j);
    s(i, n - 1) = s(n - 1, i) = -row;
  }
  return Kinematics(std::move(s));
}

double s_subset(const Kinematics& k, LabelSet subset) {
  const int n = k.n();
  if (!subset.subset_of(LabelSet::all(n)) || subset.size() < 2 || subset.size() > n - 2)
    throw std::invalid_argument("s_subset needs 2 <= |S| <= n-2 inside 1..n");
  const auto labels = subset.labels();
  double sum = 0.0;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) sum += k(labels[a], labels[b]);
  return sum;
}

std::vector<LabelSet> genericity_check(const Kinematics& k, double margin) {
  const int n = k.n();
  std::vector<LabelSet> violations;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const LabelSet s = LabelSet::from_bits(mask << 1);
    if (s.size() < 2 || s.size() > n - 2) continue;
    const double v = s_subset(k, s);
    if (std::abs(v - std::round(v)) < margin) violations.push_back(s);
  }
  return violations;
}

long genericity_subset_count(int n) { return (1L << (n - 1)) - n - 1; }

Kinematics sample_generic(int n, std::uint64_t seed, std::uint64_t* used_seed) {
  for (std::uint64_t s = seed;; ++s) {
    Kinematics k = sample(n, s);
    if (genericity_check(k).empty()) {
      if (used_seed) *used_seed = s;
      return k;
    }
  }
}

Kinematics kinematics_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const int n = doc.at("n").get<int>();
  if (n < 3 || n > LabelSet::kMaxLabel) throw std::invalid_argument("kinematics: n out of range");
  const auto& entries = doc.at("s");
  if (!entries.is_object()) throw std::invalid_argument("kinematics: \"s\" must be an object");
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [key, value] : entries.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("kinematics: bad pair key \"" + key + "\"");
    const int i = std::stoi(key.substr(0, comma));
    const int j = std::stoi(key.substr(comma + 1));
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::invalid_argument("kinematics: bad pair key \"" + key + "\"");
    const double x = value.get<double>();
    if (seen(i - 1, j - 1) && s(i - 1, j - 1) != x)
      throw std::invalid_argument("kinematics: s_" + key + " given twice with different values");
    s(i - 1, j - 1) = s(j - 1, i - 1) = x;
    seen(i - 1, j - 1) = seen(j - 1, i - 1) = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!seen(i, j))
        throw std::invalid_argument("kinematics: missing s_" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  return Kinematics(std::move(s));
}

std::string kinematics_to_json(const Kinematics& k) {
  std::string out = "{\"n\":" + std::to_string(k.n()) + ",\"s\":{";
  bool first = true;
  for (int i = 1; i <= k.n(); ++i)
    for (int j = i + 1; j <= k.n(); ++j) {
      if (!first) out += ',';
      first = false;
      out += "\"" + std::to_string(i) + "," + std::to_string(j) + "\":" + format_number(k(i, j));
    }
  return out + "}}";
}

}  // namespace m0n
