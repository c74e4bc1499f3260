#include "m0n/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "m0n/associahedron.hpp"
#include "m0n/circular_order.hpp"
#include "m0n/format.hpp"
#include "m0n/intersect.hpp"
#include "m0n/kinematics.hpp"
#include "m0n/moduli.hpp"
#include "m0n/wz.hpp"

namespace m0n {

namespace {

class Suite {
 public:
  Suite(std::string prefix, const CheckSink& sink) : prefix_(std::move(prefix)), sink_(sink) {}

  bool check(const std::string& name, bool passed, const std::string& detail = {}) {
    ok_ = ok_ && passed;
    sink_(CheckResult{prefix_ + "." + name, passed, detail, false});
    return passed;
  }
  void info(const std::string& name, const std::string& detail) {
    sink_(CheckResult{prefix_ + "." + name, true, detail, true});
  }
  bool ok() const { return ok_; }

 private:
  std::string prefix_;
  const CheckSink& sink_;
  bool ok_ = true;
};

std::string cases(long count) { return std::to_string(count) + " cases"; }

double scaled_error(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

std::vector<Label> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Label> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[rng() % static_cast<std::uint64_t>(i + 1)]);
  return p;
}

CircularOrder relabel(const CircularOrder& a, const std::vector<Label>& sigma) {
  std::vector<Label> out;
  for (Label l : a.labels()) out.push_back(sigma[static_cast<std::size_t>(l - 1)]);
  return CircularOrder(std::move(out));
}

std::vector<CircularOrder> all_permutations(int n) {
  std::vector<Label> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<CircularOrder> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

long factorial_small(int n) { return n <= 1 ? 1 : n * factorial_small(n - 1); }

std::string order_list(const std::vector<CircularOrder>& orders) {
  std::string s;
  for (const auto& o : orders) s += (s.empty() ? "" : ",") + o.to_string();
  return s;
}

std::vector<LabelSet> singleton_blocks(const CircularOrder& a) {
  std::vector<LabelSet> out;
  for (Label l : a.labels()) out.push_back(LabelSet{l});
  return out;
}

}  // namespace

std::string format_check(const CheckResult& r) {
  const char* tag = r.info ? "INFO" : (r.passed ? "PASS" : "FAIL");
  return std::string(tag) + " " + r.name + (r.detail.empty() ? "" : ": " + r.detail);
}

bool verify_perms(const VerifyOptions& opt, const CheckSink& sink) {
  Suite s("perms", sink);
  const auto reps4 = standard_representatives(4);
  s.check("standard_representatives_n4", order_list(reps4) == "1234,1324,2134", order_list(reps4));

  for (int n = 3; n <= 7; ++n) {
    const auto reps = standard_representatives(n);
    const std::set<CircularOrder> rep_set(reps.begin(), reps.end());
    bool ok = static_cast<long>(reps.size()) == std::max(1L, factorial_small(n - 1) / 2) &&
              rep_set.size() == reps.size();
    for (const auto& r : reps) ok = ok && dihedral_normalize(r) == r && r.back() == n;
    long checked = 0;
    for (const auto& a : all_permutations(n)) {
      ++checked;
      if (n <= 5) {
        const auto hits = std::count_if(reps.begin(), reps.end(), [&](const CircularOrder& r) { return dihedral_equal(r, a); });
        ok = ok && hits == 1;
      } else {
        ok = ok && rep_set.count(dihedral_normalize(a)) == 1;
      }
    }
    s.check("one_per_class_n" + std::to_string(n), ok, std::to_string(reps.size()) + " classes, " + cases(checked));
  }

  {
    bool self = true, range = true;
    long count = 0;
    for (int n = 3; n <= 6; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& a : perms) self = self && winding_number(a, a) == 1;
      for (const auto& a : standard_representatives(n))
        for (const auto& b : perms) {
          const int w = winding_number(a, b);
          range = range && w >= 1 && w <= n - 1;
          ++count;
        }
    }
    s.check("winding_self_is_one", self, "all permutations, n <= 6");
    s.check("winding_range", range, "1 <= w <= n-1, " + cases(count));
  }

  {
    std::mt19937_64 rng(opt.seed);
    bool ok = true;
    for (int t = 0; t < 200; ++t) {
      const int n = 4 + static_cast<int>(rng() % 4);
      const CircularOrder a(random_permutation(n, rng)), b(random_permutation(n, rng));
      const auto sigma = random_permutation(n, rng);
      const int shift = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const int w = winding_number(a, b);
      ok = ok && winding_number(relabel(a, sigma), relabel(b, sigma)) == w &&
           winding_number(a.rotated(shift), b) == w && winding_number(a, b.rotated(shift)) == w;
    }
    s.check("winding_relabel_invariance", ok, cases(200));
  }

  s.check("winding_12345_31425", winding_number(CircularOrder::parse("12345"), CircularOrder::parse("31425")) == 3);
  s.check("winding_123456_134256", winding_number(CircularOrder::parse("123456"), CircularOrder::parse("134256")) == 2);
  s.check("cyclic_normalize_examples",
          cyclic_normalize(CircularOrder::parse("561234")).to_string() == "123456" &&
              cyclic_normalize(CircularOrder::parse("462513")).to_string() == "251346");
  s.check("dihedral_equal_examples",
          dihedral_equal(CircularOrder::parse("1234"), CircularOrder::parse("4321")) &&
              dihedral_equal(CircularOrder::parse("1234"), CircularOrder::parse("2341")) &&
              !dihedral_equal(CircularOrder::parse("1234"), CircularOrder::parse("1324")));
  return s.ok();
}

bool verify_associahedron(const VerifyOptions&, const CheckSink& sink) {
  Suite s("associahedron", sink);
  for (int n = 3; n <= 9; ++n) {
    std::vector<long> counts(static_cast<std::size_t>(n - 2), 0);
    bool valency_ok = true;
    for_each_face(CircularOrder::identity(n), 0, n - 3, [&](const Face& f) {
      ++counts[static_cast<std::size_t>(f.codim())];
      const auto val = internal_valencies(f);
      const int excess = std::accumulate(val.begin(), val.end(), 0) - 3 * static_cast<int>(val.size());
      valency_ok = valency_ok && excess == f.dim() &&
                   std::accumulate(val.begin(), val.end(), 0) == 2 * f.codim() + n;
    });
    bool counts_ok = true;
    BigInt euler = 0;
    std::string vec;
    for (int k = 0; k <= n - 3; ++k) {
      const BigInt fc = face_count(n, k);
      counts_ok = counts_ok && fc == counts[static_cast<std::size_t>(k)];
      euler += (n - 3 - k) % 2 ? BigInt(-fc) : fc;
      vec += (k ? "," : "") + std::to_string(counts[static_cast<std::size_t>(k)]);
    }
    s.check("face_counts_n" + std::to_string(n), counts_ok, "codim vector (" + vec + ")");
    s.check("euler_n" + std::to_string(n), euler == 1);
    s.check("valency_sums_n" + std::to_string(n), valency_ok);
  }

  for (int n = 3; n <= 7; ++n) {
    bool product_ok = true, tree_ok = true, blocks_ok = true;
    std::set<std::vector<std::vector<int>>> trees;
    long faces = 0;
    for_each_face(CircularOrder::identity(n), 0, n - 3, [&](const Face& f) {
      ++faces;
      const LabeledTree t = face_to_tree(f);
      BigInt product = 1;
      for (int v : t.internal_vertices()) product *= total_face_count(t.valency(v));
      product_ok = product_ok && product == subfaces(f).size();

      std::vector<Bracket> recovered;
      for (auto [u, v] : t.internal_edges()) recovered.emplace_back(t.side(u, v), n);
      std::sort(recovered.begin(), recovered.end());
      tree_ok = tree_ok && std::equal(recovered.begin(), recovered.end(), f.brackets().begin(), f.brackets().end()) &&
                trees.insert(t.adjacency).second;

      for (int v : t.internal_vertices()) {
        std::vector<Label> concat;
        for (const auto& b : vertex_blocks(t, v)) concat.insert(concat.end(), b.begin(), b.end());
        blocks_ok = blocks_ok && static_cast<int>(concat.size()) == n &&
                    rotation_equal(CircularOrder(concat), f.word());
      }
    });
    s.check("product_law_n" + std::to_string(n), product_ok, cases(faces));
    s.check("tree_injective_n" + std::to_string(n), tree_ok, cases(faces));
    s.check("vertex_blocks_partition_n" + std::to_string(n), blocks_ok, cases(faces));
  }

  {
    const Face f(CircularOrder::parse("123456"), {Bracket({3, 4}, 6), Bracket({2, 3, 4}, 6)});
    const Face g(CircularOrder::parse("123456"), {Bracket({3, 4}, 6), Bracket({2, 3, 4}, 6), Bracket({2, 3, 4, 5}, 6)});
    s.check("admissible_examples", !is_admissible(Face(CircularOrder::parse("1234"))) &&
                                       is_admissible(Face(CircularOrder::parse("1234"), {Bracket({1, 2}, 4)})) &&
                                       !is_admissible(f) && is_admissible(g));
    const LabeledTree t = face_to_tree(f);
    std::vector<std::vector<std::vector<Label>>> blocks;
    for (int v : t.internal_vertices()) blocks.push_back(vertex_blocks(t, v));
    using B = std::vector<std::vector<Label>>;
    const bool ok = std::find(blocks.begin(), blocks.end(), B{{1}, {2, 3, 4}, {5}, {6}}) != blocks.end() &&
                    std::find(blocks.begin(), blocks.end(), B{{3}, {4}, {5, 6, 1, 2}}) != blocks.end() &&
                    std::find(blocks.begin(), blocks.end(), B{{2}, {3, 4}, {5, 6, 1}}) != blocks.end();
    s.check("worked_example_blocks", ok, "(1,234,5,6) (2,34,561) (3,4,5612)");
  }
  return s.ok();
}

bool verify_moduli(const VerifyOptions& opt, const CheckSink& sink) {
  Suite s("moduli", sink);
  for (int n = 4; n <= std::min(6, opt.n_max); ++n) {
    const auto reps = standard_representatives(n);
    bool involution = true, orbit_ok = true, shared_ok = true;
    long faces = 0, facets = 0;
    for (const auto& a : reps) {
      for_each_face(a, 0, n - 3, [&](const Face& f) {
        ++faces;
        for (const Bracket& b : f.brackets()) involution = involution && twist(twist(f, b), b) == f;
        auto val = internal_valencies(f);
        std::sort(val.begin(), val.end());
        const TwistOrbit orbit = twist_orbit(f);
        std::set<CircularOrder> classes;
        for (const Face& m : orbit.members) {
          auto mv = internal_valencies(m);
          std::sort(mv.begin(), mv.end());
          orbit_ok = orbit_ok && m.dim() == f.dim() && mv == val &&
                     std::equal(m.brackets().begin(), m.brackets().end(), f.brackets().begin(), f.brackets().end());
          classes.insert(dihedral_normalize(m.word()));
        }
        if (f.codim() == 1) {
          ++facets;
          shared_ok = shared_ok && classes.size() == 2;
        }
        if (f.codim() == 0) shared_ok = shared_ok && classes.size() == 1;
      });
    }
    const std::string tag = "_n" + std::to_string(n);
    s.check("twist_involution" + tag, involution, cases(faces));
    s.check("orbit_invariants" + tag, orbit_ok, cases(faces));
    s.check("codim1_shared_by_two_cells" + tag, shared_ok,
            std::to_string(reps.size()) + " cells, " + std::to_string(facets) + " facets");
  }

  auto compare = [](const CircularOrder& a, const CircularOrder& b) {
    const auto fast = intersection_face(a, b);
    const auto slow = intersection_face_oracle(a, b);
    if (fast.has_value() != slow.has_value()) return false;
    if (!fast) return true;
    if (!(*fast == *slow)) return false;
    for (const Bracket& br : fast->brackets())
      if (!is_cyclic_interval(a, br.labels()) || !is_cyclic_interval(b, br.labels())) return false;
    return true;
  };
  for (int n = 4; n <= std::min(6, opt.n_max); ++n) {
    const auto reps = standard_representatives(n);
    bool ok = true;
    long empty = 0;
    for (const auto& a : reps)
      for (const auto& b : reps) {
        ok = ok && compare(a, b);
        empty += !intersection_face(a, b).has_value();
      }
    s.check("intersection_vs_oracle_n" + std::to_string(n), ok,
            cases(static_cast<long>(reps.size() * reps.size())) + ", " + std::to_string(empty) + " empty");
  }
  if (opt.n_max >= 7) {
    const auto reps = standard_representatives(7);
    std::mt19937_64 rng(opt.seed + 7);
    bool ok = true;
    for (int t = 0; t < opt.random_pairs; ++t) ok = ok && compare(reps[rng() % reps.size()], reps[rng() % reps.size()]);
    s.check("intersection_vs_oracle_n7_random", ok, cases(opt.random_pairs));
  }
  {
    const auto f = intersection_face(CircularOrder::parse("123456"), CircularOrder::parse("134256"));
    const Face expect(CircularOrder::parse("123456"), {Bracket({3, 4}, 6), Bracket({2, 3, 4}, 6)});
    s.check("example_134256", f.has_value() && *f == expect);
    s.check("example_146325_empty", !intersection_face(CircularOrder::parse("123456"), CircularOrder::parse("146325")));
  }
  return s.ok();
}

bool verify_kinematics(const VerifyOptions& opt, const CheckSink& sink) {
  Suite s("kinematics", sink);
  double worst = 0.0;
  bool deterministic = true;
  for (int n = 3; n <= 9; ++n)
    for (int t = 0; t < opt.seeds; ++t) {
      const Kinematics k = sample(n, opt.seed + static_cast<std::uint64_t>(t));
      worst = std::max(worst, k.row_residuals().cwiseAbs().maxCoeff());
      deterministic = deterministic && k.table() == sample(n, opt.seed + static_cast<std::uint64_t>(t)).table();
    }
  s.check("row_sum_residuals", worst <= 1e-12, "max " + format_number(worst));
  s.check("sample_deterministic", deterministic);
  s.check("n3_degenerate", sample(3, opt.seed).degenerate());

  std::mt19937_64 rng(opt.seed + 11);
  double worst_complement = 0.0, worst_additive = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const Kinematics k = sample(n, rng());
    const auto p = random_permutation(n, rng);
    const int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 3));
    const LabelSet subset(std::span<const Label>(p.data(), static_cast<std::size_t>(size)));
    worst_complement = std::max(worst_complement, std::abs(s_subset(k, subset) - s_subset(k, subset.complement(n))));

    const int m = 6 + static_cast<int>(rng() % 4);
    const Kinematics k2 = sample(m, rng());
    const auto q = random_permutation(m, rng);
    const LabelSet a{q[0], q[1]}, b{q[2], q[3]};
    double cross = 0.0;
    for (Label i : a.labels())
      for (Label j : b.labels()) cross += k2(i, j);
    worst_additive = std::max(worst_additive, std::abs(s_subset(k2, a | b) - s_subset(k2, a) - s_subset(k2, b) - cross));
  }
  s.check("complement_symmetry", worst_complement <= 1e-10, "max " + format_number(worst_complement));
  s.check("disjoint_union_additivity", worst_additive <= 1e-12, "max " + format_number(worst_additive));

  bool count_ok = true;
  for (int n = 3; n <= 9; ++n)
    count_ok = count_ok && static_cast<long>(genericity_check(sample(n, 1), 1.0).size()) == genericity_subset_count(n);
  s.check("checked_subset_count", count_ok, "2^{n-1} - n - 1 for n <= 9");

  Eigen::MatrixXd t(4, 4);
  t << 0, 1, -1, 0, 1, 0, 0, -1, -1, 0, 0, 1, 0, -1, 1, 0;
  const auto v = genericity_check(Kinematics(t));
  s.check("constructed_violation", std::find(v.begin(), v.end(), LabelSet{1, 2}) != v.end());

  int generic = 0;
  for (int t2 = 0; t2 < 1000; ++t2) generic += genericity_check(sample(7, static_cast<std::uint64_t>(t2))).empty();
  s.info("generic_fraction_n7", std::to_string(generic) + "/1000 sampled tables pass at margin 1e-3");
  return s.ok();
}

bool verify_intersect(const VerifyOptions& opt, const CheckSink& sink) {
  Suite s("intersect", sink);
  constexpr double kTol = 1e-9;

  for (int n = 4; n <= std::min(7, opt.n_max); ++n) {
    double worst = 0.0, worst_cancel = 0.0;
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(n));
    const auto reps = standard_representatives(n);
    for (int t = 0; t < opt.seeds; ++t) {
      const Kinematics k = sample_generic(n, opt.seed + 1000 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(t));
      for (const auto& a : {CircularOrder::identity(n), reps[rng() % reps.size()]}) {
        worst = std::max(worst, scaled_error(diagonal(a, k).value, oracle_diagonal(k, a)));
      }
      if (t < 3) {
        // C_F-weighted sum over every face reproduces the admissible expansion
        const CircularOrder a = CircularOrder::identity(n);
        const double m = m_value(singleton_blocks(a), k);
        Complex sum{0.0, 0.0};
        for_each_face(a, 0, n - 3, [&](const Face& f) {
          double cf = 1.0;
          for (int v : internal_valencies(f)) cf *= cf_face_sum_closed(v).convert_to<double>();
          double cots = 1.0;
          for (const Bracket& b : f.brackets()) cots *= cot_pi(s_subset(k, b.labels()));
          sum += cf * cots * std::pow(Complex(0.0, -1.0), f.dim());
        });
        worst_cancel = std::max(worst_cancel, scaled_error(sum, Complex(m, 0.0)));
      }
    }
    const std::string tag = "_n" + std::to_string(n);
    s.check("diagonal_vs_oracle" + tag, worst <= kTol,
            std::to_string(opt.seeds) + " seeds, max scaled error " + format_number(worst));
    s.check("only_admissible_contribute" + tag, worst_cancel <= kTol, "max scaled error " + format_number(worst_cancel));
  }

  double worst_real = 0.0, worst_recompose = 0.0;
  bool reduction = true;
  long symmetric = 0, symmetric_total = 0;
  auto inspect = [&](const CircularOrder& a, const CircularOrder& b, const PairValue& v, const Kinematics& k) {
    if (v.empty) return;
    const Complex unfolded = v.value / half_i_power(v.prefactor_power) * static_cast<double>(v.sign);
    worst_real = std::max(worst_real, std::abs(unfolded.imag()) / std::max(1e-300, std::abs(unfolded)));
    worst_recompose = std::max(worst_recompose, std::abs(v.recompose() - v.value) / std::max(1e-300, std::abs(v.value)));
    if (a == b) {
      const PairValue d = diagonal(a, k);
      reduction = reduction && d.value == v.value && d.csc_args == v.csc_args && d.m_factors == v.m_factors;
    }
  };

  for (int n = 5; n <= std::min(6, opt.n_max); ++n) {
    const auto reps = standard_representatives(n);
    const Kinematics k = sample_generic(n, opt.seed + 500 + static_cast<std::uint64_t>(n));
    double worst = 0.0;
    long nonempty = 0;
    std::map<std::pair<std::size_t, std::size_t>, Complex> values;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) {
        const PairValue v = pair(reps[i], reps[j], k);
        inspect(reps[i], reps[j], v, k);
        values[{i, j}] = v.value;
        if (v.empty) continue;
        ++nonempty;
        worst = std::max(worst, scaled_error(v.value, oracle_pair(reps[i], reps[j], k)));
      }
    for (const auto& [ij, z] : values) {
      if (z == Complex{} || ij.first >= ij.second) continue;
      ++symmetric_total;
      symmetric += scaled_error(z, values.at({ij.second, ij.first})) <= kTol;
    }
    s.check("pair_vs_oracle_n" + std::to_string(n), worst <= kTol,
            std::to_string(nonempty) + " nonempty pairs, max scaled error " + format_number(worst));
  }
  if (opt.n_max >= 7) {
    const auto reps = standard_representatives(7);
    const Kinematics k = sample_generic(7, opt.seed + 507);
    std::mt19937_64 rng(opt.seed + 77);
    double worst = 0.0;
    int found = 0;
    while (found < opt.random_pairs) {
      const auto& a = reps[rng() % reps.size()];
      const auto& b = reps[rng() % reps.size()];
      const PairValue v = pair(a, b, k);
      if (v.empty) continue;
      ++found;
      inspect(a, b, v, k);
      worst = std::max(worst, scaled_error(v.value, oracle_pair(a, b, k)));
    }
    s.check("pair_vs_oracle_n7_random", worst <= kTol,
            std::to_string(found) + " nonempty pairs, max scaled error " + format_number(worst));
  }
  s.check("value_on_real_ray", worst_real <= 1e-10, "max relative imaginary part " + format_number(worst_real));
  s.check("factored_form_recomposes", worst_recompose <= 1e-10, "max relative error " + format_number(worst_recompose));
  s.check("diagonal_reduction_exact", reduction);
  if (symmetric_total)
    s.info("symmetry_m_alpha_beta", std::to_string(symmetric) + "/" + std::to_string(symmetric_total) +
                                        " nonempty unordered pairs satisfy m(a|b) = m(b|a)");

  {
    std::mt19937_64 rng(opt.seed + 99);
    double worst = 0.0;
    int count = 0;
    for (int n = 4; n <= std::min(6, opt.n_max); ++n) {
      const Kinematics k = sample_generic(n, opt.seed + 900 + static_cast<std::uint64_t>(n));
      for (int t = 0; t < 20; ++t, ++count) {
        const CircularOrder a(random_permutation(n, rng)), b(random_permutation(n, rng));
        const auto sigma = random_permutation(n, rng);
        const Complex lhs = pair(relabel(a, sigma), relabel(b, sigma), k.relabeled(sigma)).value;
        worst = std::max(worst, scaled_error(lhs, pair(a, b, k).value));
      }
    }
    s.check("relabeling_equivariance", worst <= 1e-12, cases(count) + ", max scaled error " + format_number(worst));
  }

  {
    bool ok = true;
    double ratio_worst = 0.0;
    for (int n = 4; n <= std::min(6, opt.n_max); ++n) {
      const auto reps = standard_representatives(n);
      for (int t = 0; t < 10; ++t) {
        const Kinematics k = sample_generic(n, opt.seed + 300 + 50 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(t));
        const CircularOrder a = CircularOrder::identity(n);
        const CircularOrder b = reps[static_cast<std::size_t>(t) % reps.size()];
        for (const auto& beta : {a, b}) {
          if (!intersection_face(a, beta)) continue;
          const double ft = ft_inverse_kernel(a, beta, k);
          double err[2];
          const double eps[2] = {1e-3, 1e-4};
          for (int e = 0; e < 2; ++e) {
            const PairValue v = pair(a, beta, k.scaled(eps[e]), 0.0);
            const double m = (v.value / half_i_power(n - 3)).real();
            err[e] = std::abs(std::pow(std::numbers::pi * eps[e], n - 3) * m - ft);
          }
          ok = ok && err[1] <= 0.15 * err[0];
          ratio_worst = std::max(ratio_worst, err[1] / err[0]);
        }
      }
    }
    s.check("field_theory_limit", ok, "worst error ratio eps=1e-4 vs 1e-3: " + format_number(ratio_worst));
  }

  {
    const Kinematics k = sample_generic(6, opt.seed);
    const auto v = pair(CircularOrder::parse("123456"), CircularOrder::parse("134256"), k);
    auto S = [&](std::initializer_list<Label> l) { return s_subset(k, LabelSet(l)); };
    const double expect_real = -csc_pi(S({3, 4})) * csc_pi(S({2, 3, 4})) * (cot_pi(S({2, 3, 4, 5})) + cot_pi(S({1, 2, 3, 4})));
    const Complex expect = half_i_power(3) * expect_real;
    s.check("worked_example", std::abs(v.value - expect) <= 1e-10 * std::abs(expect),
            "value " + format_number(v.value.real()) + "+" + format_number(v.value.imag()) + "i");
    const auto e = pair(CircularOrder::parse("123456"), CircularOrder::parse("146325"), k);
    s.check("empty_example", e.empty && e.value == Complex{});
  }

  {
    const Kinematics k4 = sample_generic(4, opt.seed);
    const auto m4 = intersection_matrix(4, k4, Basis::bounded_chambers);
    const Complex d4 = Complex(0.0, 0.5) * (cot_pi(k4(1, 2)) + cot_pi(k4(2, 3)));
    bool ok = m4.labels.size() == 1 && scaled_error(m4.entries[0][0].value, d4) <= 1e-12;
    const Kinematics k5 = sample_generic(5, opt.seed);
    const auto b5 = intersection_matrix(5, k5, Basis::bounded_chambers);
    ok = ok && b5.labels.size() == 2;
    for (std::size_t i = 0; i < b5.labels.size(); ++i) ok = ok && b5.entries[i][i].value == diagonal(b5.labels[i], k5).value;
    const auto a5 = intersection_matrix(5, k5, Basis::all_classes);
    ok = ok && a5.labels.size() == 12;
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j)
        ok = ok && ((a5.entries[i][j].value == Complex{}) == !intersection_face(a5.labels[i], a5.labels[j]).has_value());
    s.check("matrix_shapes", ok, "n=4 bounded 1x1, n=5 bounded 2x2, n=5 all 12x12");
  }
  return s.ok();
}

bool verify_identity_sweep(long pmax, const CheckSink& sink) {
  bool ok = true;
  for (long p = 0; p <= pmax; ++p) {
    const Rational lhs = wz_lhs(p);
    const bool pass = lhs == wz_rhs(p) && denominator(lhs) == 1;
    ok = ok && pass;
    std::ostringstream detail;
    detail << "lhs = " << lhs;
    sink(CheckResult{"wz.identity_p" + std::to_string(p), pass, pass ? "" : detail.str(), false});
  }
  return ok;
}

bool verify_certificate_sweep(long pmax, const CheckSink& sink) {
  bool ok = true;
  for (long p = 0; p <= pmax; ++p) {
    long bad = -1;
    for (long k = 0; k <= p + 2 && bad < 0; ++k)
      if (!certificate_check(p, k)) bad = k;
    ok = ok && bad < 0;
    sink(CheckResult{"wz.certificate_p" + std::to_string(p), bad < 0, bad < 0 ? "" : "fails at k = " + std::to_string(bad), false});
  }
  return ok;
}

bool verify_recurrence_sweep(long pmax, const CheckSink& sink) {
  bool ok = true;
  std::vector<Rational> f;
  for (long p = 0; p <= pmax + 2; ++p) f.push_back(wz_lhs(p));
  for (long p = 0; p <= pmax; ++p) {
    const auto i = static_cast<std::size_t>(p);
    const bool pass = (p + 4) * f[i + 2] + 4 * (p + 1) * f[i] == 0;
    ok = ok && pass;
    sink(CheckResult{"wz.recurrence_p" + std::to_string(p), pass, "", false});
  }
  return ok;
}

bool verify_wz(const VerifyOptions& opt, const CheckSink& sink) {
  Suite s("wz", sink);
  // per-p sweeps are folded into one line each; first failure is reported
  auto folded = [&](const char* name, auto sweep, long pmax) {
    std::string first;
    const bool ok = sweep(pmax, [&](const CheckResult& r) {
      if (!r.passed && first.empty()) first = r.name + (r.detail.empty() ? "" : " (" + r.detail + ")");
    });
    s.check(name, ok, ok ? "0 <= p <= " + std::to_string(pmax) : "first counterexample " + first);
  };
  folded("identity", verify_identity_sweep, opt.wz_pmax);
  folded("certificate", verify_certificate_sweep, opt.certificate_pmax);
  folded("recurrence", verify_recurrence_sweep, opt.wz_pmax);

  bool direct = true;
  for (long p = 0; p <= 60; ++p) {
    Rational sum = 0;
    for (long k = 0; k <= p; ++k) sum += wz_summand(p, k);
    direct = direct && sum == wz_lhs(p);
  }
  s.check("lhs_direct_sum", direct, "0 <= p <= 60");

  bool outside = true;
  for (long p = 0; p <= 30; ++p)
    for (long k = p + 3; k <= p + 6; ++k)
      outside = outside && wz_summand(p + 2, k) == 0 && wz_summand(p, k) == 0 && wz_certificate(p, k + 1) == 0 &&
                wz_certificate(p, k) == 0;
  s.check("certificate_outside_support", outside, "k > p+2");

  s.check("catalan_values", catalan(0) == 1 && catalan(1) == 1 && catalan(4) == 14 && catalan(10) == 16796);

  bool cf = true;
  std::string values;
  for (int n = 3; n <= 9; ++n) {
    const BigInt e = cf_face_sum(n);
    cf = cf && e == cf_face_sum_closed(n) && Rational(e) == wz_rhs(n - 3);
    values += (n > 3 ? "," : "") + e.str();
  }
  s.check("cf_face_sum", cf, "n = 3..9: " + values);
  return s.ok();
}

bool verify_all(const VerifyOptions& opt, const CheckSink& sink) {
  bool ok = true;
  ok = verify_perms(opt, sink) && ok;
  ok = verify_associahedron(opt, sink) && ok;
  ok = verify_moduli(opt, sink) && ok;
  ok = verify_kinematics(opt, sink) && ok;
  ok = verify_intersect(opt, sink) && ok;
  ok = verify_wz(opt, sink) && ok;
  return ok;
}

}  // namespace m0n
