#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace m0n {

/// One line of a verification log. `info` lines report a measured fact and
/// never fail the run.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  bool info = false;
};

using CheckSink = std::function<void(const CheckResult&)>;

struct VerifyOptions {
  /// Caps n for the cell-intersection and evaluation suites (moduli,
  /// intersect). The other suites run at their fixed scales.
  int n_max = 7;
  int seeds = 25;
  int random_pairs = 200;
  long wz_pmax = 500;
  long certificate_pmax = 100;
  std::uint64_t seed = 1;
};

/// Each returns true iff every non-info check passed.
bool verify_perms(const VerifyOptions& opt, const CheckSink& sink);
bool verify_associahedron(const VerifyOptions& opt, const CheckSink& sink);
bool verify_moduli(const VerifyOptions& opt, const CheckSink& sink);
bool verify_kinematics(const VerifyOptions& opt, const CheckSink& sink);
bool verify_intersect(const VerifyOptions& opt, const CheckSink& sink);
bool verify_wz(const VerifyOptions& opt, const CheckSink& sink);
bool verify_all(const VerifyOptions& opt, const CheckSink& sink);

/// One line per p: wz_lhs(p) == wz_rhs(p) and wz_lhs(p) is an integer.
bool verify_identity_sweep(long pmax, const CheckSink& sink);
/// One line per p: certificate_check(p, k) for 0 <= k <= p+2.
bool verify_certificate_sweep(long pmax, const CheckSink& sink);
/// One line per p: (p+4) f(p+2) + 4(p+1) f(p) == 0.
bool verify_recurrence_sweep(long pmax, const CheckSink& sink);

/// "PASS name: detail", "FAIL name: detail" or "INFO name: detail".
std::string format_check(const CheckResult& r);

}  // namespace m0n
