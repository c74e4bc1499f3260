#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "m0n/intersect.hpp"
#include "m0n/verify.hpp"

namespace m0n::cli {

enum class Command { pair, matrix, enumerate, intersect, verify };
enum class Output { json, csv, text };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNotGeneric = 3;
inline constexpr int kInternal = 4;

struct RunConfig {
  Command command = Command::verify;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> kin_path;
  std::optional<Output> output;  // unset: the command's default

  // pair, intersect
  std::string alpha;
  std::string beta;
  // pair, matrix
  bool factored = false;
  // matrix
  Basis basis = Basis::bounded_chambers;
  // enumerate
  bool admissible = false;
  std::optional<std::string> word;
  // verify
  std::string suite = "all";
  std::optional<long> pmax;
  VerifyOptions verify;

  int verbosity = 1;  // 0 quiet, 1 errors, 2 progress; stderr only
};

/// Executes one command. Returns the exit code; never throws.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs. Parse failures
/// print usage to `err` and return kUsage.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace m0n::cli
