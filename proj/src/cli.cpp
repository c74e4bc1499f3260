#include "m0n/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "m0n/associahedron.hpp"
#include "m0n/errors.hpp"
#include "m0n/format.hpp"
#include "m0n/kinematics.hpp"
#include "m0n/moduli.hpp"
#include "m0n/serialize.hpp"
#include "m0n/wz.hpp"

namespace m0n::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string subset_name(const std::vector<int>& subset) {
  std::string s;
  for (int l : subset) s += (s.empty() ? "" : ",") + std::to_string(l);
  return "{" + s + "}";
}

Kinematics load_kinematics(const RunConfig& c, int n) {
  if (c.seed.has_value() == c.kin_path.has_value()) throw UsageError("exactly one of --seed or --kin is required");
  if (c.seed) return sample(n, *c.seed);
  std::ifstream in(*c.kin_path);
  if (!in) throw UsageError("cannot read " + *c.kin_path);
  std::stringstream text;
  text << in.rdbuf();
  Kinematics k = kinematics_from_json(text.str());
  if (k.n() != n) throw UsageError("kinematics has n = " + std::to_string(k.n()) + ", expected " + std::to_string(n));
  return k;
}

// Rejects the whole table up front so the failing subset does not depend on
// evaluation order.
void require_generic(const Kinematics& k) {
  const auto bad = genericity_check(k);
  if (!bad.empty()) {
    const auto labels = bad.front().labels();
    throw GenericityError(std::vector<int>(labels.begin(), labels.end()), s_subset(k, bad.front()));
  }
}

int run_pair(const RunConfig& c, std::ostream& out) {
  const CircularOrder alpha = CircularOrder::parse(c.alpha), beta = CircularOrder::parse(c.beta);
  if (alpha.size() != beta.size()) throw UsageError("--alpha and --beta have different lengths");
  const Kinematics k = load_kinematics(c, alpha.size());
  require_generic(k);
  out << dump(pair_to_json(alpha, beta, pair(alpha, beta, k), k, true)) << '\n';
  return kOk;
}

int run_matrix(const RunConfig& c, std::ostream& out) {
  if (c.n < 3) throw UsageError("--n must be at least 3");
  const Kinematics k = load_kinematics(c, c.n);
  require_generic(k);
  const IntersectionMatrix m = intersection_matrix(c.n, k, c.basis);
  const Output o = c.output.value_or(Output::json);
  if (o == Output::csv)
    out << matrix_to_csv(m);
  else if (o == Output::json)
    out << dump(matrix_to_json(m, k, c.factored)) << '\n';
  else
    throw UsageError("matrix supports --format json or csv");
  return kOk;
}

int run_enumerate(const RunConfig& c, std::ostream& out) {
  const CircularOrder word = c.word ? CircularOrder::parse(*c.word) : CircularOrder::identity(c.n);
  if (c.n && word.size() != c.n) throw UsageError("--word length differs from --n");
  if (word.back() != word.size()) throw UsageError("--word must end in its largest label");
  const int n = word.size();
  const Output o = c.output.value_or(Output::json);
  if (o == Output::csv) throw UsageError("enumerate supports --format json or text");

  Json faces = Json::array();
  std::string text;
  long count = 0;
  for_each_face(word, 0, n - 3, [&](const Face& f) {
    const bool adm = is_admissible(f);
    if (c.admissible && !adm) return;
    ++count;
    const auto val = internal_valencies(f);
    BigInt weight = adm ? 1 : 0;
    if (adm)
      for (int v : val) weight *= catalan((v - 3) / 2);
    if (o == Output::text) {
      text += face_notation(f) + " codim " + std::to_string(f.codim()) + " weight " + weight.str() + '\n';
      return;
    }
    Json brackets = Json::array();
    for (const Bracket& b : f.brackets()) brackets.push_back(to_json(b.labels()));
    faces.push_back(Json{{"face", face_notation(f)},
                         {"brackets", std::move(brackets)},
                         {"codim", f.codim()},
                         {"valencies", val},
                         {"admissible", adm},
                         {"weight", weight.convert_to<long long>()}});
  });
  if (o == Output::text)
    out << text;
  else
    out << dump(Json{{"n", n}, {"word", word.to_string()}, {"admissible_only", c.admissible}, {"count", count},
                     {"faces", std::move(faces)}})
        << '\n';
  return kOk;
}

int run_intersect(const RunConfig& c, std::ostream& out) {
  const CircularOrder alpha = CircularOrder::parse(c.alpha), beta = CircularOrder::parse(c.beta);
  if (alpha.size() != beta.size()) throw UsageError("--alpha and --beta have different lengths");
  const auto f = intersection_face(alpha, beta);
  const Output o = c.output.value_or(Output::text);
  if (o == Output::json)
    out << dump(intersection_to_json(alpha, beta, f)) << '\n';
  else if (o == Output::text)
    out << (f ? face_notation(*f) : std::string("empty")) << '\n';
  else
    throw UsageError("intersect supports --format text or json");
  return kOk;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  long total = 0, failed = 0;
  const CheckSink sink = [&](const CheckResult& r) {
    if (!r.info) {
      ++total;
      failed += !r.passed;
    }
    out << format_check(r) << '\n';
  };
  VerifyOptions opt = c.verify;
  auto progress = [&](const char* suite) {
    if (c.verbosity >= 2) err << "verify: " << suite << '\n';
  };
  bool ok = true;
  const std::string& s = c.suite;
  if (s == "wz" && c.pmax) opt.wz_pmax = *c.pmax;
  if (s == "all" && c.pmax) opt.wz_pmax = *c.pmax;

  if (s == "all") {
    for (auto [name, fn] : {std::pair{"perms", &verify_perms}, {"associahedron", &verify_associahedron},
                            {"moduli", &verify_moduli}, {"kinematics", &verify_kinematics},
                            {"intersect", &verify_intersect}, {"wz", &verify_wz}}) {
      progress(name);
      ok = fn(opt, sink) && ok;
    }
  } else if (s == "perms") {
    ok = verify_perms(opt, sink);
  } else if (s == "associahedron") {
    ok = verify_associahedron(opt, sink);
  } else if (s == "moduli") {
    ok = verify_moduli(opt, sink);
  } else if (s == "kinematics") {
    ok = verify_kinematics(opt, sink);
  } else if (s == "intersect") {
    ok = verify_intersect(opt, sink);
  } else if (s == "wz") {
    ok = verify_identity_sweep(opt.wz_pmax, sink);
  } else if (s == "certificate") {
    ok = verify_certificate_sweep(c.pmax.value_or(opt.certificate_pmax), sink);
  } else if (s == "recurrence") {
    ok = verify_recurrence_sweep(c.pmax.value_or(opt.wz_pmax), sink);
  } else {
    throw UsageError("unknown verify suite '" + s + "'");
  }
  out << (ok ? "OK" : "FAILED") << ' ' << total - failed << '/' << total << " checks passed\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::pair: return run_pair(config, out);
      case Command::matrix: return run_matrix(config, out);
      case Command::enumerate: return run_enumerate(config, out);
      case Command::intersect: return run_intersect(config, out);
      case Command::verify: return run_verify(config, out, err);
    }
    return kInternal;
  } catch (const GenericityError& e) {
    err << "error: kinematics not generic: s_" << subset_name(e.subset()) << " = " << format_number(e.value())
        << " is within the margin of an integer\n";
    return kNotGeneric;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (const char* v = std::getenv("M0N_VERBOSITY")) c.verbosity = std::atoi(v);

  CLI::App app{"Intersection numbers on the real moduli space M_{0,n}", "m0n"};
  app.require_subcommand(1);
  std::string format;
  const std::map<std::string, Output> formats{{"json", Output::json}, {"csv", Output::csv}, {"text", Output::text}};

  auto kinematics_flags = [&](CLI::App* sub) {
    auto* seed = sub->add_option("--seed", c.seed, "Sample kinematics from this seed");
    auto* kin = sub->add_option("--kin", c.kin_path, "Read kinematics from a JSON file");
    seed->excludes(kin);
  };

  auto* pair = app.add_subcommand("pair", "Intersection number of two cells, with its factored form");
  pair->add_option("--alpha", c.alpha, "First circular order, e.g. 123456")->required();
  pair->add_option("--beta", c.beta, "Second circular order")->required();
  pair->add_flag("--factored", c.factored, "Accepted for symmetry with matrix; pair always prints the factored form");
  kinematics_flags(pair);

  auto* matrix = app.add_subcommand("matrix", "Intersection matrix over a basis of cells");
  matrix->add_option("--n", c.n, "Number of marked points")->required();
  std::string basis = "bounded";
  matrix->add_option("--basis", basis, "bounded or all")->check(CLI::IsMember({"bounded", "all"}));
  matrix->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  matrix->add_flag("--factored", c.factored, "Include the factored form of each entry");
  kinematics_flags(matrix);

  auto* enumerate = app.add_subcommand("enumerate", "Faces of the associahedron of a word");
  enumerate->add_option("--n", c.n, "Number of marked points");
  enumerate->add_option("--word", c.word, "Circular order ending in n (default 12...n)");
  enumerate->add_flag("--admissible", c.admissible, "Only faces whose internal vertices all have odd valency");
  enumerate->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* intersect = app.add_subcommand("intersect", "Common face of two cells");
  intersect->add_option("--alpha", c.alpha, "First circular order")->required();
  intersect->add_option("--beta", c.beta, "Second circular order")->required();
  intersect->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run property and identity checks");
  verify->add_option("suite", c.suite, "all, perms, associahedron, moduli, kinematics, intersect, wz, certificate, recurrence");
  verify->add_option("--pmax", c.pmax, "Largest p for the exact identity sweeps");
  verify->add_option("--n-max", c.verify.n_max, "Largest n for the cell and evaluation checks");
  verify->add_option("--seeds", c.verify.seeds, "Kinematic seeds per n");
  verify->add_option("--seed", c.verify.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*pair) c.command = Command::pair;
  if (*matrix) c.command = Command::matrix;
  if (*enumerate) c.command = Command::enumerate;
  if (*intersect) c.command = Command::intersect;
  if (*verify) c.command = Command::verify;
  c.basis = basis == "all" ? Basis::all_classes : Basis::bounded_chambers;
  if (!format.empty()) c.output = formats.at(format);
  if (c.command == Command::enumerate && c.n == 0 && !c.word) {
    err << "error: enumerate needs --n or --word\n";
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace m0n::cli
