#pragma once

// Command-line front end. Every run writes one JSON document or one CSV table,
// both carrying the resolved configuration and the library version.
// Exit codes: 0 success, 1 check failed, 2 usage or configuration error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sun/bargmann.hpp"
#include "sun/coherent.hpp"
#include "sun/intelligent.hpp"
#include "sun/io.hpp"
#include "sun/rep_core.hpp"

namespace sun::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

struct RunConfig {
  std::string command;
  int N = 2;
  int j1 = 1;
  std::optional<double> tol;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  int pair = 0;  // 0: command default
  std::string alpha;
  std::string zeta;
  std::string z;
  std::string method = "quadrature";
  std::size_t budget = 0;  // 0: method default
  std::string branch = "matrix";
  std::vector<std::string> coef;
  int js = -1;
  int js1 = -1;
  std::size_t max_dim = kDefaultMaxDim;
};

namespace detail {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline io::json meta_json(const RunConfig& c) {
  io::json cfg = {{"command", c.command}, {"n", c.N}, {"j1", c.j1}, {"tol", io::optional_json(c.tol)},
                  {"format", c.format},   {"seed", c.seed}};
  if (c.pair) cfg["pair"] = c.pair;
  if (!c.alpha.empty()) cfg["alpha"] = c.alpha;
  if (!c.zeta.empty()) cfg["zeta"] = c.zeta;
  if (!c.z.empty()) cfg["z"] = c.z;
  if (c.command == "identity-check") cfg["method"] = c.method, cfg["budget"] = c.budget;
  if (c.command == "intelligent" || c.command == "sweep") cfg["branch"] = c.branch;
  if (!c.coef.empty()) cfg["coef"] = c.coef;
  if (c.command == "moment-check") cfg["js"] = c.js, cfg["js1"] = c.js1;
  cfg["max_dim"] = c.max_dim;
  return {{"version", io::kVersion}, {"config", cfg}};
}

inline RepPtr make_rep(const RunConfig& c) { return enumerate_basis(c.N, c.j1, c.max_dim); }

inline Branch parse_branch(const std::string& s) {
  if (s == "matrix") return Branch::matrix;
  if (s == "recursion") return Branch::recursion;
  throw ConfigError("unknown branch '" + s + "'");
}

inline std::vector<IntelligentSolution> solve(const RepPtr& rep, int i, Complex alpha, Branch b) {
  return b == Branch::matrix ? intelligent_states_matrix(rep, i, alpha) : intelligent_states_recursion(rep, i, alpha);
}

inline bool solution_ok(const IntelligentSolution& s, double tol) {
  return s.residual <= kEigenResidualTolerance && std::abs(s.report.sr_residual) <= tol;
}

/// Result of a command: a JSON document, or CSV rows with a header.
struct Output {
  io::json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool passed = true;
};

inline void require_format(const RunConfig& c, bool csv_allowed) {
  if (c.format != "json" && c.format != "csv") throw ConfigError("unknown format '" + c.format + "'");
  if (c.format == "csv" && !csv_allowed) throw ConfigError(c.command + " has no CSV output");
}

inline Output cmd_check_algebra(const RunConfig& c) {
  require_format(c, false);
  const auto rep = make_rep(c);
  const auto r = verify_algebra(rep);
  const double tol = c.tol.value_or(1e-12);
  Output o;
  o.passed = r.max_residual() <= tol;
  o.doc = {{"N", r.N}, {"j1", r.j1}, {"dim", rep->dim()}, {"residuals", r.residuals},
           {"max_residual", r.max_residual()}, {"tol", tol}, {"passed", o.passed}};
  return o;
}

inline Output cmd_coherent(const RunConfig& c) {
  require_format(c, false);
  if (c.zeta.empty()) throw ConfigError("--zeta is required");
  const auto rep = make_rep(c);
  const auto v = coherent_state(rep, ZetaPoint{io::parse_complex_list(c.zeta)});
  Output o;
  o.doc = {{"N", c.N}, {"j1", c.j1}, {"norm", v.norm()}, {"state", io::state_json(v)}};
  return o;
}

inline Output cmd_displaced(const RunConfig& c) {
  require_format(c, false);
  if (c.z.empty()) throw ConfigError("--z is required");
  const auto rep = make_rep(c);
  const ZPoint zp{io::parse_complex_list(c.z)};
  const auto v = displaced_state(rep, zp);
  Output o;
  o.doc = {{"N", c.N}, {"j1", c.j1}, {"norm", v.norm()}, {"state", io::state_json(v)}};
  io::json mapped = io::json::array();
  const auto zeta = z_to_zeta(zp);
  for (const auto& x : zeta.zeta) mapped.push_back(io::complex_json(x));
  o.doc["zeta_from_map"] = mapped;
  o.doc["overlap_with_mapped"] = std::abs(overlap(v, coherent_state(rep, zeta)));
  io::json exact = io::json::array();
  const auto zeta_exact = displacement_to_zeta(zp);
  for (const auto& x : zeta_exact.zeta) exact.push_back(io::complex_json(x));
  o.doc["zeta_exact"] = exact;
  o.doc["overlap_with_exact"] = std::abs(overlap(v, coherent_state(rep, zeta_exact)));
  return o;
}

inline Output cmd_identity_check(RunConfig c) {
  require_format(c, false);
  IdentityMethod method;
  if (c.method == "quadrature") method = IdentityMethod::quadrature;
  else if (c.method == "monte-carlo") method = IdentityMethod::monte_carlo;
  else throw ConfigError("unknown method '" + c.method + "'");
  const auto rep = make_rep(c);
  const std::size_t budget = c.budget ? c.budget : (method == IdentityMethod::quadrature ? 16 : 100000);
  const double tol = c.tol.value_or(method == IdentityMethod::quadrature ? 1e-6 : 5e-3);
  const auto r = identity_check(rep, method, budget, c.seed);
  Output o;
  o.passed = r.deviation <= tol;
  o.doc = io::resolution_json(r);
  o.doc["tol"] = tol;
  o.doc["passed"] = o.passed;
  return o;
}

inline Output cmd_bargmann_check(const RunConfig& c) {
  require_format(c, false);
  const auto rep = make_rep(c);
  const auto r = exactness_check(rep);
  const double tol = c.tol.value_or(1e-12);
  Output o;
  o.passed = r.passed(tol);
  o.doc = io::exactness_json(r);
  o.doc["tol"] = tol;
  o.doc["passed"] = o.passed;
  return o;
}

inline Output cmd_intelligent(const RunConfig& c) {
  require_format(c, true);
  if (c.alpha.empty()) throw ConfigError("--alpha is required");
  const Complex alpha = io::parse_complex(c.alpha);
  if (alpha == Complex(0.0)) throw ConfigError("alpha must be nonzero");
  const int i = c.pair ? c.pair : 1;
  const auto rep = make_rep(c);
  const auto sols = solve(rep, i, alpha, parse_branch(c.branch));
  const double tol = c.tol.value_or(kSrTolerance);
  Output o;
  o.header = io::sweep_columns();
  io::json list = io::json::array();
  for (std::size_t k = 0; k < sols.size(); ++k) {
    o.passed = o.passed && solution_ok(sols[k], tol);
    list.push_back(io::solution_json(sols[k]));
    o.rows.push_back(io::sweep_row(c.N, c.j1, i, k, sols[k]));
  }
  o.doc = {{"N", c.N}, {"j1", c.j1}, {"i", i}, {"alpha", io::complex_json(alpha)}, {"tol", tol},
           {"passed", o.passed}, {"solutions", list}};
  return o;
}

inline Output cmd_sweep(const RunConfig& c) {
  require_format(c, true);
  const auto rep = make_rep(c);
  const Branch branch = parse_branch(c.branch);
  if (c.pair < 0 || c.pair > c.N - 1) throw ConfigError("pair index outside 1..N-1");
  const double tol = c.tol.value_or(kSrTolerance);
  Output o;
  o.header = io::sweep_columns();
  io::json points = io::json::array();
  const int first = c.pair ? c.pair : 1;
  const int last = c.pair ? c.pair : c.N - 1;
  for (int i = first; i <= last; ++i) {
    for (const auto& alpha : alpha_grid()) {
      const auto sols = solve(rep, i, alpha, branch);
      io::json entries = io::json::array();
      for (std::size_t k = 0; k < sols.size(); ++k) {
        o.passed = o.passed && solution_ok(sols[k], tol);
        o.rows.push_back(io::sweep_row(c.N, c.j1, i, k, sols[k]));
        io::json e = io::solution_json(sols[k]);
        e.erase("state");
        entries.push_back(std::move(e));
      }
      points.push_back({{"i", i}, {"alpha", io::complex_json(alpha)}, {"solutions", entries}});
    }
  }
  o.doc = {{"N", c.N}, {"j1", c.j1}, {"tol", tol}, {"passed", o.passed}, {"points", points}};
  return o;
}

inline Output cmd_algebra_eigenstates(const RunConfig& c) {
  require_format(c, false);
  const auto rep = make_rep(c);
  std::vector<AlgebraCoefficients> coeffs(static_cast<std::size_t>(c.N - 1));
  for (const auto& item : c.coef) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--coef expects name=value, got '" + item + "'");
    const auto id = GeneratorId::parse(item.substr(0, eq));
    if (id.index < 1 || id.index > c.N - 1) throw ConfigError("coefficient index outside 1..N-1: " + item);
    const Complex value = io::parse_complex(item.substr(eq + 1));
    auto& slot = coeffs[static_cast<std::size_t>(id.index - 1)];
    switch (id.kind) {
      case GeneratorId::Kind::e: slot.plus = value; break;
      case GeneratorId::Kind::f: slot.minus = value; break;
      case GeneratorId::Kind::h: slot.zero = value; break;
      default: throw ConfigError("only e_i, f_i, h_i coefficients are accepted: " + item);
    }
  }
  const auto pairs = algebra_eigenstates(rep, coeffs);
  Output o;
  io::json list = io::json::array();
  for (const auto& e : pairs) {
    o.passed = o.passed && e.residual <= kEigenResidualTolerance;
    list.push_back(io::eigenpair_json(e));
  }
  o.doc = {{"N", c.N}, {"j1", c.j1}, {"passed", o.passed}, {"eigenpairs", list}};
  return o;
}

inline Output cmd_moment_check(const RunConfig& c) {
  require_format(c, false);
  if (c.js < 0 || c.js1 < 0) throw ConfigError("--js and --js1 are required");
  const auto r = moment_check(c.js, c.js1);
  const double tol = c.tol.value_or(1e-10);
  Output o;
  o.passed = r.residual <= tol;
  o.doc = {{"js", c.js}, {"js1", c.js1}, {"integral", r.integral}, {"expected", r.expected},
           {"error_estimate", r.error_estimate}, {"residual", r.residual}, {"tol", tol}, {"passed", o.passed}};
  return o;
}

inline void emit(const RunConfig& c, const Output& o, std::ostream& os) {
  const io::json meta = meta_json(c);
  if (c.format == "csv") {
    io::json flat = {{"version", meta["version"]}};
    for (const auto& [k, v] : meta["config"].items()) flat[k] = v;
    io::CsvWriter w(os, flat, o.header);
    for (const auto& row : o.rows) w.row(row);
    return;
  }
  io::json doc = {{"meta", meta}};
  for (const auto& [k, v] : o.doc.items()) doc[k] = v;
  os << doc.dump(2) << '\n';
}

inline std::size_t max_dim_from_env() {
  const char* raw = std::getenv("SUN_MAX_DIM");
  if (!raw || !*raw) return kDefaultMaxDim;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos) throw ConfigError("SUN_MAX_DIM must be a positive integer");
  const auto v = std::stoull(s);
  if (v == 0) throw ConfigError("SUN_MAX_DIM must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Runs the CLI on args (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"su(N) coherent and intelligent states", "sunstates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::kVersion);

  std::string tol_text;
  app.add_option("--n", c.N, "number of modes N >= 2");
  app.add_option("--j1", c.j1, "total quanta j1 >= 1");
  app.add_option("--tol", tol_text, "tolerance override");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--format", c.format, "json or csv");
  app.add_option("--seed", c.seed, "random seed");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  sub("check-algebra", "verify the defining relations on the matrices");
  sub("coherent", "coherent state from chain labels")->add_option("--zeta", c.zeta, "comma-separated complex labels");
  sub("displaced", "coherent state from the displacement operator")->add_option("--z", c.z, "comma-separated complex parameters");
  auto* idc = sub("identity-check", "resolution of identity");
  idc->add_option("--method", c.method, "quadrature or monte-carlo");
  idc->add_option("--budget", c.budget, "quadrature order or sample count");
  sub("bargmann-check", "matrix vs differential-operator exactness");
  auto* intel = sub("intelligent", "intelligent states for one alpha");
  intel->add_option("--pair", c.pair, "pair index i");
  intel->add_option("--alpha", c.alpha, "complex alpha");
  intel->add_option("--branch", c.branch, "matrix or recursion");
  auto* sweep = sub("sweep", "intelligent states over the alpha grid");
  sweep->add_option("--pair", c.pair, "pair index i (default: all)");
  sweep->add_option("--branch", c.branch, "matrix or recursion");
  sub("algebra-eigenstates", "eigenstates of a combination of e_i, f_i, h_i")
      ->add_option("--coef", c.coef, "coefficient like e1=1+0.5i (repeatable)");
  auto* mc = sub("moment-check", "moment condition of the radial density");
  mc->add_option("--js", c.js, "upper index");
  mc->add_option("--js1", c.js1, "lower index");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << io::kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    if (!tol_text.empty()) {
      c.tol = std::stod(tol_text);
      if (!(*c.tol > 0.0)) throw detail::ConfigError("--tol must be positive");
    }
    if (c.format.empty()) c.format = c.command == "sweep" ? "csv" : "json";
    c.max_dim = detail::max_dim_from_env();

    detail::Output o;
    if (c.command == "check-algebra") o = detail::cmd_check_algebra(c);
    else if (c.command == "coherent") o = detail::cmd_coherent(c);
    else if (c.command == "displaced") o = detail::cmd_displaced(c);
    else if (c.command == "identity-check") o = detail::cmd_identity_check(c);
    else if (c.command == "bargmann-check") o = detail::cmd_bargmann_check(c);
    else if (c.command == "intelligent") o = detail::cmd_intelligent(c);
    else if (c.command == "sweep") o = detail::cmd_sweep(c);
    else if (c.command == "algebra-eigenstates") o = detail::cmd_algebra_eigenstates(c);
    else o = detail::cmd_moment_check(c);

    if (c.out.empty()) {
      detail::emit(c, o, out);
    } else {
      std::ofstream file(c.out, std::ios::binary);
      if (!file) throw detail::ConfigError("cannot open output file '" + c.out + "'");
      detail::emit(c, o, file);
    }
    if (!o.passed) err << c.command << ": check failed\n";
    return o.passed ? kOk : kCheckFailed;
  } catch (const detail::ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {  // DomainError, bad numeric text
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::length_error& e) {  // ResourceError
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {  // UnsupportedRegime
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {  // NumericError and anything unexpected
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace sun::cli
