// Acceptance run: one pass/fail line per criterion, nonzero exit if any fails.
// Usage: acceptance <path-to-sunstates> [scratch-dir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sun/bargmann.hpp"
#include "sun/coherent.hpp"
#include "sun/hypergeometric.hpp"
#include "sun/intelligent.hpp"

using namespace sun;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome algebra_suite() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int N = 2; N <= 5; ++N)
    for (int j1 = 1; j1 <= 8; ++j1) worst = std::max(worst, verify_algebra(enumerate_basis(N, j1)).max_residual());
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && t <= 30.0, "max residual " + sci(worst) + ", " + sci(t) + " s"};
}

Outcome coherent_suite() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0), unit(0.0, 1.0);
  double norm_err = 0.0;
  bool origin_exact = true;
  for (int N = 2; N <= 4; ++N)
    for (int j1 = 1; j1 <= 8; ++j1) {
      auto rep = enumerate_basis(N, j1);
      for (int t = 0; t < 200; ++t) {
        std::vector<Complex> zeta(static_cast<std::size_t>(N - 1));
        for (auto& z : zeta) z = Complex(3.0 * u(rng), 3.0 * u(rng));
        norm_err = std::max(norm_err, std::abs(coherent_state(rep, {zeta}).norm() - 1.0));
      }
      const auto top = coherent_state(rep, {std::vector<Complex>(static_cast<std::size_t>(N - 1), 0.0)});
      origin_exact = origin_exact && top.amp == highest_weight(rep).amp;
    }

  auto random_z = [&](std::size_t n) {
    std::vector<Complex> z(n);
    for (auto& x : z) x = std::polar(0.95 * std::numbers::pi / 2 * unit(rng) / std::sqrt(double(n)), 2 * std::numbers::pi * unit(rng));
    return z;
  };
  double su2_deficit = 0.0;
  for (int j1 = 1; j1 <= 8; ++j1) {
    auto rep = enumerate_basis(2, j1);
    for (int t = 0; t < 50; ++t) {
      const ZPoint zp{random_z(1)};
      su2_deficit = std::max(su2_deficit, 1.0 - std::abs(overlap(displaced_state(rep, zp), coherent_state(rep, z_to_zeta(zp)))));
    }
  }
  std::vector<double> n3;
  for (int j1 = 1; j1 <= 8; ++j1) {
    auto rep = enumerate_basis(3, j1);
    for (int t = 0; t < 50; ++t) {
      const ZPoint zp{random_z(2)};
      n3.push_back(1.0 - std::abs(overlap(displaced_state(rep, zp), coherent_state(rep, z_to_zeta(zp)))));
    }
  }
  std::sort(n3.begin(), n3.end());
  const std::string n3_note = "median " + sci(n3[n3.size() / 2]) + " max " + sci(n3.back());
  const bool pass = norm_err <= 1e-12 && origin_exact && su2_deficit <= 1e-10;
  return {pass, "norm error " + sci(norm_err) + ", origin exact " + (origin_exact ? "yes" : "no") +
                    ", N=2 overlap deficit " + sci(su2_deficit) + ", N=3 overlap deficit (recorded) " + n3_note};
}

Outcome measure_suite() {
  double moment = 0.0;
  for (int js = 0; js <= 12; ++js)
    for (int js1 = 0; js1 <= js; ++js1) moment = std::max(moment, moment_check(js, js1).residual);
  double quad = 0.0;
  for (int j1 = 1; j1 <= 3; ++j1)
    quad = std::max(quad, identity_check(enumerate_basis(2, j1), IdentityMethod::quadrature, 16).deviation);
  double mc = 0.0;
  bool monotone = true;
  std::string trend;
  for (int j1 = 1; j1 <= 2; ++j1) {
    auto rep = enumerate_basis(3, j1);
    double prev = std::numeric_limits<double>::infinity();
    trend += " j1=" + std::to_string(j1) + ":";
    for (std::size_t budget : {10000u, 100000u, 1000000u}) {
      const double d = identity_check(rep, IdentityMethod::monte_carlo, budget, 7).deviation;
      trend += " " + sci(d);
      monotone = monotone && d < prev;
      prev = d;
    }
    mc = std::max(mc, prev);
  }
  const bool pass = moment <= 1e-10 && quad <= 1e-6 && mc <= 5e-3 && monotone;
  return {pass, "moment residual " + sci(moment) + ", quadrature deviation " + sci(quad) + ", MC deviation at 1e6 " +
                    sci(mc) + ", trend" + trend};
}

Outcome bargmann_suite() {
  double transport = 0.0, relations = 0.0;
  bool pass = true;
  for (int N = 2; N <= 4; ++N)
    for (int j1 = 1; j1 <= 5; ++j1) {
      const auto r = exactness_check(enumerate_basis(N, j1));
      transport = std::max(transport, r.transport_deviation);
      for (const auto& [k, v] : r.algebra_residuals) relations = std::max(relations, v);
      pass = pass && r.passed(1e-12);
    }
  return {pass, "transport deviation " + sci(transport) + ", relations on monomials " + sci(relations)};
}

struct IntelligentTotals {
  double residual = 0.0, sr = 0.0, law = 0.0, unit_gap = 0.0, xval = 0.0;
  std::size_t ordering_violations = 0, solutions = 0;
  double seconds = 0.0;
};

IntelligentTotals intelligent_grid() {
  IntelligentTotals t;
  const auto t0 = Clock::now();
  for (int N = 2; N <= 4; ++N)
    for (int j1 = 1; j1 <= 6; ++j1) {
      auto rep = enumerate_basis(N, j1);
      for (int i = 1; i < N; ++i)
        for (const auto& alpha : alpha_grid()) {
          const auto m = intelligent_states_matrix(rep, i, alpha);
          const auto r = intelligent_states_recursion(rep, i, alpha);
          t.xval = std::max(t.xval, multiset_distance(eigenvalues_of(m), eigenvalues_of(r)));
          const double a = std::abs(alpha);
          for (const auto* set : {&m, &r})
            for (const auto& s : *set) {
              ++t.solutions;
              const auto& rep_ = s.report;
              t.residual = std::max(t.residual, s.residual);
              t.sr = std::max(t.sr, std::abs(rep_.sr_residual));
              if (rep_.delta > 1e-8) {
                t.law = std::max({t.law, std::abs(rep_.var_p - a * rep_.delta), std::abs(rep_.var_q - rep_.delta / a)});
                if (a < 1.0 && !(rep_.var_p < rep_.delta && rep_.delta < rep_.var_q)) ++t.ordering_violations;
              }
              if (std::abs(a - 1.0) < 1e-15) t.unit_gap = std::max(t.unit_gap, std::abs(rep_.var_p - rep_.var_q));
            }
        }
    }
  t.seconds = seconds_since(t0);
  return t;
}

Outcome intelligent_suite(const IntelligentTotals& t) {
  const bool pass = t.residual <= 1e-10 && t.sr <= 1e-9 && t.law <= 1e-9 && t.unit_gap <= 1e-9 &&
                    t.ordering_violations == 0 && t.seconds <= 300.0;
  return {pass, std::to_string(t.solutions) + " solutions, residual " + sci(t.residual) + ", |SR| " + sci(t.sr) +
                    ", variance law " + sci(t.law) + ", |alpha|=1 gap " + sci(t.unit_gap) + ", ordering violations " +
                    std::to_string(t.ordering_violations) + ", " + sci(t.seconds) + " s"};
}

Outcome cross_validation(const IntelligentTotals& t) {
  double ratio = 0.0;
  for (int j1 = 1; j1 <= 4; ++j1) {
    auto rep = enumerate_basis(2, j1);
    for (const auto& alpha : alpha_grid())
      for (const auto& s : intelligent_states_recursion(rep, 1, alpha)) {
        const auto& a = s.trace->coefficients;
        const double lp = s.trace->lambda_prime;
        const Complex c0 = hypergeometric_coefficient({j1, 0}, lp, HypergeometricBranch::companion);
        for (int n = 0; n <= j1; ++n) {
          const Complex cn = hypergeometric_coefficient({j1, n}, lp, HypergeometricBranch::companion);
          ratio = std::max(ratio, std::abs(cn / c0 - a(n) / a(0)));
        }
      }
  }
  return {t.xval <= 1e-9 && ratio <= 1e-9,
          "eigenvalue multiset distance " + sci(t.xval) + ", hypergeometric ratio error " + sci(ratio)};
}

Outcome sr_sanity() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int N = 2; N <= 4; ++N)
    for (int j1 = 1; j1 <= 6; ++j1) {
      auto rep = enumerate_basis(N, j1);
      for (int i = 1; i < N; ++i) {
        const auto qp = quadratures(rep, i);
        for (int t = 0; t < 1000; ++t) {
          Vector v(static_cast<Eigen::Index>(rep->dim()));
          for (auto& x : v) x = Complex(g(rng), g(rng));
          v /= v.norm();
          worst = std::min(worst, uncertainty_report(qp, {rep, v}).sr_residual);
        }
      }
    }
  return {worst >= -1e-10, "most negative SR residual " + sci(worst)};
}

Outcome cli_determinism(const std::string& cli, const std::string& dir) {
  const std::string a = dir + "/acceptance_sweep_a.csv";
  const std::string b = dir + "/acceptance_sweep_b.csv";
  const std::string cmd = cli + " sweep --n 3 --j1 3 --seed 42 --out ";
  const int ra = std::system((cmd + a).c_str());
  const int rb = std::system((cmd + b).c_str());
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string sa = slurp(a), sb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  return {ra == 0 && rb == 0 && !sa.empty() && sa == sb,
          "exit codes " + std::to_string(ra) + "/" + std::to_string(rb) + ", " + std::to_string(sa.size()) + " bytes, identical " +
              (sa == sb ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <sunstates> [scratch-dir]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string dir = argc > 2 ? argv[2] : ".";

  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << std::endl;
  };

  report(1, "algebra relations", algebra_suite);
  report(2, "coherent states", coherent_suite);
  report(3, "measure and identity", measure_suite);
  report(4, "Bargmann exactness", bargmann_suite);
  IntelligentTotals totals;
  bool grid_ok = true;
  try {
    totals = intelligent_grid();
  } catch (const std::exception& e) {
    grid_ok = false;
    std::cout << "intelligent grid aborted: " << e.what() << std::endl;
  }
  report(5, "intelligent states", [&] { return grid_ok ? intelligent_suite(totals) : Outcome{false, "grid aborted"}; });
  report(6, "solver cross-validation", [&] { return grid_ok ? cross_validation(totals) : Outcome{false, "grid aborted"}; });
  report(7, "SR inequality", sr_sanity);
  report(8, "CLI determinism", [&] { return cli_determinism(cli, dir); });
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 8 - failures << "/8" << std::endl;
  return failures ? 1 : 0;
}
