#pragma once

// su(N) coherent states: closed form in the chain labels zeta, the
// displacement-operator construction in the labels z, and the completeness
// (resolution of identity) checks.

#include <unsupported/Eigen/MatrixFunctions>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sun/rep_core.hpp"

namespace sun {

/// Chain labels (zeta_1, ..., zeta_{N-1}).
struct ZetaPoint {
  std::vector<Complex> zeta;
};

/// Displacement parameters (z_1, ..., z_{N-1}).
struct ZPoint {
  std::vector<Complex> z;
};

namespace detail {

inline void require_label_count(const RepPtr& rep, std::size_t count, const char* what) {
  if (count != static_cast<std::size_t>(rep->modes() - 1)) {
    throw DomainError(std::string(what) + " needs " + std::to_string(rep->modes() - 1) +
                      " components, got " + std::to_string(count));
  }
}

inline Complex ipow(Complex base, int exponent) {
  Complex out = 1.0;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

/// Unnormalized amplitudes sqrt(multinomial) * prod_k w_k^{n_{k+1}}.
inline Vector affine_amplitudes(const RepPtr& rep, const std::vector<Complex>& w) {
  Vector amp(static_cast<Eigen::Index>(rep->dim()));
  for (std::size_t b = 0; b < rep->dim(); ++b) {
    const auto& n = rep->state(b);
    Complex value = sqrt_multinomial(n);
    for (std::size_t k = 0; k < w.size(); ++k) value *= ipow(w[k], n[k + 1]);
    amp(static_cast<Eigen::Index>(b)) = value;
  }
  return amp;
}

}  // namespace detail

/// Affine coordinates w_k = zeta_1 * ... * zeta_k.
inline std::vector<Complex> zeta_to_affine(const ZetaPoint& zp) {
  std::vector<Complex> w(zp.zeta.size());
  Complex acc = 1.0;
  for (std::size_t k = 0; k < zp.zeta.size(); ++k) {
    acc *= zp.zeta[k];
    w[k] = acc;
  }
  return w;
}

/// Inverse of zeta_to_affine; requires w_{k-1} != 0 wherever w_k != 0.
inline ZetaPoint affine_to_zeta(const std::vector<Complex>& w) {
  ZetaPoint zp{std::vector<Complex>(w.size())};
  Complex prev = 1.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (prev == Complex(0.0)) {
      if (w[k] != Complex(0.0)) throw DomainError("affine point lies outside the chain chart");
      zp.zeta[k] = 0.0;
      continue;
    }
    zp.zeta[k] = w[k] / prev;
    prev = w[k];
  }
  return zp;
}

/// Closed-form coherent state.
///
/// The amplitude on |j_1 - j_2, j_2 - j_3, ..., j_N> is
///   Nrm * prod_s sqrt(binomial(j_s, j_{s+1})) * zeta_1^{j_2} ... zeta_{N-1}^{j_N},
/// with Nrm = (1 + |zeta_1|^2 + |zeta_1 zeta_2|^2 + ...)^{-j1/2}.
inline StateVector coherent_state(const RepPtr& rep, const ZetaPoint& zp) {
  detail::require_label_count(rep, zp.zeta.size(), "zeta");
  double weight = 1.0;
  double partial = 1.0;
  for (const auto& zeta : zp.zeta) {
    partial *= std::norm(zeta);
    weight += partial;
  }
  const double nrm = std::pow(weight, -0.5 * rep->quanta());

  Vector amp(static_cast<Eigen::Index>(rep->dim()));
  for (std::size_t b = 0; b < rep->dim(); ++b) {
    const auto j = chain_indices(rep->state(b));
    Complex value = nrm;
    for (std::size_t s = 0; s + 1 < j.size(); ++s) {
      value *= std::sqrt(binomial(j[s], j[s + 1])) * detail::ipow(zp.zeta[s], j[s + 1]);
    }
    amp(static_cast<Eigen::Index>(b)) = value;
  }
  return {rep, std::move(amp)};
}

/// Coherent state labelled by affine coordinates; equals coherent_state at
/// zeta = affine_to_zeta(w) but needs no chart restriction.
inline StateVector coherent_state_affine(const RepPtr& rep, const std::vector<Complex>& w) {
  detail::require_label_count(rep, w.size(), "w");
  Vector amp = detail::affine_amplitudes(rep, w);
  amp /= amp.norm();
  return {rep, std::move(amp)};
}

inline constexpr double kDisplacedNormTolerance = 1e-10;

/// exp(sum_i z_i F_{i+1} - conj(z_i) E_{i+1}) |j1, 0, ..., 0>.
inline StateVector displaced_state(const RepPtr& rep, const ZPoint& zp) {
  detail::require_label_count(rep, zp.z.size(), "z");
  const auto chain = ladder_chain(rep);
  const auto d = static_cast<Eigen::Index>(rep->dim());
  Matrix generator = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < zp.z.size(); ++k) {
    generator += zp.z[k] * chain.F[k].m - std::conj(zp.z[k]) * chain.E[k].m;
  }
  const Matrix unitary = generator.exp();
  Vector amp = unitary.col(0);
  if (!amp.allFinite()) throw NumericError("matrix exponential produced non-finite entries");
  if (std::abs(amp.norm() - 1.0) > kDisplacedNormTolerance) {
    throw NumericError("matrix exponential lost unitarity (norm " + std::to_string(amp.norm()) + ")");
  }
  return {rep, std::move(amp)};
}

namespace detail {

inline constexpr double kPoleTolerance = 1e-12;

inline void require_off_pole(double r) {
  const double pi = std::numbers::pi;
  const double k = std::round((r - 0.5 * pi) / pi);
  if (std::abs(r - (0.5 * pi + k * pi)) < kPoleTolerance) {
    throw DomainError("|z| = " + std::to_string(r) + " sits on a tangent pole");
  }
}

inline Complex phase_of(Complex z) { return z == Complex(0.0) ? Complex(0.0) : z / std::abs(z); }

}  // namespace detail

/// zeta_s = (z_s/|z_s|) tan|z_s| cos|z_{s+1}| for s < N-1, zeta_{N-1} = (z/|z|) tan|z|.
/// A zero z_s maps to zeta_s = 0.
inline ZetaPoint z_to_zeta(const ZPoint& zp) {
  const std::size_t count = zp.z.size();
  ZetaPoint out{std::vector<Complex>(count)};
  for (std::size_t s = 0; s < count; ++s) {
    const double r = std::abs(zp.z[s]);
    detail::require_off_pole(r);
    Complex value = detail::phase_of(zp.z[s]) * std::tan(r);
    if (s + 1 < count) value *= std::cos(std::abs(zp.z[s + 1]));
    out.zeta[s] = value;
  }
  return out;
}

/// Chart labels that reproduce displaced_state exactly: the displacement acts
/// on one boson as a rotation by r = |z| between mode 1 and the direction z/r,
/// so w_k = z_k tan(r) / r.
inline ZetaPoint displacement_to_zeta(const ZPoint& zp) {
  double r2 = 0.0;
  for (const auto& z : zp.z) r2 += std::norm(z);
  const double r = std::sqrt(r2);
  detail::require_off_pole(r);
  const double scale = r == 0.0 ? 1.0 : std::tan(r) / r;
  std::vector<Complex> w(zp.z.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = zp.z[k] * scale;
  return affine_to_zeta(w);
}

/// <a|b>, conjugate-linear in the first argument.
inline Complex overlap(const StateVector& a, const StateVector& b) {
  detail::require_same_rep(a.rep, b.rep);
  return a.amp.dot(b.amp);
}

/// Radial density h(x) = (j + 1) / (1 + x)^{j + 2} in x = |zeta|^2.
inline double radial_density(int j, double x) { return (j + 1) / std::pow(1.0 + x, j + 2); }

struct MomentCheck {
  double integral = 0.0;
  double expected = 0.0;
  double error_estimate = 0.0;
  double residual = 0.0;
};

/// Integrates x^{j_s1} h(x) over [0, inf) and compares with j_s1! (j_s - j_s1)! / j_s!.
inline MomentCheck moment_check(int j_s, int j_s1) {
  if (j_s < 0 || j_s1 < 0 || j_s1 > j_s) {
    throw DomainError("moment check needs 0 <= j_s1 <= j_s");
  }
  auto integrand = [&](double x) { return std::pow(x, j_s1) * radial_density(j_s, x); };
  MomentCheck out;
  out.integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-15, &out.error_estimate);
  if (!std::isfinite(out.integral) || out.error_estimate > 1e-9) {
    throw NumericError("moment quadrature did not converge (error estimate " +
                       std::to_string(out.error_estimate) + ")");
  }
  out.expected = 1.0 / binomial(j_s, j_s1);
  out.residual = std::abs(out.integral - out.expected);
  return out;
}

enum class IdentityMethod { quadrature, monte_carlo };

inline std::string to_string(IdentityMethod m) {
  return m == IdentityMethod::quadrature ? "quadrature" : "monte-carlo";
}

struct ResolutionReport {
  int N = 0;
  int j1 = 0;
  Matrix estimate;
  double deviation = 0.0;
  std::size_t budget = 0;  // nodes per simplex coordinate, or sample count
  IdentityMethod method = IdentityMethod::quadrature;
  std::string method_detail;
  std::string warning;  // empty unless the budget is too small to resolve the integral
};

namespace detail {

/// Gauss-Legendre nodes and weights on [0, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int order) {
  const auto positive = boost::math::legendre_p_zeros<double>(order);
  std::vector<double> roots;
  for (double x : positive) {
    roots.push_back(x);
    if (x != 0.0) roots.push_back(-x);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> nodes, weights;
  for (double x : roots) {
    const double dp = boost::math::legendre_p_prime<double>(order, x);
    nodes.push_back(0.5 * (x + 1.0));
    weights.push_back(1.0 / ((1.0 - x * x) * dp * dp));  // 2/((1-x^2) P'^2), halved for [0,1]
  }
  return {nodes, weights};
}

/// Accumulates sum_k weight_k psi_k psi_k^dagger in batches.
class OuterProductAccumulator {
 public:
  explicit OuterProductAccumulator(Eigen::Index dim, Eigen::Index batch = 2048)
      : sum_(Matrix::Zero(dim, dim)), columns_(dim, batch) {}

  void add(const Vector& psi, double weight) {
    columns_.col(filled_++) = std::sqrt(weight) * psi;
    if (filled_ == columns_.cols()) flush();
  }

  Matrix result() {
    flush();
    return sum_;
  }

 private:
  void flush() {
    if (filled_ == 0) return;
    const auto block = columns_.leftCols(filled_);
    sum_.noalias() += block * block.adjoint();
    filled_ = 0;
  }

  Matrix sum_;
  Matrix columns_;
  Eigen::Index filled_ = 0;
};

}  // namespace detail

/// Estimates the integral of dmu |zeta><zeta| and its distance from the identity.
///
/// Points are labelled by affine coordinates w_k = zeta_1 ... zeta_k with the
/// measure dmu = ((j1+N-1)! / (j1! pi^{N-1})) prod d^2 w_k (1 + sum|w_k|^2)^{-(j1+N)}
/// acting on the unnormalized (Bargmann) vectors. Equivalently: dim times the
/// average of |psi><psi| over normalized coherent states whose homogeneous
/// coordinates are uniform on the unit sphere of C^N. Both estimators below
/// sample that sphere: quadrature through stick-breaking coordinates of the
/// modulus simplex plus equispaced phases, Monte Carlo through normalized
/// complex Gaussian vectors mapped to w_k = v_{k+1} / v_1.
inline ResolutionReport identity_check(const RepPtr& rep, IdentityMethod method, std::size_t budget,
                                       std::uint64_t seed = 0) {
  if (budget == 0) throw DomainError("identity check budget must be positive");
  const int N = rep->modes();
  const int j1 = rep->quanta();
  const auto d = static_cast<Eigen::Index>(rep->dim());
  const double dim = static_cast<double>(rep->dim());
  const std::size_t coords = static_cast<std::size_t>(N - 1);

  ResolutionReport report;
  report.N = N;
  report.j1 = j1;
  report.budget = budget;
  report.method = method;
  detail::OuterProductAccumulator acc(d);

  if (method == IdentityMethod::quadrature) {
    const int order = static_cast<int>(budget);
    const int phases = j1 + 1;  // trapezoid is exact for |frequency| <= j1
    const auto [nodes, weights] = detail::gauss_legendre_unit(order);
    report.method_detail = "Gauss-Legendre order " + std::to_string(order) +
                           " per stick-breaking coordinate, " + std::to_string(phases) +
                           "-point trapezoid per relative phase";
    if (2 * order - 1 < j1 + N - 2) report.warning = "quadrature order below exactness threshold";

    double simplex_volume_density = 1.0;  // (N-1)!
    for (int k = 2; k < N; ++k) simplex_volume_density *= k;

    std::vector<std::size_t> radial(coords, 0), angular(coords, 0);
    std::vector<Complex> w(coords);
    std::vector<double> s(static_cast<std::size_t>(N));
    const double two_pi = 2.0 * std::numbers::pi;
    const double phase_weight = std::pow(1.0 / phases, static_cast<double>(coords));
    for (;;) {
      double jacobian = simplex_volume_density;
      double rest = 1.0;
      for (std::size_t k = 0; k < coords; ++k) {
        const double u = nodes[radial[k]];
        jacobian *= weights[radial[k]] * rest;
        s[k] = rest * u;
        rest *= 1.0 - u;
      }
      s[coords] = rest;
      // Mode 1 carries modulus s[0]; mode k+2 carries s[k+1].
      for (;;) {
        for (std::size_t k = 0; k < coords; ++k) {
          const double phi = two_pi * static_cast<double>(angular[k]) / phases;
          w[k] = std::sqrt(s[k + 1] / s[0]) * std::polar(1.0, phi);
        }
        acc.add(coherent_state_affine(rep, w).amp, dim * jacobian * phase_weight);
        std::size_t k = 0;
        while (k < coords && ++angular[k] == static_cast<std::size_t>(phases)) angular[k++] = 0;
        if (k == coords) break;
      }
      std::size_t k = 0;
      while (k < coords && ++radial[k] == nodes.size()) radial[k++] = 0;
      if (k == coords) break;
    }
  } else {
    report.method_detail =
        "Monte Carlo: homogeneous coordinates v drawn as normalized complex Gaussian vectors "
        "(uniform on the unit sphere of C^N), w_k = v_{k+1}/v_1, seed " + std::to_string(seed);
    if (budget < 1000 * rep->dim()) report.warning = "sample budget small relative to dimension; statistical error dominates";
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> v(static_cast<std::size_t>(N));
    std::vector<Complex> w(coords);
    const double weight = dim / static_cast<double>(budget);
    for (std::size_t sample = 0; sample < budget; ++sample) {
      for (auto& c : v) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = Complex(re, im);
      }
      for (std::size_t k = 0; k < coords; ++k) w[k] = v[k + 1] / v[0];
      acc.add(coherent_state_affine(rep, w).amp, weight);
    }
  }

  report.estimate = acc.result();
  report.deviation = max_abs(report.estimate - Matrix::Identity(d, d));
  return report;
}

}  // namespace sun
