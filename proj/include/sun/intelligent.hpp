#pragma once

// Generalized intelligent states of the quadratures p_i = (e_i + f_i)/sqrt2,
// q_i = (e_i - f_i)/(i sqrt2): eigenvectors of (1 + alpha) e_i + (1 - alpha) f_i,
// which saturate the Schroedinger-Robertson uncertainty relation.
//
// Two independent solvers are provided. The matrix branch diagonalizes the
// Fock-space matrix block by block (blocks found from its sparsity pattern).
// The recursion branch works in the Bargmann picture: the eigenvalue equation
// becomes a three-term recursion along one-dimensional chains of monomials,
// solved per chain and mapped back to Fock amplitudes.

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sun/bargmann.hpp"
#include "sun/rep_core.hpp"

namespace sun {

inline constexpr double kEigenResidualTolerance = 1e-10;
inline constexpr double kSrTolerance = 1e-9;
inline constexpr double kClassificationMargin = 1e-8;
inline constexpr double kConditionThreshold = 1e8;

struct QuadraturePair {
  RepPtr rep;
  int index = 1;
  Operator p;
  Operator q;
  Operator h;
  Operator e;
  Operator f;
};

/// p = (e_i + f_i)/sqrt2, q = (e_i - f_i)/(i sqrt2); checks Hermiticity and [p, q] = i h.
inline QuadraturePair quadratures(const RepPtr& rep, int i) {
  const auto g = weyl_generators(rep, i);
  const double s = 1.0 / std::sqrt(2.0);
  const Complex imag(0.0, 1.0);
  QuadraturePair qp{rep, i, s * (g.e + g.f), (s / imag) * (g.e - g.f), g.h, g.e, g.f};
  const double herm = std::max(max_abs(qp.p.m - qp.p.m.adjoint()), max_abs(qp.q.m - qp.q.m.adjoint()));
  const double comm = max_abs(commutator(qp.p, qp.q) - imag * qp.h);
  if (herm > 1e-12 || comm > 1e-12) throw NumericError("quadrature construction failed its self-check");
  return qp;
}

enum class StateClass { coherent, p_squeezed, q_squeezed, degenerate, generic };

inline std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::coherent: return "coherent";
    case StateClass::p_squeezed: return "p-squeezed";
    case StateClass::q_squeezed: return "q-squeezed";
    case StateClass::degenerate: return "degenerate";
    default: return "generic";
  }
}

struct UncertaintyReport {
  double mean_p = 0.0;
  double mean_q = 0.0;
  double mean_h = 0.0;
  double var_p = 0.0;
  double var_q = 0.0;
  double covariance = 0.0;   // <{p - <p>, q - <q>}>
  double delta = 0.0;        // sqrt(<h>^2 + <c>^2) / 2
  double sr_residual = 0.0;  // var_p var_q - (<h>^2 + <c>^2)/4
  // Filled when the state is tied to an eigenvalue parameter alpha.
  std::optional<double> u;  // 2 Re alpha
  std::optional<double> v;  // 2 Im alpha
  // <h>-based expressions |alpha|^2 <h>/u, <h>/u, v <h>/u; diagnostics only.
  std::optional<double> var_p_from_h;
  std::optional<double> var_q_from_h;
  std::optional<double> covariance_from_h;
  StateClass cls = StateClass::generic;
};

inline StateClass classify_moments(double var_p, double var_q, double delta, double margin = kClassificationMargin) {
  if (delta < margin) return StateClass::degenerate;
  if (std::abs(var_p - delta) <= margin && std::abs(var_q - delta) <= margin) return StateClass::coherent;
  if (var_p < delta - margin) return StateClass::p_squeezed;
  if (var_q < delta - margin) return StateClass::q_squeezed;
  return StateClass::generic;
}

inline UncertaintyReport uncertainty_report(const QuadraturePair& qp, const StateVector& v,
                                            std::optional<Complex> alpha = std::nullopt) {
  detail::require_same_rep(qp.rep, v.rep);
  require_normalized(v);
  UncertaintyReport r;
  const Vector pv = qp.p.m * v.amp;
  const Vector qv = qp.q.m * v.amp;
  r.mean_p = v.amp.dot(pv).real();
  r.mean_q = v.amp.dot(qv).real();
  r.mean_h = v.amp.dot(qp.h.m * v.amp).real();
  const Vector dp = pv - r.mean_p * v.amp;
  const Vector dq = qv - r.mean_q * v.amp;
  r.var_p = dp.squaredNorm();
  r.var_q = dq.squaredNorm();
  r.covariance = 2.0 * dp.dot(dq).real();
  const double bound = r.mean_h * r.mean_h + r.covariance * r.covariance;
  r.delta = 0.5 * std::sqrt(bound);
  r.sr_residual = r.var_p * r.var_q - 0.25 * bound;
  if (alpha) {
    r.u = 2.0 * alpha->real();
    r.v = 2.0 * alpha->imag();
    if (std::abs(*r.u) > 0.0) {
      r.var_p_from_h = std::norm(*alpha) * r.mean_h / *r.u;
      r.var_q_from_h = r.mean_h / *r.u;
      r.covariance_from_h = *r.v * r.mean_h / *r.u;
    }
  }
  r.cls = classify_moments(r.var_p, r.var_q, r.delta);
  return r;
}

/// (1 + alpha) e_i + (1 - alpha) f_i.
inline Operator intelligent_operator(const QuadraturePair& qp, Complex alpha) {
  return (1.0 + alpha) * qp.e + (1.0 - alpha) * qp.f;
}

struct Eigenpair {
  Complex lambda;
  StateVector state;
  double residual = 0.0;
  bool ill_conditioned = false;
  std::size_t block = 0;
};

namespace detail {

/// Connected components of the symmetric sparsity pattern of m, each sorted.
inline std::vector<std::vector<Eigen::Index>> sparsity_blocks(const Matrix& m) {
  const Eigen::Index d = m.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      if (m(r, c) != Complex(0.0)) {
        const auto a = find(r), b = find(c);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(d), -1);
  for (Eigen::Index x = 0; x < d; ++x) {
    const auto root = find(x);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<Eigen::Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(s)].push_back(x);
  }
  return blocks;
}

inline double residual_of(const Matrix& m, const Vector& v, Complex lambda) { return (m * v - lambda * v).norm(); }

/// Inverse iteration with a slightly perturbed shift, keeping the best iterate.
inline void refine_eigenpair(const Matrix& m, Vector& v, Complex& lambda) {
  double best = residual_of(m, v, lambda);
  const double scale = std::max({1.0, std::abs(lambda), m.cwiseAbs().maxCoeff()});
  if (best <= 1e-13 * scale) return;
  const auto d = m.rows();
  Vector x = v;
  Complex mu = lambda;
  for (int it = 0; it < 3; ++it) {
    const Complex shift = mu + 1e-10 * scale;
    const Matrix a = m - shift * Matrix::Identity(d, d);
    Vector y = a.partialPivLu().solve(x);
    if (!y.allFinite() || y.norm() == 0.0) break;
    x = y / y.norm();
    mu = x.dot(m * x);
    const double r = residual_of(m, x, mu);
    if (r < best) {
      best = r;
      v = x;
      lambda = mu;
    }
  }
}

inline std::tuple<long long, long long> eigen_sort_key(Complex z) {
  return {std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9)};
}

}  // namespace detail

/// Full eigensystem of a dense complex matrix, solved block by block.
///
/// With `nilpotent` set the blocks are known to be single Jordan blocks and the
/// eigenvectors are taken as an orthonormal basis of each block's kernel.
inline std::vector<Eigenpair> dense_eigenpairs(const Operator& op, bool nilpotent = false) {
  const auto blocks = detail::sparsity_blocks(op.m);
  const auto d = op.m.rows();
  std::vector<Eigenpair> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& idx = blocks[b];
    const auto n = static_cast<Eigen::Index>(idx.size());
    Matrix sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = op.m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);

    auto emit = [&](Vector local, Complex lambda, bool ill) {
      local /= local.norm();
      detail::refine_eigenpair(sub, local, lambda);
      Vector full = Vector::Zero(d);
      for (Eigen::Index r = 0; r < n; ++r) full(idx[static_cast<std::size_t>(r)]) = local(r);
      Eigenpair ep{lambda, {op.rep, std::move(full)}, 0.0, ill, b};
      ep.residual = detail::residual_of(op.m, ep.state.amp, lambda);
      out.push_back(std::move(ep));
    };

    if (nilpotent) {
      Eigen::JacobiSVD<Matrix> svd(sub, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      const double cut = 1e-12 * std::max(1.0, sv.size() ? sv(0) : 0.0);
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k >= sv.size() || sv(k) <= cut) emit(svd.matrixV().col(k), 0.0, n > 1);
      }
      continue;
    }

    Eigen::ComplexEigenSolver<Matrix> ces(sub, true);
    if (ces.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");
    Matrix vecs = ces.eigenvectors();
    for (Eigen::Index k = 0; k < n; ++k) vecs.col(k).normalize();
    const auto sv = Eigen::JacobiSVD<Matrix>(vecs).singularValues();
    const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    const bool ill = cond > kConditionThreshold;
    for (Eigen::Index k = 0; k < n; ++k) emit(vecs.col(k), ces.eigenvalues()(k), ill);
  }
  std::stable_sort(out.begin(), out.end(), [](const Eigenpair& a, const Eigenpair& b) {
    return std::make_tuple(detail::eigen_sort_key(a.lambda), a.block) <
           std::make_tuple(detail::eigen_sort_key(b.lambda), b.block);
  });
  return out;
}

enum class Branch { matrix, recursion };

inline std::string to_string(Branch b) { return b == Branch::matrix ? "matrix" : "recursion"; }

/// Extra data carried by recursion-branch solutions.
struct RecursionTrace {
  std::size_t sector = 0;
  double lambda_prime = 0.0;
  Eigen::VectorXd coefficients;  // eigenvector of the sector recursion, indexed by the running exponent
};

struct IntelligentSolution {
  Complex alpha;
  Complex lambda;
  StateVector state;
  double residual = 0.0;
  Branch branch = Branch::matrix;
  bool ill_conditioned = false;
  UncertaintyReport report;
  std::optional<RecursionTrace> trace;
};

namespace detail {

inline bool is_unit(Complex alpha, double sign) { return std::abs(alpha - Complex(sign)) < 1e-14; }

inline void require_nonzero_alpha(Complex alpha) {
  if (std::abs(alpha) == 0.0) throw DomainError("alpha must be nonzero");
}

}  // namespace detail

/// Eigenpairs of (1 + alpha) e_i + (1 - alpha) f_i from the Fock matrices.
/// alpha = +-1 makes the operator nilpotent; the kernel is returned with eigenvalue 0.
inline std::vector<IntelligentSolution> intelligent_states_matrix(const RepPtr& rep, int i, Complex alpha) {
  detail::require_nonzero_alpha(alpha);
  const auto qp = quadratures(rep, i);
  const Operator M = intelligent_operator(qp, alpha);
  const bool nilpotent = detail::is_unit(alpha, 1.0) || detail::is_unit(alpha, -1.0);
  std::vector<IntelligentSolution> out;
  for (auto& ep : dense_eigenpairs(M, nilpotent)) {
    IntelligentSolution sol{alpha, ep.lambda, ep.state, ep.residual, Branch::matrix, ep.ill_conditioned, {}, std::nullopt};
    sol.report = uncertainty_report(qp, sol.state, alpha);
    out.push_back(std::move(sol));
  }
  return out;
}

/// One chain of monomials coupled by the eigenvalue equation for pair i.
struct RecursionSector {
  std::vector<std::size_t> basis_index;  // Fock basis position of running exponent 0..m
  int m = 0;                             // chain length minus one
  Eigen::MatrixXd recursion;             // from the transported differential operators
  Eigen::MatrixXd literal;               // three-term formula, centre-index reading
  double literal_deviation = 0.0;
  std::optional<double> shifted_deviation;  // i = 1 only: prefactor read at the shifted index
};

namespace detail {

/// Scale r = sqrt((1-alpha)/(1+alpha)) and s = (1+alpha) r, with s^2 = 1 - alpha^2.
inline std::pair<Complex, Complex> recursion_scales(Complex alpha) {
  const Complex r = std::sqrt((1.0 - alpha) / (1.0 + alpha));
  return {r, (1.0 + alpha) * r};
}

/// Occupation index of the running exponent: mode i+1 for i = 1 (the exponent of
/// w_1), mode i for i >= 2 (the exponent of the lower variable w_{i-1}).
inline std::size_t running_mode(int i) { return i == 1 ? 1 : static_cast<std::size_t>(i - 1); }

inline Eigen::MatrixXd three_term(int m, const std::function<double(int)>& below, const std::function<double(int)>& above) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int n = 0; n <= m; ++n) {
    if (n > 0) t(n, n - 1) = below(n);
    if (n < m) t(n, n + 1) = above(n);
  }
  return t;
}

}  // namespace detail

/// Splits the monomial lattice into chains for pair i and builds each chain's
/// recursion matrix by applying the differential realization of
/// (1 + alpha) e_i + (1 - alpha) f_i to the rescaled monomials
///   i = 1:  eta^n with eta = r w_1,
///   i >= 2: xi^p with xi = w_{i-1} / r,
/// divided by s. The result is alpha-independent:
///   lambda' a_n = (m + 1 - n) a_{n-1} + (n + 1) a_{n+1}.
inline std::vector<RecursionSector> recursion_sectors(const RepPtr& rep, int i, Complex alpha) {
  const int N = rep->modes();
  const int j1 = rep->quanta();
  if (i < 1 || i > N - 1) throw DomainError("pair index outside 1..N-1");
  detail::require_nonzero_alpha(alpha);
  if (detail::is_unit(alpha, 1.0) || detail::is_unit(alpha, -1.0)) {
    throw DomainError("recursion branch is undefined at alpha = +-1");
  }
  const auto [r, s] = detail::recursion_scales(alpha);
  const double sigma = i == 1 ? 1.0 : -1.0;
  const std::size_t lo = static_cast<std::size_t>(i - 1);
  const std::size_t run = detail::running_mode(i);

  const DiffOp e = diff_realization(N, j1, {GeneratorId::Kind::e, i});
  const DiffOp f = diff_realization(N, j1, {GeneratorId::Kind::f, i});
  const DiffOp M = (1.0 + alpha) * e + (1.0 - alpha) * f;

  // Group basis states by everything except how the pair's quanta are split.
  std::vector<RecursionSector> sectors;
  std::map<OccupationVector, std::size_t> sector_of;
  for (std::size_t b = 0; b < rep->dim(); ++b) {
    OccupationVector key = rep->state(b);
    key[lo] += key[lo + 1];
    key[lo + 1] = 0;
    auto [it, inserted] = sector_of.try_emplace(key, sectors.size());
    if (inserted) {
      RecursionSector sec;
      sec.m = key[lo];
      sec.basis_index.assign(static_cast<std::size_t>(sec.m + 1), 0);
      sectors.push_back(std::move(sec));
    }
    auto& sec = sectors[it->second];
    sec.basis_index[static_cast<std::size_t>(rep->state(b)[run])] = b;
  }

  for (auto& sec : sectors) {
    const int m = sec.m;
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    for (int n = 0; n <= m; ++n) {
      const auto& occ = rep->state(sec.basis_index[static_cast<std::size_t>(n)]);
      Polynomial mono(N - 1, Chart::affine);
      mono.add(basis_exponents(occ, Chart::affine), 1.0);
      const Polynomial image = apply_diffop(M, mono);
      for (const auto& [exps, c] : image.terms()) {
        // exps[run - 1] is the running exponent (affine variable index = mode index - 1).
        const int target = exps[run - 1];
        if (target < 0 || target > m) throw NumericError("differential operator left its sector");
        k(target, n) = c * std::pow(r, sigma * (n - target)) / s;
      }
    }
    if (k.imag().cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, k.real().cwiseAbs().maxCoeff())) {
      throw NumericError("transported recursion matrix is not real");
    }
    sec.recursion = k.real();

    // Printed three-term form. For i = 1 the prefactor is j1 + 1 - (sum of all
    // affine exponents), read at the centre index n; spectators contribute B.
    const auto& top = rep->state(sec.basis_index[0]);
    int spectators = 0;
    for (std::size_t mode = 1; mode < top.size(); ++mode) {
      if (mode != run) spectators += top[mode];
    }
    if (i == 1) {
      sec.literal = detail::three_term(
          m, [&](int n) { return static_cast<double>(j1 + 1 - n - spectators); }, [](int n) { return n + 1.0; });
      const Eigen::MatrixXd shifted = detail::three_term(
          m, [&](int n) { return static_cast<double>(j1 + 1 - (n - 1) - spectators); }, [](int n) { return n + 1.0; });
      sec.shifted_deviation = (shifted - sec.recursion).cwiseAbs().maxCoeff();
    } else {
      sec.literal = detail::three_term(
          m, [&](int p) { return static_cast<double>(m - p + 1); }, [](int p) { return p + 1.0; });
    }
    sec.literal_deviation = (sec.literal - sec.recursion).cwiseAbs().maxCoeff();
  }
  return sectors;
}

/// Real eigenpairs of a zero-diagonal tridiagonal matrix whose off-diagonal
/// products are positive, by symmetrizing with a diagonal similarity.
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> solve_three_term(const Eigen::MatrixXd& t) {
  const auto size = t.rows();
  if (size == 1) return {Eigen::VectorXd::Constant(1, t(0, 0)), Eigen::MatrixXd::Ones(1, 1)};
  Eigen::VectorXd diag = t.diagonal();
  Eigen::VectorXd sub(size - 1);
  Eigen::VectorXd d(size);
  d(0) = 1.0;
  for (Eigen::Index k = 0; k + 1 < size; ++k) {
    const double prod = t(k, k + 1) * t(k + 1, k);
    if (!(prod > 0.0)) throw NumericError("recursion matrix is not symmetrizable");
    sub(k) = std::sqrt(prod);
    d(k + 1) = d(k) * t(k, k + 1) / sub(k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericError("tridiagonal eigensolver failed");
  Eigen::MatrixXd vecs = d.cwiseInverse().asDiagonal() * es.eigenvectors();
  return {es.eigenvalues(), vecs};
}

/// Eigenpairs of (1 + alpha) e_i + (1 - alpha) f_i from the chain recursions.
inline std::vector<IntelligentSolution> intelligent_states_recursion(const RepPtr& rep, int i, Complex alpha) {
  const auto sectors = recursion_sectors(rep, i, alpha);
  const auto [r, s] = detail::recursion_scales(alpha);
  const double sigma = i == 1 ? 1.0 : -1.0;
  const auto qp = quadratures(rep, i);
  const Operator M = intelligent_operator(qp, alpha);

  std::vector<IntelligentSolution> out;
  for (std::size_t sid = 0; sid < sectors.size(); ++sid) {
    const auto& sec = sectors[sid];
    const auto [values, vectors] = solve_three_term(sec.recursion);
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      Vector amp = Vector::Zero(static_cast<Eigen::Index>(rep->dim()));
      for (int n = 0; n <= sec.m; ++n) {
        const auto b = sec.basis_index[static_cast<std::size_t>(n)];
        // Bargmann coefficient of the unscaled monomial, then the inverse Bargmann weight.
        const Complex bargmann = vectors(n, k) * std::pow(r, sigma * n);
        amp(static_cast<Eigen::Index>(b)) = bargmann / sqrt_multinomial(rep->state(b));
      }
      amp /= amp.norm();
      const Complex lambda = s * values(k);
      IntelligentSolution sol{alpha, lambda, {rep, std::move(amp)}, 0.0, Branch::recursion, false, {}, std::nullopt};
      sol.residual = detail::residual_of(M.m, sol.state.amp, lambda);
      sol.report = uncertainty_report(qp, sol.state, alpha);
      sol.trace = RecursionTrace{sid, values(k), vectors.col(k)};
      out.push_back(std::move(sol));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const IntelligentSolution& a, const IntelligentSolution& b) {
    return detail::eigen_sort_key(a.lambda) < detail::eigen_sort_key(b.lambda);
  });
  return out;
}

struct Classification {
  StateClass tag = StateClass::generic;
  std::optional<double> variance_ratio;        // var_p / var_q
  std::optional<double> variance_law_error;    // max(|var_p - |alpha| delta|, |var_q - delta/|alpha||)
  bool variance_law_holds = true;
};

/// Classification plus the variance laws var_p = |alpha| delta, var_q = delta / |alpha|.
inline Classification classify(const IntelligentSolution& sol, double tol = kSrTolerance) {
  Classification c;
  const auto& r = sol.report;
  c.tag = r.cls;
  if (c.tag == StateClass::degenerate) return c;
  const double a = std::abs(sol.alpha);
  c.variance_ratio = r.var_p / r.var_q;
  c.variance_law_error = std::max(std::abs(r.var_p - a * r.delta), std::abs(r.var_q - r.delta / a));
  c.variance_law_holds = *c.variance_law_error <= tol;
  return c;
}

struct AlgebraCoefficients {
  Complex plus = 0.0;   // multiplies e_i
  Complex minus = 0.0;  // multiplies f_i
  Complex zero = 0.0;   // multiplies h_i
};

/// Eigenpairs of sum_i (plus_i e_i + minus_i f_i + zero_i h_i).
inline std::vector<Eigenpair> algebra_eigenstates(const RepPtr& rep, const std::vector<AlgebraCoefficients>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(rep->modes() - 1)) {
    throw DomainError("need one coefficient triple per simple root");
  }
  const auto d = static_cast<Eigen::Index>(rep->dim());
  Operator M{rep, Matrix::Zero(d, d)};
  bool any = false;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& c = coeffs[k];
    if (c.plus == 0.0 && c.minus == 0.0 && c.zero == 0.0) continue;
    any = true;
    const auto g = weyl_generators(rep, static_cast<int>(k) + 1);
    M = M + c.plus * g.e + c.minus * g.f + c.zero * g.h;
  }
  if (!any) throw DomainError("all algebra coefficients are zero");
  return dense_eigenpairs(M);
}

/// Polar grid r in {1/4, 1/2, 1, 2, 4}, theta = k pi/4, without alpha = +-1.
inline std::vector<Complex> alpha_grid() {
  std::vector<Complex> grid;
  for (double radius : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (int k = 0; k < 8; ++k) {
      if (radius == 1.0 && (k == 0 || k == 4)) continue;
      grid.push_back(std::polar(radius, k * std::numbers::pi / 4.0));
    }
  }
  return grid;
}

/// Matching distance between two eigenvalue multisets: greedy nearest pairing in
/// both directions; infinity if the sizes differ.
inline double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  auto one_way = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    std::vector<bool> used(y.size(), false);
    double worst = 0.0;
    for (const auto& z : x) {
      std::size_t best = y.size();
      double dist = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (!used[k] && std::abs(z - y[k]) < dist) {
          dist = std::abs(z - y[k]);
          best = k;
        }
      }
      used[best] = true;
      worst = std::max(worst, dist);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

template <class Solutions>
std::vector<Complex> eigenvalues_of(const Solutions& sols) {
  std::vector<Complex> out;
  for (const auto& s : sols) out.push_back(s.lambda);
  return out;
}

}  // namespace sun
