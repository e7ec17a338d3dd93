#pragma once

// Symmetric (bosonic) representation of su(N): N modes, fixed total quanta j1.
// Every algebra element is materialized as a dense complex matrix over the
// occupation-number basis; the rest of the library is checked against these.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sun/errors.hpp"

namespace sun {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::size_t kDefaultMaxDim = 20000;

/// Boson occupation numbers (n_1, ..., n_N).
using OccupationVector = std::vector<int>;

/// binomial(n, k) as a double, or nullopt once the value exceeds `cap`.
inline std::optional<double> capped_binomial(long n, long k, double cap) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double value = 1.0;
  for (long t = 1; t <= k; ++t) {
    value = value * static_cast<double>(n - k + t) / static_cast<double>(t);
    if (value > cap) return std::nullopt;
  }
  return std::round(value);
}

inline double binomial(int n, int k) {
  return *capped_binomial(n, k, std::numeric_limits<double>::infinity());
}

class RepSpace;
using RepPtr = std::shared_ptr<const RepSpace>;

/// Finite basis of N-mode Fock states with total quanta j1.
///
/// Ordering is lexicographically decreasing in (n_1, ..., n_N), so basis[0]
/// is the highest-weight state (j1, 0, ..., 0).
class RepSpace {
 public:
  int modes() const { return modes_; }
  int quanta() const { return quanta_; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<OccupationVector>& basis() const { return basis_; }
  const OccupationVector& state(std::size_t idx) const { return basis_.at(idx); }

  std::optional<std::size_t> find(const OccupationVector& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const OccupationVector& n) const {
    auto idx = find(n);
    if (!idx) throw DomainError("occupation vector is not in the representation space");
    return *idx;
  }

  bool operator==(const RepSpace& other) const {
    return modes_ == other.modes_ && quanta_ == other.quanta_;
  }

 private:
  friend RepPtr enumerate_basis(int, int, std::size_t);
  RepSpace(int modes, int quanta) : modes_(modes), quanta_(quanta) {}

  int modes_;
  int quanta_;
  std::vector<OccupationVector> basis_;
  std::map<OccupationVector, std::size_t> index_;
};

namespace detail {

inline void fill_occupations(int mode, int remaining, OccupationVector& current,
                             std::vector<OccupationVector>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (mode == last) {
    current[mode] = remaining;
    out.push_back(current);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    current[mode] = n;
    fill_occupations(mode + 1, remaining - n, current, out);
  }
}

}  // namespace detail

/// All occupation vectors of N modes summing to j1, in canonical order.
inline RepPtr enumerate_basis(int N, int j1, std::size_t max_dim = kDefaultMaxDim) {
  if (N < 2) throw DomainError("su(N) requires N >= 2, got N = " + std::to_string(N));
  if (j1 < 1) throw DomainError("total quanta j1 must be >= 1, got j1 = " + std::to_string(j1));
  const auto count = capped_binomial(static_cast<long>(j1) + N - 1, N - 1,
                                     static_cast<double>(max_dim));
  if (!count) {
    throw ResourceError("dimension of (N=" + std::to_string(N) + ", j1=" + std::to_string(j1) +
                        ") exceeds the cap of " + std::to_string(max_dim));
  }

  auto rep = std::shared_ptr<RepSpace>(new RepSpace(N, j1));
  rep->basis_.reserve(static_cast<std::size_t>(*count));
  OccupationVector current(static_cast<std::size_t>(N), 0);
  detail::fill_occupations(0, j1, current, rep->basis_);
  for (std::size_t k = 0; k < rep->basis_.size(); ++k) rep->index_.emplace(rep->basis_[k], k);
  return rep;
}

/// Dense complex matrix bound to a representation space.
struct Operator {
  RepPtr rep;
  Matrix m;
};

/// Complex amplitude vector over a representation basis.
struct StateVector {
  RepPtr rep;
  Vector amp;

  double norm() const { return amp.norm(); }
};

namespace detail {

inline void require_same_rep(const RepPtr& a, const RepPtr& b) {
  if (!a || !b || !(*a == *b)) throw DomainError("operands belong to different representation spaces");
}

}  // namespace detail

inline Operator operator+(const Operator& a, const Operator& b) {
  detail::require_same_rep(a.rep, b.rep);
  return {a.rep, a.m + b.m};
}

inline Operator operator-(const Operator& a, const Operator& b) {
  detail::require_same_rep(a.rep, b.rep);
  return {a.rep, a.m - b.m};
}

inline Operator operator*(const Operator& a, const Operator& b) {
  detail::require_same_rep(a.rep, b.rep);
  return {a.rep, a.m * b.m};
}

inline Operator operator*(Complex c, const Operator& a) { return {a.rep, c * a.m}; }

inline Operator adjoint(const Operator& a) { return {a.rep, a.m.adjoint()}; }

inline Operator identity(const RepPtr& rep) {
  const auto d = static_cast<Eigen::Index>(rep->dim());
  return {rep, Matrix::Identity(d, d)};
}

/// AB - BA.
inline Operator commutator(const Operator& a, const Operator& b) {
  detail::require_same_rep(a.rep, b.rep);
  return {a.rep, a.m * b.m - b.m * a.m};
}

/// Largest entry modulus; the residual measure used throughout.
inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Operator& a) { return max_abs(a.m); }

inline StateVector basis_state(const RepPtr& rep, std::size_t idx) {
  if (idx >= rep->dim()) throw DomainError("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(rep->dim()));
  v(static_cast<Eigen::Index>(idx)) = 1.0;
  return {rep, std::move(v)};
}

inline StateVector highest_weight(const RepPtr& rep) { return basis_state(rep, 0); }

/// Chevalley generators e_i, f_i, h_i for one simple root.
struct WeylTriple {
  Operator e;
  Operator f;
  Operator h;
};

/// e_i = a_i^+ a_{i+1}^-, f_i = a_i^- a_{i+1}^+, h_i = n_i - n_{i+1}, for 1 <= i <= N-1.
inline WeylTriple weyl_generators(const RepPtr& rep, int i) {
  const int N = rep->modes();
  if (i < 1 || i > N - 1) {
    throw DomainError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(N - 1));
  }
  const auto d = static_cast<Eigen::Index>(rep->dim());
  Matrix e = Matrix::Zero(d, d);
  Matrix h = Matrix::Zero(d, d);
  const std::size_t lo = static_cast<std::size_t>(i - 1);
  const std::size_t hi = lo + 1;
  for (std::size_t col = 0; col < rep->dim(); ++col) {
    const auto& n = rep->state(col);
    h(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = Complex(n[lo] - n[hi]);
    if (n[hi] == 0) continue;
    OccupationVector target = n;
    ++target[lo];
    --target[hi];
    const auto row = rep->index_of(target);
    e(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        std::sqrt(static_cast<double>((n[lo] + 1) * n[hi]));
  }
  Matrix f = e.adjoint();
  return {{rep, std::move(e)}, {rep, std::move(f)}, {rep, std::move(h)}};
}

/// Ladder operators acting nontrivially on the highest-weight state.
struct LadderChain {
  std::vector<Operator> F;  // F[k] is F_{k+2}
  std::vector<Operator> E;  // E[k] = adjoint(F[k])
};

/// F_2 = f_1, F_i = [f_{i-1}, F_{i-1}], E_i = F_i^dagger for i = 2..N.
inline LadderChain ladder_chain(const RepPtr& rep) {
  LadderChain chain;
  const int N = rep->modes();
  chain.F.push_back(weyl_generators(rep, 1).f);
  for (int i = 3; i <= N; ++i) {
    chain.F.push_back(commutator(weyl_generators(rep, i - 1).f, chain.F.back()));
  }
  for (const auto& F : chain.F) chain.E.push_back(adjoint(F));
  return chain;
}

/// Cartan matrix of su(N): 2 on the diagonal, -1 on the first off-diagonals.
inline int cartan_entry(int i, int j) {
  if (i == j) return 2;
  if (std::abs(i - j) == 1) return -1;
  return 0;
}

/// Max entrywise residual per relation family.
struct AlgebraReport {
  int N = 0;
  int j1 = 0;
  std::map<std::string, double> residuals;  // eq1, eq2, eq3, serre_e, serre_f

  double max_residual() const {
    double worst = 0.0;
    for (const auto& [name, r] : residuals) worst = std::max(worst, r);
    return worst;
  }
};

/// Checks the defining relations, Chevalley and Serre, as matrix identities.
/// The generators have at most one entry per column, so products are formed
/// in sparse storage; residuals are the same max-entry norms.
inline AlgebraReport verify_algebra(const RepPtr& rep) {
  using Sparse = Eigen::SparseMatrix<Complex>;
  const int N = rep->modes();
  struct Triple {
    Sparse e, f, h;
  };
  std::vector<Triple> g;
  for (int i = 1; i <= N - 1; ++i) {
    const auto w = weyl_generators(rep, i);
    g.push_back({w.e.m.sparseView(), w.f.m.sparseView(), w.h.m.sparseView()});
  }

  AlgebraReport report{N, rep->quanta(), {{"eq1", 0.0}, {"eq2", 0.0}, {"eq3", 0.0}, {"serre_e", 0.0}, {"serre_f", 0.0}}};
  auto bump = [&](const char* family, const Sparse& m) {
    double r = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
      for (Sparse::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
    report.residuals[family] = std::max(report.residuals[family], r);
  };
  auto comm = [](const Sparse& a, const Sparse& b) -> Sparse { return a * b - b * a; };
  auto serre = [](const Sparse& x, const Sparse& y) -> Sparse {
    const Sparse xx = x * x;
    const Sparse xy = x * y;
    return xx * y - Complex(2.0) * (xy * x) + y * xx;
  };

  for (int i = 0; i < N - 1; ++i) {
    for (int j = 0; j < N - 1; ++j) {
      // [e_i, f_j] = delta_ij h_j
      bump("eq1", i == j ? Sparse(comm(g[i].e, g[j].f) - g[j].h) : comm(g[i].e, g[j].f));
      // [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j
      const Complex a = cartan_entry(i, j);
      bump("eq2", comm(g[i].h, g[j].e) - a * g[j].e);
      bump("eq2", comm(g[i].h, g[j].f) + a * g[j].f);
      // Cartan elements commute among themselves.
      bump("eq2", comm(g[i].h, g[j].h));
      if (std::abs(i - j) > 1) {
        bump("eq3", comm(g[i].e, g[j].e));
        bump("eq3", comm(g[i].f, g[j].f));
      }
      if (std::abs(i - j) == 1) {
        bump("serre_e", serre(g[i].e, g[j].e));
        bump("serre_f", serre(g[i].f, g[j].f));
      }
    }
  }
  return report;
}

inline StateVector apply(const Operator& a, const StateVector& v) {
  detail::require_same_rep(a.rep, v.rep);
  return {v.rep, a.m * v.amp};
}

inline constexpr double kNormTolerance = 1e-10;

inline void require_normalized(const StateVector& v) {
  if (std::abs(v.norm() - 1.0) > kNormTolerance) {
    throw DomainError("state is not normalized (norm = " + std::to_string(v.norm()) + ")");
  }
}

/// <v|A|v> for a normalized state.
inline Complex expectation(const Operator& a, const StateVector& v) {
  detail::require_same_rep(a.rep, v.rep);
  require_normalized(v);
  return v.amp.dot(a.m * v.amp);
}

/// Chain indices (j_1, ..., j_N) with j_s = n_s + ... + n_N, so j_1 is the total.
inline std::vector<int> chain_indices(const OccupationVector& n) {
  std::vector<int> j(n.size(), 0);
  int acc = 0;
  for (std::size_t s = n.size(); s-- > 0;) {
    acc += n[s];
    j[s] = acc;
  }
  return j;
}

/// sqrt(j1! / (n_1! ... n_N!)), built as a product of binomials to stay exact.
inline double sqrt_multinomial(const OccupationVector& n) {
  const auto j = chain_indices(n);
  double value = 1.0;
  for (std::size_t s = 0; s + 1 < j.size(); ++s) value *= binomial(j[s], j[s + 1]);
  return std::sqrt(value);
}

}  // namespace sun
