#pragma once

// Fock-Bargmann representation: states as polynomials in N-1 complex
// variables, algebra elements as first-order holomorphic differential
// operators.
//
// Two coordinate charts are used for the polynomial variables:
//   chain  - zeta_1, ..., zeta_{N-1}; basis state (j1-j2, ..., j_N) maps to the
//            monomial zeta_1^{j_2} ... zeta_{N-1}^{j_N} (exponents non-increasing);
//   affine - w_k = zeta_1 ... zeta_k; the same state maps to
//            w_1^{n_2} ... w_{N-1}^{n_N}.
// The differential operators are polynomial only in the affine chart, so they
// are stored there and polynomials are converted at the boundary.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "sun/rep_core.hpp"

namespace sun {

enum class Chart { chain, affine };

inline std::string to_string(Chart c) { return c == Chart::chain ? "chain" : "affine"; }

using Exponents = std::vector<int>;

inline constexpr double kPruneTolerance = 1e-14;

/// Sparse multivariate polynomial with complex coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int nvars, Chart chart) : nvars_(nvars), chart_(chart) {}

  static Polynomial constant(int nvars, Chart chart, Complex c) {
    Polynomial p(nvars, chart);
    p.add(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static Polynomial variable(int nvars, Chart chart, int k, Complex c = 1.0) {
    Polynomial p(nvars, chart);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(k)) = 1;
    p.add(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  Chart chart() const { return chart_; }
  const std::map<Exponents, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Complex coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Complex(0.0) : it->second;
  }

  int degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
      int total = 0;
      for (int x : e) total += x;
      deg = std::max(deg, total);
    }
    return deg;
  }

  /// Adds c * monomial(e); coefficients falling below the prune threshold are dropped.
  void add(const Exponents& e, Complex c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent vector length mismatch");
    for (int x : e) {
      if (x < 0) throw DomainError("negative exponent");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
  }

  /// Reinterprets the exponent vectors in another chart without converting them.
  Polynomial relabeled(Chart chart) const {
    Polynomial p = *this;
    p.chart_ = chart;
    return p;
  }

  Polynomial& operator+=(const Polynomial& other) {
    require_compatible(other);
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    require_compatible(other);
    for (const auto& [e, c] : other.terms_) add(e, -c);
    return *this;
  }

  Polynomial& operator*=(Complex s) {
    Polynomial out(nvars_, chart_);
    for (const auto& [e, c] : terms_) out.add(e, s * c);
    return *this = std::move(out);
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial out(a.nvars_, a.chart_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add(e, ca * cb);
      }
    }
    return out;
  }

  /// Partial derivative with respect to variable k.
  Polynomial derivative(int k) const {
    Polynomial out(nvars_, chart_);
    const auto idx = static_cast<std::size_t>(k);
    for (const auto& [e, c] : terms_) {
      if (e.at(idx) == 0) continue;
      Exponents lowered = e;
      --lowered[idx];
      out.add(lowered, c * static_cast<double>(e[idx]));
    }
    return out;
  }

  void require_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_ || chart_ != other.chart_) {
      throw DomainError("polynomials live in different variable sets or charts");
    }
  }

 private:
  int nvars_ = 0;
  Chart chart_ = Chart::chain;
  std::map<Exponents, Complex> terms_;
};

/// Largest coefficient modulus of a - b.
inline double max_abs_diff(const Polynomial& a, const Polynomial& b) {
  const Polynomial d = a - b;
  double worst = 0.0;
  for (const auto& [e, c] : d.terms()) worst = std::max(worst, std::abs(c));
  return worst;
}

/// Chain exponents (j_2, ..., j_N) to affine exponents (j_2 - j_3, ..., j_N).
inline Exponents chain_to_affine(const Exponents& j) {
  Exponents n(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const int next = k + 1 < j.size() ? j[k + 1] : 0;
    if (j[k] < next) throw DomainError("chain exponents must be non-increasing");
    n[k] = j[k] - next;
  }
  return n;
}

inline Exponents affine_to_chain(const Exponents& n) {
  Exponents j(n.size());
  int acc = 0;
  for (std::size_t k = n.size(); k-- > 0;) {
    acc += n[k];
    j[k] = acc;
  }
  return j;
}

inline Polynomial to_chart(const Polynomial& p, Chart chart) {
  if (p.chart() == chart) return p;
  Polynomial out(p.nvars(), chart);
  for (const auto& [e, c] : p.terms()) {
    out.add(chart == Chart::affine ? chain_to_affine(e) : affine_to_chain(e), c);
  }
  return out;
}

/// Monomial exponents of a basis state in the given chart.
inline Exponents basis_exponents(const OccupationVector& n, Chart chart) {
  Exponents affine(n.begin() + 1, n.end());
  return chart == Chart::affine ? affine : affine_to_chain(affine);
}

/// Basis state (j1-j2, ..., j_N) -> sqrt(prod_s binomial(j_s, j_{s+1})) * monomial.
inline Polynomial state_to_polynomial(const StateVector& v, Chart chart = Chart::chain) {
  const auto& rep = *v.rep;
  Polynomial p(rep.modes() - 1, chart);
  for (std::size_t b = 0; b < rep.dim(); ++b) {
    const Complex a = v.amp(static_cast<Eigen::Index>(b));
    if (a == Complex(0.0)) continue;
    p.add(basis_exponents(rep.state(b), chart), sqrt_multinomial(rep.state(b)) * a);
  }
  return p;
}

/// Exact inverse of state_to_polynomial. Throws if a monomial is not the image
/// of a basis state (chain exponents not non-increasing, or degree above j1).
inline StateVector polynomial_to_state(const RepPtr& rep, const Polynomial& p) {
  if (p.nvars() != rep->modes() - 1) throw DomainError("polynomial variable count does not match N - 1");
  Vector amp = Vector::Zero(static_cast<Eigen::Index>(rep->dim()));
  for (const auto& [e, c] : p.terms()) {
    const Exponents affine = p.chart() == Chart::affine ? e : chain_to_affine(e);
    int total = 0;
    for (int x : affine) total += x;
    if (total > rep->quanta()) throw DomainError("monomial degree exceeds j1");
    OccupationVector n;
    n.push_back(rep->quanta() - total);
    n.insert(n.end(), affine.begin(), affine.end());
    const auto idx = rep->index_of(n);
    amp(static_cast<Eigen::Index>(idx)) = c / sqrt_multinomial(n);
  }
  return {rep, std::move(amp)};
}

/// First-order differential operator c(w) + sum_k d_k(w) d/dw_k, affine chart.
struct DiffOp {
  Polynomial constant;
  std::vector<Polynomial> coeffs;

  int nvars() const { return constant.nvars(); }

  static DiffOp zero(int nvars) {
    return {Polynomial(nvars, Chart::affine),
            std::vector<Polynomial>(static_cast<std::size_t>(nvars), Polynomial(nvars, Chart::affine))};
  }

  int max_coefficient_degree() const {
    int deg = constant.degree();
    for (const auto& d : coeffs) deg = std::max(deg, d.degree());
    return deg;
  }

  DiffOp& operator+=(const DiffOp& o) {
    constant += o.constant;
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs.at(k);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    constant -= o.constant;
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs.at(k);
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(Complex s, DiffOp a) {
    a.constant *= s;
    for (auto& d : a.coeffs) d *= s;
    return a;
  }
};

/// Applies D to p; the result is returned in p's chart.
inline Polynomial apply_diffop(const DiffOp& D, const Polynomial& p) {
  if (D.nvars() != p.nvars()) throw DomainError("operator and polynomial variable counts differ");
  const Polynomial q = to_chart(p, Chart::affine);
  Polynomial out = D.constant * q;
  for (std::size_t k = 0; k < D.coeffs.size(); ++k) {
    if (D.coeffs[k].empty()) continue;
    out += D.coeffs[k] * q.derivative(static_cast<int>(k));
  }
  return to_chart(out, p.chart());
}

/// [A, B] as a first-order operator:
/// constant = sum_k (a_k d_k b0 - b_k d_k a0), coefficient m = sum_k (a_k d_k b_m - b_k d_k a_m).
inline DiffOp commutator(const DiffOp& A, const DiffOp& B) {
  const int nv = A.nvars();
  DiffOp out = DiffOp::zero(nv);
  for (int k = 0; k < nv; ++k) {
    const auto& ak = A.coeffs[static_cast<std::size_t>(k)];
    const auto& bk = B.coeffs[static_cast<std::size_t>(k)];
    out.constant += ak * B.constant.derivative(k) - bk * A.constant.derivative(k);
    for (int m = 0; m < nv; ++m) {
      out.coeffs[static_cast<std::size_t>(m)] +=
          ak * B.coeffs[static_cast<std::size_t>(m)].derivative(k) -
          bk * A.coeffs[static_cast<std::size_t>(m)].derivative(k);
    }
  }
  return out;
}

/// Identifies e_i, f_i, h_i (1 <= i <= N-1) or E_i, F_i (2 <= i <= N).
struct GeneratorId {
  enum class Kind { e, f, h, E, F };
  Kind kind = Kind::e;
  int index = 1;

  std::string str() const {
    static const char* names[] = {"e", "f", "h", "E", "F"};
    return names[static_cast<int>(kind)] + std::to_string(index);
  }

  static GeneratorId parse(const std::string& text) {
    if (text.size() < 2) throw DomainError("unknown generator id '" + text + "'");
    GeneratorId g;
    switch (text[0]) {
      case 'e': g.kind = Kind::e; break;
      case 'f': g.kind = Kind::f; break;
      case 'h': g.kind = Kind::h; break;
      case 'E': g.kind = Kind::E; break;
      case 'F': g.kind = Kind::F; break;
      default: throw DomainError("unknown generator id '" + text + "'");
    }
    const std::string digits = text.substr(1);
    if (digits.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("unknown generator id '" + text + "'");
    }
    g.index = std::stoi(digits);
    return g;
  }
};

/// All generator ids of su(N).
inline std::vector<GeneratorId> all_generators(int N) {
  std::vector<GeneratorId> out;
  for (int i = 1; i <= N - 1; ++i) {
    out.push_back({GeneratorId::Kind::e, i});
    out.push_back({GeneratorId::Kind::f, i});
    out.push_back({GeneratorId::Kind::h, i});
  }
  for (int i = 2; i <= N; ++i) {
    out.push_back({GeneratorId::Kind::E, i});
    out.push_back({GeneratorId::Kind::F, i});
  }
  return out;
}

/// Orientation of the realization of e_i, f_i for i >= 2 (variables 1-based):
///   forward  - e_i = w_{i-1} d/dw_i,  f_i = w_i d/dw_{i-1};
///   reversed - e_i = w_i d/dw_{i-1},  f_i = w_{i-1} d/dw_i.
/// h_i = w_{i-1} d/dw_{i-1} - w_i d/dw_i in both. Only forward matches the
/// matrix representation; reversed is kept so the check can report it.
enum class Orientation { forward, reversed };

inline std::string to_string(Orientation o) { return o == Orientation::forward ? "forward" : "reversed"; }

namespace detail {

inline DiffOp euler_operator(int nv, int k, Complex c) {
  DiffOp D = DiffOp::zero(nv);
  D.coeffs[static_cast<std::size_t>(k)] = Polynomial::variable(nv, Chart::affine, k, c);
  return D;
}

/// x_a d/dx_b (0-based variables).
inline DiffOp transfer_operator(int nv, int a, int b) {
  DiffOp D = DiffOp::zero(nv);
  D.coeffs[static_cast<std::size_t>(b)] = Polynomial::variable(nv, Chart::affine, a);
  return D;
}

inline DiffOp derivative_operator(int nv, int k) {
  DiffOp D = DiffOp::zero(nv);
  D.coeffs[static_cast<std::size_t>(k)] = Polynomial::constant(nv, Chart::affine, 1.0);
  return D;
}

/// j1 w_k - w_k^2 d_k - w_k sum_{m != k} w_m d_m.
inline DiffOp creation_from_top(int nv, int j1, int k) {
  DiffOp D = DiffOp::zero(nv);
  D.constant = Polynomial::variable(nv, Chart::affine, k, static_cast<double>(j1));
  const Polynomial wk = Polynomial::variable(nv, Chart::affine, k);
  for (int m = 0; m < nv; ++m) {
    D.coeffs[static_cast<std::size_t>(m)] = Complex(-1.0) * (wk * Polynomial::variable(nv, Chart::affine, m));
  }
  return D;
}

}  // namespace detail

/// Differential operator realizing a generator on the affine-chart polynomials.
///
///   e_1 = d_1, f_1 = j1 w_1 - w_1^2 d_1 - w_1 sum_{k>=2} w_k d_k,
///   h_1 = j1 - 2 w_1 d_1 - sum_{k>=2} w_k d_k,
///   E_{i+1} = d_i, F_{i+1} = j1 w_i - w_i^2 d_i - w_i sum_{k!=i} w_k d_k,
/// and e_i, f_i, h_i for i >= 2 as documented on Orientation.
inline DiffOp diff_realization(int N, int j1, GeneratorId gen, Orientation orientation = Orientation::forward) {
  if (N < 2) throw DomainError("su(N) requires N >= 2");
  const int nv = N - 1;
  using K = GeneratorId::Kind;
  const bool simple = gen.kind == K::e || gen.kind == K::f || gen.kind == K::h;
  if (simple && (gen.index < 1 || gen.index > N - 1)) throw DomainError("unknown generator id " + gen.str());
  if (!simple && (gen.index < 2 || gen.index > N)) throw DomainError("unknown generator id " + gen.str());

  if (gen.kind == K::E) return detail::derivative_operator(nv, gen.index - 2);
  if (gen.kind == K::F) return detail::creation_from_top(nv, j1, gen.index - 2);

  const int i = gen.index;
  if (i == 1) {
    switch (gen.kind) {
      case K::e: return detail::derivative_operator(nv, 0);
      case K::f: return detail::creation_from_top(nv, j1, 0);
      default: {
        DiffOp D = DiffOp::zero(nv);
        D.constant = Polynomial::constant(nv, Chart::affine, static_cast<double>(j1));
        D += detail::euler_operator(nv, 0, -2.0);
        for (int k = 1; k < nv; ++k) D += detail::euler_operator(nv, k, -1.0);
        return D;
      }
    }
  }
  // 0-based: lower variable i-2, upper variable i-1.
  const int lower = i - 2;
  const int upper = i - 1;
  const bool fwd = orientation == Orientation::forward;
  switch (gen.kind) {
    case K::e: return fwd ? detail::transfer_operator(nv, lower, upper) : detail::transfer_operator(nv, upper, lower);
    case K::f: return fwd ? detail::transfer_operator(nv, upper, lower) : detail::transfer_operator(nv, lower, upper);
    default: return detail::euler_operator(nv, lower, 1.0) - detail::euler_operator(nv, upper, 1.0);
  }
}

/// Matrix of a generator from the bosonic realization.
inline Operator generator_matrix(const RepPtr& rep, GeneratorId gen) {
  using K = GeneratorId::Kind;
  if (gen.kind == K::E || gen.kind == K::F) {
    if (gen.index < 2 || gen.index > rep->modes()) throw DomainError("unknown generator id " + gen.str());
    const auto chain = ladder_chain(rep);
    const auto k = static_cast<std::size_t>(gen.index - 2);
    return gen.kind == K::E ? chain.E[k] : chain.F[k];
  }
  const auto g = weyl_generators(rep, gen.index);
  return gen.kind == K::e ? g.e : gen.kind == K::f ? g.f : g.h;
}

struct ExactnessReport {
  int N = 0;
  int j1 = 0;
  Orientation orientation = Orientation::forward;
  double transport_deviation = 0.0;                          // selected orientation, affine chart
  std::map<std::string, double> orientation_deviation;       // e_i, f_i (i >= 2) per candidate
  double chain_chart_deviation = 0.0;                        // same operators read in chain exponents
  std::map<std::string, double> per_generator;               // selected orientation
  std::map<std::string, double> algebra_residuals;           // relations applied to every basis monomial
  std::map<std::string, double> symbolic_residuals;          // eq1-eq3 via symbolic commutators
  double h1_on_constant = 0.0;                               // |h_1 1 - j1|

  bool passed(double tol) const {
    if (transport_deviation > tol) return false;
    for (const auto& [k, r] : algebra_residuals) if (r > tol) return false;
    for (const auto& [k, r] : symbolic_residuals) if (r > tol) return false;
    return h1_on_constant <= tol;
  }
};

namespace detail {

/// Applies a product of operators (rightmost first) to p.
inline Polynomial apply_word(const std::vector<const DiffOp*>& word, Polynomial p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = apply_diffop(**it, p);
  return p;
}

inline double diffop_max_coefficient(const DiffOp& D) {
  double worst = 0.0;
  for (const auto& [e, c] : D.constant.terms()) worst = std::max(worst, std::abs(c));
  for (const auto& d : D.coeffs)
    for (const auto& [e, c] : d.terms()) worst = std::max(worst, std::abs(c));
  return worst;
}

}  // namespace detail

/// Compares matrix action and differential action through the Bargmann map for
/// every generator and basis state, selects the orientation of e_i, f_i (i >= 2)
/// that agrees with the matrices, and checks the algebra relations on the
/// operator level.
inline ExactnessReport exactness_check(const RepPtr& rep) {
  const int N = rep->modes();
  const int j1 = rep->quanta();
  ExactnessReport report;
  report.N = N;
  report.j1 = j1;

  auto transport = [&](GeneratorId g, Orientation o, Chart chart) {
    const Operator M = generator_matrix(rep, g);
    const DiffOp D = diff_realization(N, j1, g, o);
    double worst = 0.0;
    for (std::size_t b = 0; b < rep->dim(); ++b) {
      const auto v = basis_state(rep, b);
      const Polynomial lhs = state_to_polynomial(apply(M, v), chart);
      // In the chain chart the operator is applied to the raw exponent vectors,
      // i.e. as if the chain labels were the operator's variables.
      const Polynomial src = state_to_polynomial(v, chart).relabeled(Chart::affine);
      const Polynomial rhs = apply_diffop(D, src).relabeled(chart);
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return worst;
  };

  double fwd = 0.0, rev = 0.0;
  for (int i = 2; i <= N - 1; ++i) {
    for (auto kind : {GeneratorId::Kind::e, GeneratorId::Kind::f}) {
      const GeneratorId g{kind, i};
      const double df = transport(g, Orientation::forward, Chart::affine);
      const double dr = transport(g, Orientation::reversed, Chart::affine);
      report.orientation_deviation["forward:" + g.str()] = df;
      report.orientation_deviation["reversed:" + g.str()] = dr;
      fwd = std::max(fwd, df);
      rev = std::max(rev, dr);
    }
  }
  report.orientation = rev < fwd ? Orientation::reversed : Orientation::forward;

  for (const auto& g : all_generators(N)) {
    const double dev = transport(g, report.orientation, Chart::affine);
    report.per_generator[g.str()] = dev;
    report.transport_deviation = std::max(report.transport_deviation, dev);
    report.chain_chart_deviation = std::max(report.chain_chart_deviation, transport(g, report.orientation, Chart::chain));
  }

  // Operator-level relations on every basis monomial.
  std::vector<DiffOp> e, f, h;
  for (int i = 1; i <= N - 1; ++i) {
    e.push_back(diff_realization(N, j1, {GeneratorId::Kind::e, i}, report.orientation));
    f.push_back(diff_realization(N, j1, {GeneratorId::Kind::f, i}, report.orientation));
    h.push_back(diff_realization(N, j1, {GeneratorId::Kind::h, i}, report.orientation));
  }
  std::vector<Polynomial> monomials;
  for (const auto& n : rep->basis()) {
    Polynomial p(N - 1, Chart::affine);
    p.add(basis_exponents(n, Chart::affine), 1.0);
    monomials.push_back(std::move(p));
  }
  auto& alg = report.algebra_residuals;
  alg = {{"eq1", 0.0}, {"eq2", 0.0}, {"eq3", 0.0}, {"serre_e", 0.0}, {"serre_f", 0.0}};
  using detail::apply_word;
  auto comm_on = [](const DiffOp& a, const DiffOp& b, const Polynomial& p) {
    return apply_word({&a, &b}, p) - apply_word({&b, &a}, p);
  };
  auto serre_on = [](const DiffOp& x, const DiffOp& y, const Polynomial& p) {
    return apply_word({&x, &x, &y}, p) - Complex(2.0) * apply_word({&x, &y, &x}, p) + apply_word({&y, &x, &x}, p);
  };
  const Polynomial zero(N - 1, Chart::affine);
  for (const auto& p : monomials) {
    for (int i = 0; i < N - 1; ++i) {
      for (int j = 0; j < N - 1; ++j) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        const Polynomial target = i == j ? apply_diffop(h[uj], p) : zero;
        alg["eq1"] = std::max(alg["eq1"], max_abs_diff(comm_on(e[ui], f[uj], p), target));
        const Complex a = cartan_entry(i, j);
        alg["eq2"] = std::max(alg["eq2"], max_abs_diff(comm_on(h[ui], e[uj], p), a * apply_diffop(e[uj], p)));
        alg["eq2"] = std::max(alg["eq2"], max_abs_diff(comm_on(h[ui], f[uj], p), -a * apply_diffop(f[uj], p)));
        if (std::abs(i - j) > 1) {
          alg["eq3"] = std::max(alg["eq3"], max_abs_diff(comm_on(e[ui], e[uj], p), zero));
          alg["eq3"] = std::max(alg["eq3"], max_abs_diff(comm_on(f[ui], f[uj], p), zero));
        }
        if (std::abs(i - j) == 1) {
          alg["serre_e"] = std::max(alg["serre_e"], max_abs_diff(serre_on(e[ui], e[uj], p), zero));
          alg["serre_f"] = std::max(alg["serre_f"], max_abs_diff(serre_on(f[ui], f[uj], p), zero));
        }
      }
    }
  }

  auto& sym = report.symbolic_residuals;
  sym = {{"eq1", 0.0}, {"eq2", 0.0}, {"eq3", 0.0}};
  for (int i = 0; i < N - 1; ++i) {
    for (int j = 0; j < N - 1; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const DiffOp target = i == j ? h[uj] : DiffOp::zero(N - 1);
      sym["eq1"] = std::max(sym["eq1"], detail::diffop_max_coefficient(commutator(e[ui], f[uj]) - target));
      const Complex a = cartan_entry(i, j);
      sym["eq2"] = std::max(sym["eq2"], detail::diffop_max_coefficient(commutator(h[ui], e[uj]) - a * e[uj]));
      sym["eq2"] = std::max(sym["eq2"], detail::diffop_max_coefficient(commutator(h[ui], f[uj]) + a * f[uj]));
      if (std::abs(i - j) > 1) {
        sym["eq3"] = std::max(sym["eq3"], detail::diffop_max_coefficient(commutator(e[ui], e[uj])));
        sym["eq3"] = std::max(sym["eq3"], detail::diffop_max_coefficient(commutator(f[ui], f[uj])));
      }
    }
  }

  const Polynomial one = Polynomial::constant(N - 1, Chart::affine, 1.0);
  report.h1_on_constant = max_abs_diff(apply_diffop(h[0], one), static_cast<double>(j1) * one);
  return report;
}

}  // namespace sun
