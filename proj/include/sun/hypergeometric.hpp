#pragma once

// Terminating Gauss hypergeometric series and the closed-form coefficients of
// the intelligent-state recursion.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "sun/rep_core.hpp"

namespace sun {

namespace detail {

inline constexpr double kIntegerTolerance = 1e-12;

/// -k if z is (numerically) the non-positive integer -k.
inline std::optional<int> non_positive_integer(Complex z) {
  if (std::abs(z.imag()) > kIntegerTolerance) return std::nullopt;
  const double r = std::round(z.real());
  if (r > 0.0 || std::abs(z.real() - r) > kIntegerTolerance) return std::nullopt;
  return static_cast<int>(-r);
}

}  // namespace detail

/// 2F1(a, b; c; z) for a or b a non-positive integer, summed exactly to the last term.
/// Non-terminating parameters are refused with UnsupportedRegime.
inline Complex hyp2f1_terminating(Complex a, Complex b, Complex c, Complex z) {
  const auto ka = detail::non_positive_integer(a);
  const auto kb = detail::non_positive_integer(b);
  if (!ka && !kb) {
    throw UnsupportedRegime("2F1 series does not terminate for these parameters; refusing to sum");
  }
  const int terms = std::min(ka.value_or(std::numeric_limits<int>::max()), kb.value_or(std::numeric_limits<int>::max()));
  if (const auto kc = detail::non_positive_integer(c); kc && *kc < terms) {
    throw DomainError("2F1 lower parameter hits a pole before the series terminates");
  }
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int k = 0; k < terms; ++k) {
    const double kk = k;
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
  }
  return sum;
}

/// Gamma(j + 1 + x) Gamma(j + 1 - x) for j a non-negative integer or half-integer.
/// Real x goes through tgamma directly; complex x through the reflection
/// formulas and the rising products down to 1 +- x (or 3/2 +- x).
inline Complex gamma_pair(double j, Complex x) {
  const double two_j = std::round(2.0 * j);
  if (two_j < 0.0 || std::abs(2.0 * j - two_j) > detail::kIntegerTolerance) {
    throw DomainError("gamma_pair expects a non-negative integer or half-integer j");
  }
  Complex value;
  if (std::abs(x.imag()) < detail::kIntegerTolerance) {
    value = std::tgamma(j + 1.0 + x.real()) * std::tgamma(j + 1.0 - x.real());
  } else {
    const double pi = std::numbers::pi;
    const bool half = static_cast<long>(two_j) % 2 == 1;
    // Gamma(1 + x) Gamma(1 - x) = pi x / sin(pi x)
    // Gamma(3/2 + x) Gamma(3/2 - x) = (1/4 - x^2) pi / cos(pi x)
    value = half ? (0.25 - x * x) * pi / std::cos(pi * x) : pi * x / std::sin(pi * x);
    for (double k = half ? 1.5 : 1.0; k <= j + 1e-9; k += 1.0) value *= (k + x) * (k - x);
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DomainError("gamma prefactor sits on a pole");
  }
  return value;
}

/// Sector data for the closed-form coefficient: two_j is the chain length minus
/// one (2j, or 2l on the i >= 2 branch) and running the coefficient position
/// (j_2, or j_{i+1}).
struct RecursionIndex {
  int two_j = 0;
  int running = 0;
};

/// Which of the two hypergeometric solutions at the origin is evaluated.
///   laplace   - (-1)^n G 2F1(2j-n+1, lambda'/2+j+1; 2j+2; 2), the form produced by
///               a Laplace-type integral over [-1, 1]; terminates only when
///               n > 2j or lambda'/2+j+1 is a non-positive integer.
///   companion - G binomial(2j, n) 2F1(-n, lambda'/2-j; -2j; 2), the second solution
///               of the same hypergeometric equation; always terminates for
///               0 <= n <= 2j and equals the generating-function coefficient
///               of (1-eta)^{j-lambda'/2} (1+eta)^{j+lambda'/2}.
/// G = Gamma(lambda'/2+j+1) Gamma(-lambda'/2+j+1) / Gamma(2j+2) in both.
enum class HypergeometricBranch { laplace, companion };

inline Complex hypergeometric_prefactor(int two_j, Complex lambda_prime) {
  double factorial = 1.0;  // Gamma(2j + 2)
  for (int k = 2; k <= two_j + 1; ++k) factorial *= k;
  return gamma_pair(0.5 * two_j, 0.5 * lambda_prime) / factorial;
}

inline Complex hypergeometric_coefficient(RecursionIndex idx, Complex lambda_prime,
                                          HypergeometricBranch branch = HypergeometricBranch::laplace) {
  if (idx.two_j < 0 || idx.running < 0) throw DomainError("recursion indices must be non-negative");
  const double j = 0.5 * idx.two_j;
  const double half_re = 0.5 * lambda_prime.real();
  if (!(-(j + 1.0) < half_re && half_re < j + 1.0)) {
    throw DomainError("Re(lambda'/2) must lie in (-(j+1), j+1)");
  }
  const Complex g = hypergeometric_prefactor(idx.two_j, lambda_prime);
  const int n = idx.running;
  if (branch == HypergeometricBranch::laplace) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign * g *
           hyp2f1_terminating(Complex(idx.two_j - n + 1), 0.5 * lambda_prime + j + 1.0,
                              Complex(idx.two_j + 2), Complex(2.0));
  }
  if (n > idx.two_j) throw DomainError("companion branch needs running index <= 2j");
  return g * binomial(idx.two_j, n) *
         hyp2f1_terminating(Complex(-n), 0.5 * lambda_prime - j, Complex(-idx.two_j), Complex(2.0));
}

}  // namespace sun
