#include <gtest/gtest.h>

#include "sun/hypergeometric.hpp"
#include "sun/intelligent.hpp"

using namespace sun;

namespace {

Complex pochhammer(Complex a, int n) {
  Complex out = 1.0;
  for (int k = 0; k < n; ++k) out *= a + static_cast<double>(k);
  return out;
}

}  // namespace

TEST(Hyp2F1, ChuVandermonde) {
  // 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
  for (int n = 0; n <= 6; ++n) {
    const Complex b(0.7, -0.2), c(3.3, 0.4);
    EXPECT_NEAR(std::abs(hyp2f1_terminating(-n, b, c, 1.0) - pochhammer(c - b, n) / pochhammer(c, n)), 0.0, 1e-13);
  }
}

TEST(Hyp2F1, TerminatesOnEitherParameter) {
  const Complex z(2.0);
  EXPECT_EQ(hyp2f1_terminating(0.0, 3.5, 2.0, z), Complex(1.0));
  EXPECT_NEAR(std::abs(hyp2f1_terminating(-1.0, 3.5, 2.0, z) - (1.0 - 3.5 / 2.0 * 2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hyp2f1_terminating(3.5, -1.0, 2.0, z) - (1.0 - 3.5 / 2.0 * 2.0)), 0.0, 1e-15);
  EXPECT_THROW(hyp2f1_terminating(0.5, 1.5, 2.0, z), UnsupportedRegime);
  EXPECT_THROW(hyp2f1_terminating(-3.0, 1.5, -1.0, z), DomainError);
  // c = -2j reaches its pole only after the series has ended.
  EXPECT_NO_THROW(hyp2f1_terminating(-2.0, 1.5, -2.0, z));
}

TEST(GammaPair, RealAndComplexBranchesAgree) {
  for (double j : {0.0, 0.5, 1.0, 1.5, 3.0}) {
    for (double x : {-0.8, 0.3, 1.25}) {
      if (std::abs(x) >= j + 1.0) continue;
      const Complex real = gamma_pair(j, x);
      EXPECT_NEAR(real.real(), std::tgamma(j + 1 + x) * std::tgamma(j + 1 - x), 1e-12 * std::abs(real));
      const Complex near = gamma_pair(j, Complex(x, 1e-9));
      EXPECT_NEAR(std::abs(near - real), 0.0, 1e-6 * std::abs(real));
    }
  }
  EXPECT_THROW(gamma_pair(0.3, 0.0), DomainError);
}

TEST(Coefficient, TrivialLaplaceCases) {
  // First parameter 2j - n + 1 = 0: 2F1 = 1, coefficient = (-1)^n G.
  const RecursionIndex idx{2, 3};
  const Complex lp = 0.0;
  EXPECT_NEAR(std::abs(hypergeometric_coefficient(idx, lp) + hypergeometric_prefactor(2, lp)), 0.0, 1e-14);
  // First parameter -1: 1 - 2 b / c with b = lp/2 + j + 1, c = 2j + 2.
  const RecursionIndex idx2{2, 4};
  const double b = 0.5 * 0.0 + 1.0 + 1.0, c = 4.0;
  EXPECT_NEAR(std::abs(hypergeometric_coefficient(idx2, lp) - hypergeometric_prefactor(2, lp) * (1.0 - 2.0 * b / c)), 0.0, 1e-14);
}

TEST(Coefficient, LaplaceFormDoesNotTerminateInsideTheChain) {
  for (int n = 0; n <= 2; ++n) EXPECT_THROW(hypergeometric_coefficient({2, n}, 0.0), UnsupportedRegime);
  EXPECT_THROW(hypergeometric_coefficient({2, 0}, 7.0, HypergeometricBranch::companion), DomainError);
  EXPECT_THROW(hypergeometric_coefficient({2, 3}, 0.0, HypergeometricBranch::companion), DomainError);
}

TEST(Coefficient, CompanionReproducesRecursionRatios) {
  for (int j1 = 1; j1 <= 4; ++j1) {
    auto rep = enumerate_basis(2, j1);
    const auto sols = intelligent_states_recursion(rep, 1, Complex(0.4, 0.3));
    for (const auto& s : sols) {
      const auto& a = s.trace->coefficients;
      const double lp = s.trace->lambda_prime;
      const Complex c0 = hypergeometric_coefficient({j1, 0}, lp, HypergeometricBranch::companion);
      for (int n = 0; n <= j1; ++n) {
        const Complex cn = hypergeometric_coefficient({j1, n}, lp, HypergeometricBranch::companion);
        EXPECT_NEAR(std::abs(cn / c0 - a(n) / a(0)), 0.0, 1e-9) << j1 << " " << lp << " " << n;
      }
    }
  }
}

TEST(Coefficient, CompanionOnLongerChainsOfHigherRank) {
  // Every chain of every pair uses the same recursion, so the closed form
  // applies sector by sector.
  auto rep = enumerate_basis(4, 5);
  for (int i = 1; i <= 3; ++i) {
    const auto secs = recursion_sectors(rep, i, Complex(2.0, -1.0));
    for (const auto& s : intelligent_states_recursion(rep, i, Complex(2.0, -1.0))) {
      const int m = secs[s.trace->sector].m;
      const auto& a = s.trace->coefficients;
      const Complex c0 = hypergeometric_coefficient({m, 0}, s.trace->lambda_prime, HypergeometricBranch::companion);
      for (int n = 0; n <= m; ++n) {
        const Complex cn = hypergeometric_coefficient({m, n}, s.trace->lambda_prime, HypergeometricBranch::companion);
        EXPECT_NEAR(std::abs(cn / c0 - a(n) / a(0)), 0.0, 1e-9);
      }
    }
  }
}
