#include <gtest/gtest.h>

#include <random>

#include "sun/rep_core.hpp"

using namespace sun;

namespace {

// Independent oracle: ladder operators on the full truncated product space
// (each mode holds 0..cut quanta), built as Kronecker products of single-mode
// annihilators, then projected onto the fixed-sum subspace.
Eigen::MatrixXd annihilator(int cut) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cut + 1, cut + 1);
  for (int n = 1; n <= cut; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c) out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
  return out;
}

Eigen::MatrixXd mode_op(int N, int cut, int k) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cut + 1, cut + 1);
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (int m = 0; m < N; ++m) out = kron(out, m == k ? annihilator(cut) : id);
  return out;
}

// Position of an occupation vector in the product basis (mode 0 most significant).
Eigen::Index product_index(const OccupationVector& n, int cut) {
  Eigen::Index idx = 0;
  for (int x : n) idx = idx * (cut + 1) + x;
  return idx;
}

Eigen::MatrixXd restrict_to(const RepPtr& rep, const Eigen::MatrixXd& big) {
  const auto d = static_cast<Eigen::Index>(rep->dim());
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      out(r, c) = big(product_index(rep->state(r), rep->quanta()), product_index(rep->state(c), rep->quanta()));
  return out;
}

}  // namespace

TEST(Basis, SmallestRepresentation) {
  auto rep = enumerate_basis(2, 1);
  ASSERT_EQ(rep->dim(), 2u);
  EXPECT_EQ(rep->state(0), (OccupationVector{1, 0}));
  EXPECT_EQ(rep->state(1), (OccupationVector{0, 1}));
}

TEST(Basis, Dimensions) {
  EXPECT_EQ(enumerate_basis(3, 2)->dim(), 6u);
  // Brute force over all 4-tuples with entries 0..5.
  std::size_t count = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c)
        for (int d = 0; d <= 5; ++d) count += (a + b + c + d == 5);
  EXPECT_EQ(enumerate_basis(4, 5)->dim(), count);
  EXPECT_EQ(count, 56u);
  for (int N = 2; N <= 5; ++N)
    for (int j1 = 1; j1 <= 6; ++j1) EXPECT_EQ(enumerate_basis(N, j1)->dim(), static_cast<std::size_t>(binomial(j1 + N - 1, N - 1)));
  for (int j1 = 1; j1 <= 10; ++j1) EXPECT_EQ(enumerate_basis(2, j1)->dim(), static_cast<std::size_t>(j1 + 1));
}

TEST(Basis, OrderingAndIndex) {
  auto rep = enumerate_basis(4, 4);
  EXPECT_EQ(rep->state(0), (OccupationVector{4, 0, 0, 0}));
  for (std::size_t k = 0; k < rep->dim(); ++k) {
    EXPECT_EQ(rep->index_of(rep->state(k)), k);
    int sum = 0;
    for (int x : rep->state(k)) sum += x;
    EXPECT_EQ(sum, 4);
    if (k + 1 < rep->dim()) {
      EXPECT_GT(rep->state(k), rep->state(k + 1));
    }
  }
  EXPECT_THROW(rep->index_of({1, 1, 1, 0}), DomainError);
}

TEST(Basis, Errors) {
  EXPECT_THROW(enumerate_basis(1, 3), DomainError);
  EXPECT_THROW(enumerate_basis(3, 0), DomainError);
  EXPECT_THROW(enumerate_basis(10, 30), ResourceError);
  EXPECT_THROW(enumerate_basis(3, 4, 10), ResourceError);
  EXPECT_NO_THROW(enumerate_basis(3, 4, 15));
}

TEST(Generators, SingleQuantumFixture) {
  auto rep = enumerate_basis(2, 1);
  const auto g = weyl_generators(rep, 1);
  Matrix e(2, 2), f(2, 2), h(2, 2);
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  h << 1, 0, 0, -1;
  EXPECT_EQ(g.e.m, e);
  EXPECT_EQ(g.f.m, f);
  EXPECT_EQ(g.h.m, h);
}

TEST(Generators, TwoQuantaSuperdiagonal) {
  auto rep = enumerate_basis(2, 2);
  const auto g = weyl_generators(rep, 1);
  EXPECT_NEAR(g.e.m(0, 1).real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g.e.m(1, 2).real(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(max_abs(g.e.m) , g.e.m(0, 1).real());
  Matrix e = g.e.m;
  e(0, 1) = e(1, 2) = 0.0;
  EXPECT_EQ(max_abs(e), 0.0);
}

TEST(Generators, MatchProductSpaceOracle) {
  for (auto [N, j1] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    auto rep = enumerate_basis(N, j1);
    for (int i = 1; i < N; ++i) {
      const Eigen::MatrixXd ai = mode_op(N, j1, i - 1);
      const Eigen::MatrixXd aj = mode_op(N, j1, i);
      const Eigen::MatrixXd e = restrict_to(rep, ai.transpose() * aj);
      const Eigen::MatrixXd f = restrict_to(rep, ai * aj.transpose());
      const Eigen::MatrixXd h = restrict_to(rep, ai.transpose() * ai - aj.transpose() * aj);
      const auto g = weyl_generators(rep, i);
      EXPECT_LE((g.e.m - e.cast<Complex>()).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LE((g.f.m - f.cast<Complex>()).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LE((g.h.m - h.cast<Complex>()).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Generators, AdjointAndDiagonal) {
  auto rep = enumerate_basis(4, 4);
  for (int i = 1; i <= 3; ++i) {
    const auto g = weyl_generators(rep, i);
    EXPECT_EQ(g.f.m, g.e.m.adjoint());
    for (std::size_t b = 0; b < rep->dim(); ++b) {
      const auto& n = rep->state(b);
      EXPECT_EQ(g.h.m(b, b), Complex(n[i - 1] - n[i]));
    }
    EXPECT_GE(g.e.m.real().minCoeff(), 0.0);
    EXPECT_EQ(g.e.m.imag().cwiseAbs().maxCoeff(), 0.0);
  }
  EXPECT_THROW(weyl_generators(rep, 0), DomainError);
  EXPECT_THROW(weyl_generators(rep, 4), DomainError);
}

TEST(Commutator, Examples) {
  auto rep = enumerate_basis(3, 3);
  const auto g1 = weyl_generators(rep, 1);
  const auto g2 = weyl_generators(rep, 2);
  EXPECT_LE(max_abs(commutator(g1.e, g1.f) - g1.h), 1e-12);
  EXPECT_EQ(max_abs(commutator(g1.e, g1.e)), 0.0);
  EXPECT_LE(max_abs(commutator(g1.h, g2.e) + g2.e), 1e-12);
  auto other = enumerate_basis(3, 2);
  EXPECT_THROW(commutator(g1.e, weyl_generators(other, 1).e), DomainError);
}

TEST(Algebra, ReportFamiliesAndResiduals) {
  const auto r = verify_algebra(enumerate_basis(2, 2));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.residuals) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"eq1", "eq2", "eq3", "serre_e", "serre_f"}));
  EXPECT_LE(verify_algebra(enumerate_basis(2, 3)).max_residual(), 1e-12);
  EXPECT_LE(verify_algebra(enumerate_basis(4, 6)).max_residual(), 1e-12);
  for (int N = 2; N <= 5; ++N)
    for (int j1 = 1; j1 <= 10; ++j1) EXPECT_LE(verify_algebra(enumerate_basis(N, j1)).max_residual(), 1e-12) << N << "," << j1;
}

TEST(Algebra, CartanEntries) {
  EXPECT_EQ(cartan_entry(1, 1), 2);
  EXPECT_EQ(cartan_entry(1, 2), -1);
  EXPECT_EQ(cartan_entry(2, 1), -1);
  EXPECT_EQ(cartan_entry(0, 2), 0);
}

TEST(Algebra, DenseSerreOracle) {
  // The report uses sparse products; recompute one Serre relation densely.
  auto rep = enumerate_basis(3, 4);
  const auto e1 = weyl_generators(rep, 1).e;
  const auto e2 = weyl_generators(rep, 2).e;
  const Operator s = e1 * e1 * e2 - Complex(2.0) * (e1 * e2 * e1) + e2 * e1 * e1;
  EXPECT_LE(max_abs(s), 1e-12);
  const Operator bad = e1 * e1 * e2 - Complex(1.0) * (e1 * e2 * e1) + e2 * e1 * e1;
  EXPECT_GT(max_abs(bad), 1e-3);
}

TEST(LadderChain, BaseCaseAndTopAction) {
  auto rep2 = enumerate_basis(2, 3);
  const auto c2 = ladder_chain(rep2);
  ASSERT_EQ(c2.F.size(), 1u);
  EXPECT_EQ(c2.F[0].m, weyl_generators(rep2, 1).f.m);

  auto rep3 = enumerate_basis(3, 1);
  const auto c3 = ladder_chain(rep3);
  ASSERT_EQ(c3.F.size(), 2u);
  const auto top = apply(c3.F[1], highest_weight(rep3));
  const auto target = rep3->index_of({0, 0, 1});
  for (std::size_t b = 0; b < rep3->dim(); ++b) {
    if (b == target) EXPECT_GT(std::abs(top.amp(b)), 0.5);
    else EXPECT_EQ(std::abs(top.amp(b)), 0.0);
  }

  for (auto [N, j1] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {5, 2}}) {
    auto rep = enumerate_basis(N, j1);
    const auto c = ladder_chain(rep);
    ASSERT_EQ(c.F.size(), static_cast<std::size_t>(N - 1));
    const auto hw = highest_weight(rep);
    for (std::size_t k = 0; k < c.F.size(); ++k) {
      EXPECT_EQ(apply(c.E[k], hw).amp.norm(), 0.0);
      const auto moved = apply(c.F[k], hw);
      EXPECT_GT(moved.amp.norm(), 0.5);
      EXPECT_EQ(std::abs(moved.amp(0)), 0.0);
      // F_{k+2} = a_1 a_{k+2}^dagger: moves one quantum from mode 1 to mode k+2.
      OccupationVector n(static_cast<std::size_t>(N), 0);
      n[0] = j1 - 1;
      n[k + 1] = 1;
      EXPECT_NEAR(std::abs(moved.amp(rep->index_of(n))), std::sqrt(static_cast<double>(j1)), 1e-12);
    }
  }
}

TEST(Expectation, Examples) {
  auto rep = enumerate_basis(2, 2);
  const auto g = weyl_generators(rep, 1);
  EXPECT_EQ(expectation(g.h, highest_weight(rep)), Complex(2.0));
  EXPECT_EQ(apply(g.e, highest_weight(rep)).amp.norm(), 0.0);
  for (std::size_t b = 0; b < rep->dim(); ++b) EXPECT_EQ(expectation(g.f, basis_state(rep, b)), Complex(0.0));
  StateVector unnormalized{rep, Vector::Ones(3)};
  EXPECT_THROW(expectation(g.h, unnormalized), DomainError);
}

TEST(Combinatorics, SqrtMultinomial) {
  EXPECT_NEAR(sqrt_multinomial({2, 1, 1}), std::sqrt(12.0), 1e-12);
  EXPECT_NEAR(sqrt_multinomial({3, 0}), 1.0, 1e-15);
  EXPECT_EQ(chain_indices({2, 1, 1}), (std::vector<int>{4, 2, 1}));
}
