#include "pfk3/linalg.hpp"

#include "test_support.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace pfk3 {
namespace {

using testing::Generator;

// Leibniz expansion; only for tiny matrices.
Integer leibniz_determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntMatrix diagonal_of(const SmithForm& s, Eigen::Index rows, Eigen::Index cols) {
  IntMatrix d = IntMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i)
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = s.diagonal[i];
  return d;
}

TEST(Bareiss, SmallExamples) {
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  EXPECT_EQ(bareiss_determinant(h), -1);
  EXPECT_EQ(bareiss_determinant(IntMatrix::Identity(5, 5)), 1);
  IntMatrix singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  EXPECT_EQ(bareiss_determinant(singular), 0);
  EXPECT_EQ(bareiss_determinant(IntMatrix(0, 0)), 1);
}

TEST(Bareiss, MatchesLeibnizExpansion) {
  Generator gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = gen.integer(1, 6);
    IntMatrix m = gen.integer_matrix(n, n, 4);
    if (gen.integer(0, 4) == 0) m.row(0).setZero();  // exercise zero pivots
    ASSERT_EQ(bareiss_determinant(m), leibniz_determinant(m)) << m;
  }
}

// Entries near 2^62 overflow 64-bit intermediates, forcing the GMP path.
IntMatrix huge_matrix(Generator& gen, Eigen::Index n) {
  IntMatrix m = gen.integer_matrix(n, n, 50);
  const Integer big = Integer(1) << 62;
  for (Eigen::Index i = 0; i < n; ++i) m(i, (i + 1) % n) += big * (gen.integer(0, 1) ? 1 : -1);
  return m;
}

TEST(Bareiss, FallsBackToBigIntegersOnOverflow) {
  Generator gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = huge_matrix(gen, gen.integer(2, 5));
    ASSERT_EQ(bareiss_determinant(m), leibniz_determinant(m)) << m;
    // The generic path over Q must agree.
    ASSERT_EQ(Rational(bareiss_determinant(m)), bareiss_determinant(RatMatrix(m.cast<Rational>())));
  }
}

TEST(Multiply, MatchesEigenProductIncludingOverflow) {
  Generator gen(18);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index r = gen.integer(1, 6), k = gen.integer(1, 6), c = gen.integer(1, 6);
    IntMatrix a = gen.integer_matrix(r, k, 3), b = gen.integer_matrix(k, c, 3);
    if (trial % 2) a(0, 0) = Integer(1) << 70;
    const IntMatrix expected = a * b;
    ASSERT_EQ(multiply(a, b), expected);
  }
}

TEST(Smith, KnownInvariantFactors) {
  IntMatrix m(3, 3);
  m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const SmithForm s = smith_form(m);
  EXPECT_EQ(s.rank, 3);
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(IntMatrix(s.left * m * s.right), diagonal_of(s, 3, 3));
}

TEST(SmithProperty, FactorizationIsUnimodularAndDivisible) {
  Generator gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index rows = gen.integer(1, 7), cols = gen.integer(1, 7);
    IntMatrix m = gen.integer_matrix(rows, cols, 6);
    if (trial % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0) * Integer(2);  // force rank loss
    const SmithForm s = smith_form(m);
    ASSERT_EQ(IntMatrix(s.left * m * s.right), diagonal_of(s, rows, cols));
    ASSERT_EQ(abs(bareiss_determinant(s.left)), 1);
    ASSERT_EQ(abs(bareiss_determinant(s.right)), 1);
    for (Eigen::Index i = 0; i < s.rank; ++i) {
      ASSERT_GT(s.diagonal[i], 0);
      if (i + 1 < s.rank) ASSERT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    }
    for (std::size_t i = static_cast<std::size_t>(s.rank); i < s.diagonal.size(); ++i)
      ASSERT_EQ(s.diagonal[i], 0);
  }
}

TEST(SmithProperty, FallsBackToBigIntegersOnOverflow) {
  Generator gen(19);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = gen.integer(2, 5);
    const IntMatrix m = huge_matrix(gen, n);
    const SmithForm s = smith_form(m);
    ASSERT_EQ(IntMatrix(s.left * m * s.right), diagonal_of(s, n, n));
    Integer product = 1;
    for (const Integer& d : s.diagonal) product *= d;
    ASSERT_EQ(product, abs(bareiss_determinant(m)));
    ASSERT_EQ(invariant_factors(m).diagonal, s.diagonal);
  }
}

TEST(InvariantFactors, MatchFullSmithForm) {
  Generator gen(20);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = gen.integer_matrix(gen.integer(1, 6), gen.integer(1, 6), 6);
    const SmithForm full = smith_form(m), bare = invariant_factors(m);
    ASSERT_EQ(bare.diagonal, full.diagonal);
    ASSERT_EQ(bare.rank, full.rank);
    ASSERT_EQ(bare.left.size(), 0);
  }
}

TEST(Kernel, IsSaturated) {
  // x + 2y = 0 has kernel spanned by (2, -1) up to sign, not (4, -2).
  IntMatrix m(1, 2);
  m << 1, 2;
  const IntMatrix k = integer_kernel(m);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_EQ(IntMatrix(m * k), IntMatrix::Zero(1, 1));
  EXPECT_EQ(abs(k(0, 0)), 2);
  EXPECT_EQ(abs(k(1, 0)), 1);
}

TEST(KernelProperty, RankNullity) {
  Generator gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index rows = gen.integer(1, 6), cols = gen.integer(1, 8);
    const IntMatrix m = gen.integer_matrix(rows, cols, 5);
    const IntMatrix k = integer_kernel(m);
    ASSERT_EQ(k.cols() + integer_rank(m), cols);
    ASSERT_TRUE(IntMatrix(m * k).isZero());
    // Saturated: the kernel basis extends to a unimodular matrix, i.e. its
    // maximal minors have gcd 1, equivalently its Smith diagonal is all 1.
    if (k.cols() > 0) {
      const SmithForm s = smith_form(k);
      for (const Integer& d : s.diagonal) ASSERT_EQ(d, 1);
    }
  }
}

TEST(SolveInteger, DetectsNonIntegralSystems) {
  IntMatrix m(2, 2);
  m << 2, 0, 0, 3;
  IntMatrix b(2, 1);
  b << 4, 9;
  const auto x = solve_integer(m, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0, 0), 2);
  EXPECT_EQ((*x)(1, 0), 3);
  b << 1, 3;
  EXPECT_FALSE(solve_integer(m, b));
}

TEST(Inverse, RationalRoundTrip) {
  Generator gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = gen.integer(1, 6);
    const RatMatrix m = gen.integer_matrix(n, n, 5).cast<Rational>();
    const auto inv = exact_inverse(m);
    if (bareiss_determinant(m) == 0) {
      EXPECT_FALSE(inv);
    } else {
      ASSERT_TRUE(inv);
      EXPECT_EQ(RatMatrix(m * *inv), RatMatrix::Identity(n, n));
    }
  }
}

TEST(Inertia, Examples) {
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  EXPECT_EQ(inertia(h), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(IntMatrix(-IntMatrix::Identity(4, 4))), (Inertia{0, 4, 0}));
  EXPECT_EQ(inertia(IntMatrix::Zero(3, 3)), (Inertia{0, 0, 3}));
  IntMatrix degenerate(3, 3);
  degenerate << 1, 1, 0, 1, 1, 0, 0, 0, -2;
  EXPECT_EQ(inertia(degenerate), (Inertia{1, 1, 1}));
}

TEST(InertiaProperty, MatchesFloatingEigenvalues) {
  Generator gen(15);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = gen.integer(1, 8);
    IntMatrix m = gen.symmetric_matrix(n, 3);
    if (trial % 4 == 0) m.diagonal().setZero();  // exercise the zero-diagonal pivot
    Eigen::MatrixXd md(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) md(i, j) = m(i, j).convert_to<double>();
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(md).eigenvalues();
    if ((eig.array().abs() < 1e-6).any() && bareiss_determinant(m) != 0) continue;
    Inertia expected;
    for (double e : eig) {
      if (std::abs(e) < 1e-6)
        ++expected.null;
      else
        ++(e > 0 ? expected.positive : expected.negative);
    }
    ASSERT_EQ(inertia(m), expected) << m;
    ++compared;
  }
  EXPECT_GT(compared, 150);
}

TEST(InertiaProperty, LargeEntriesUseExactFallback) {
  // diag(2^40, -2^40, 1) conjugated by a unimodular matrix; the Schur
  // complements overflow 64 bits.
  Generator gen(21);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix d = IntMatrix::Zero(3, 3);
    d(0, 0) = Integer(1) << 40;
    d(1, 1) = -(Integer(1) << 40);
    d(2, 2) = 1;
    const IntMatrix u = gen.unimodular(3, 12);
    ASSERT_EQ(inertia(IntMatrix(u.transpose() * d * u)), (Inertia{2, 1, 0}));
  }
}

TEST(InertiaProperty, SylvesterInvarianceUnderRationalCongruence) {
  Generator gen(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = gen.integer(1, 7);
    const IntMatrix m = gen.symmetric_matrix(n, 4);
    RatMatrix p(n, n);
    do {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) p(i, j) = gen.rational(5);
    } while (!exact_inverse(p));
    const RatMatrix congruent = p.transpose() * m.cast<Rational>() * p;
    const Inertia s = inertia(m);
    ASSERT_EQ(inertia(congruent), s);
    ASSERT_EQ(s.positive + s.negative + s.null, n);
  }
}

}  // namespace
}  // namespace pfk3
