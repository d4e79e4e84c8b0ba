#include "pfk3/fixed_data.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace pfk3 {
namespace {

using testing::embed;

// Closed forms for K3: k0 = (6 + 2d)/9, k1 = k2 = (6 - d)/9, d = m+ - m-.
std::optional<DiracIndex> closed_form_dirac(long long mp, long long mm) {
  const long long d = mp - mm;
  if ((6 + 2 * d) % 9 != 0 || (6 - d) % 9 != 0) return std::nullopt;
  return DiracIndex{(6 + 2 * d) / 9, (6 - d) / 9, (6 - d) / 9};
}

TEST(NormalizeType, Classes) {
  EXPECT_EQ(normalize_type(1, 2), FixedPointType::plus);
  EXPECT_EQ(normalize_type(2, 1), FixedPointType::plus);
  EXPECT_EQ(normalize_type(2, 2), FixedPointType::minus);
  EXPECT_EQ(normalize_type(1, 1), FixedPointType::minus);
  EXPECT_EQ(normalize_type(4, -1), FixedPointType::plus);
  EXPECT_EQ(normalize_type(-1, 5), FixedPointType::minus);
  EXPECT_THROW(normalize_type(0, 1), Error);
  EXPECT_THROW(normalize_type(1, 3), Error);
}

TEST(NormalizeType, InvariantUnderSwapAndJointNegation) {
  for (long long a = -5; a <= 5; ++a)
    for (long long b = -5; b <= 5; ++b) {
      if (mod3(a) == 0 || mod3(b) == 0) continue;
      const FixedPointType t = normalize_type(a, b);
      EXPECT_EQ(normalize_type(b, a), t);
      EXPECT_EQ(normalize_type(-a, -b), t);
    }
}

TEST(Defects, ExactValues) {
  EXPECT_EQ(signature_defect(FixedPointType::plus), CyclotomicNumber(Rational(1, 3)));
  EXPECT_EQ(signature_defect(FixedPointType::minus), CyclotomicNumber(Rational(-1, 3)));
  EXPECT_EQ(spin_defect(FixedPointType::plus), CyclotomicNumber(Rational(1, 3)));
  EXPECT_EQ(spin_defect(FixedPointType::minus), CyclotomicNumber(Rational(-1, 3)));
}

TEST(Defects, AgreeWithComplexOracle) {
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    EXPECT_LT(std::abs(embed(signature_defect(a, b)) - testing::signature_defect_oracle(a, b)), 1e-9);
    EXPECT_LT(std::abs(embed(spin_defect(a, b)) - testing::spin_defect_oracle(a, b)), 1e-9);
  }
}

TEST(Aggregates, TypeA1) {
  const FixedPointData a1{3, 6};
  EXPECT_EQ(g_signature_sum(a1), CyclotomicNumber(-1));
  EXPECT_EQ(spin_index_sum(a1), CyclotomicNumber(-1));
  EXPECT_EQ(g_signature_of_data(a1), Rational(-1));
}

TEST(Aggregates, GSignatureExamples) {
  EXPECT_EQ(g_signature_of_data({6, 0}), Rational(2));
  EXPECT_EQ(g_signature_of_data({0, 0}), Rational(0));
  EXPECT_EQ(g_signature_of_data({0, 3}), Rational(-1));
}

TEST(AggregatesProperty, SignatureAndSpinSumsAgreeOverGrid) {
  for (long long mp = 0; mp <= 24; ++mp)
    for (long long mm = 0; mp + mm <= 24; ++mm) {
      const FixedPointData d{mp, mm};
      const CyclotomicNumber sig = g_signature_sum(d);
      ASSERT_EQ(sig, CyclotomicNumber(Rational(mp - mm, 3)));
      ASSERT_EQ(sig, spin_index_sum(d));
      ASSERT_EQ(conjugate(sig), sig);
      ASSERT_EQ(g_signature_sum(d, 2), conjugate(sig));
      ASSERT_EQ(spin_index_sum(d, 2), conjugate(spin_index_sum(d, 1)));
    }
}

TEST(Dirac, KnownAndClosedFormValues) {
  EXPECT_EQ(dirac_coefficients({3, 6}), (DiracIndex{0, 1, 1}));
  EXPECT_EQ(dirac_coefficients({6, 0}), (DiracIndex{2, 0, 0}));
  EXPECT_EQ(dirac_coefficients({0, 12}), (DiracIndex{-2, 2, 2}));
  EXPECT_EQ(dirac_coefficients({0, 12}).total(), 2);
}

TEST(Dirac, InconsistentDataThrows) {
  try {
    dirac_coefficients({1, 1});
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no consistent spin lift"), std::string::npos);
  }
}

TEST(DiracProperty, SucceedsExactlyWhenDifferenceIsSixModNine) {
  for (long long mp = 0; mp <= 24; ++mp)
    for (long long mm = 0; mp + mm <= 24; ++mm) {
      const auto expected = closed_form_dirac(mp, mm);
      const bool admissible = ((mp - mm) % 9 + 9) % 9 == 6;
      ASSERT_EQ(expected.has_value(), admissible);
      if (!admissible) {
        ASSERT_THROW(dirac_coefficients({mp, mm}), Error);
        continue;
      }
      const DiracIndex k = dirac_coefficients({mp, mm});
      ASSERT_EQ(k, *expected);
      ASSERT_EQ(k.k1, k.k2);
      // Substitute back into the three character equations.
      const FixedPointData d{mp, mm};
      ASSERT_EQ(k.total(), 2);
      for (int h = 1; h <= 2; ++h) {
        CyclotomicNumber lhs;
        for (int j = 0; j < 3; ++j) lhs += CyclotomicNumber(k[j]) * zeta_power(j * h);
        ASSERT_EQ(lhs, spin_index_sum(d, h));
      }
    }
}

TEST(Dirac, Ind1IsAParameter) {
  // With ind1 = 2 + 3 every k_j shifts by one.
  const DiracIndex k = dirac_coefficients({3, 6}, 5);
  EXPECT_EQ(k, (DiracIndex{1, 2, 2}));
}

TEST(K3FixedData, EnforcesLefschetzBound) {
  EXPECT_NO_THROW(k3_fixed_data(12, 12));
  EXPECT_THROW(k3_fixed_data(13, 12), Error);
  EXPECT_THROW(k3_fixed_data(-1, 0), Error);
}

TEST(ParseFixedPoints, Formats) {
  EXPECT_EQ(parse_fixed_points("(1,2)x3,(1,1)x6"), (FixedPointData{3, 6}));
  EXPECT_EQ(parse_fixed_points("  ( 2 , 1 ) x 3 , (2,2) X6 "), (FixedPointData{3, 6}));
  EXPECT_EQ(parse_fixed_points("(1,2),(1,2),(2,2)"), (FixedPointData{2, 1}));
  EXPECT_EQ(parse_fixed_points(""), (FixedPointData{0, 0}));
  EXPECT_EQ(parse_fixed_points("(4,5)x2"), (FixedPointData{2, 0}));
  EXPECT_EQ(parse_fixed_points("(4,4)x2"), (FixedPointData{0, 2}));
}

TEST(ParseFixedPoints, RejectsMalformedInput) {
  EXPECT_THROW(parse_fixed_points("(1,2"), Error);
  EXPECT_THROW(parse_fixed_points("(1,2)x"), Error);
  EXPECT_THROW(parse_fixed_points("(1,2)x3;"), Error);
  EXPECT_THROW(parse_fixed_points("(1,2)x-1"), Error);
  EXPECT_THROW(parse_fixed_points("(0,1)"), Error);
  EXPECT_THROW(parse_fixed_points("(1,2),"), Error);
}

}  // namespace
}  // namespace pfk3
