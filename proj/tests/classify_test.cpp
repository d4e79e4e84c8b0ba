#include "pfk3/classify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

namespace pfk3 {
namespace {

using Row = std::tuple<long long, long long, long long, long long, long long, long long, long long>;

Row row_fields(const ActionType& t) {
  return {t.fixed_count, t.m_plus, t.m_minus, t.b2_G, t.bplus_G, t.bminus_G, t.sign_quotient};
}

// Independent integer-only brute force: 3 chi(X/G) = 24 + 2(m+ + m-),
// 9 Sign(X/G) = -48 + 2(m+ - m-), b2^G = chi - 2, b+^G odd in [1, 3].
std::set<std::pair<long long, long long>> brute_force_pairs() {
  std::set<std::pair<long long, long long>> out;
  for (long long mp = 0; mp <= 24; ++mp)
    for (long long mm = 0; mm <= 24; ++mm) {
      if (mp + mm > 24) continue;
      const long long chi3 = 24 + 2 * (mp + mm);
      const long long sign9 = -48 + 2 * (mp - mm);
      if (chi3 % 3 != 0 || sign9 % 9 != 0) continue;
      const long long b2 = chi3 / 3 - 2;
      const long long sign = sign9 / 9;
      if ((b2 + sign) % 2 != 0) continue;
      const long long bp = (b2 + sign) / 2, bm = (b2 - sign) / 2;
      if (bp < 0 || bm < 0 || bp > 3 || bm > 19 || (3 - bp) % 2 != 0) continue;
      out.insert({mp, mm});
    }
  return out;
}

TEST(QuotientInvariants, Examples) {
  const auto a1 = quotient_invariants({3, 6});
  EXPECT_EQ(a1.euler, Rational(14));
  EXPECT_EQ(a1.signature, Rational(-6));
  const auto b = quotient_invariants({0, 3});
  EXPECT_EQ(b.euler, Rational(10));
  EXPECT_EQ(b.signature, Rational(-6));
  const auto empty = quotient_invariants({0, 0});
  EXPECT_EQ(empty.euler, Rational(8));
  EXPECT_EQ(empty.signature, Rational(-16, 3));
}

TEST(AdmissibleDifferences, ExactSet) {
  EXPECT_EQ(admissible_differences(), (std::vector<long long>{-21, -12, -3, 6, 15, 24}));
  EXPECT_TRUE(is_admissible_difference(-3));
  EXPECT_FALSE(is_admissible_difference(0));
  EXPECT_FALSE(is_admissible_difference(33));
}

TEST(EnumerateActionTypes, ReproducesTheClassificationTable) {
  const auto rows = enumerate_action_types();
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].name, "A0");
  EXPECT_EQ(rows[1].name, "A1");
  EXPECT_EQ(rows[2].name, "A2");
  EXPECT_EQ(rows[3].name, "B");
  EXPECT_EQ(row_fields(rows[0]), (Row{6, 6, 0, 10, 3, 7, -4}));
  EXPECT_EQ(row_fields(rows[1]), (Row{9, 3, 6, 12, 3, 9, -6}));
  EXPECT_EQ(row_fields(rows[2]), (Row{12, 0, 12, 14, 3, 11, -8}));
  EXPECT_EQ(row_fields(rows[3]), (Row{3, 0, 3, 8, 1, 7, -6}));
}

TEST(EnumerateActionTypes, RowsSatisfyDefiningEquations) {
  for (const ActionType& t : enumerate_action_types()) {
    EXPECT_EQ(t.fixed_count, t.m_plus + t.m_minus);
    EXPECT_EQ(t.b2_G, t.bplus_G + t.bminus_G);
    EXPECT_EQ(t.euler_quotient, 2 + t.b2_G);
    EXPECT_EQ(t.sign_quotient, t.bplus_G - t.bminus_G);
    EXPECT_TRUE(t.bplus_G == 1 || t.bplus_G == 3);
    EXPECT_EQ(2 * t.m_plus + t.m_minus, t.bplus_G == 1 ? 3 : 12);
    EXPECT_TRUE(is_admissible_difference(t.m_plus - t.m_minus));
    const auto q = quotient_invariants(t.data());
    EXPECT_EQ(q.euler, Rational(t.euler_quotient));
    EXPECT_EQ(q.signature, Rational(t.sign_quotient));
    EXPECT_NO_THROW(dirac_coefficients(t.data()));
  }
}

TEST(EnumerateActionTypes, CaseEquationAloneIsNotEnough) {
  // 2m+ + m- = 3 but m+ - m- = 0 is not 6 mod 9.
  EXPECT_FALSE(admissible_row({1, 1}).has_value());
}

TEST(EnumerateActionTypes, ExhaustiveAgainstBruteForce) {
  std::set<std::pair<long long, long long>> emitted;
  for (const ActionType& t : enumerate_action_types()) emitted.insert({t.m_plus, t.m_minus});
  EXPECT_EQ(emitted, brute_force_pairs());
}

TEST(ActionTypeLookup, ByName) {
  EXPECT_EQ(action_type("A1").m_minus, 6);
  EXPECT_THROW(action_type("C"), Error);
}

}  // namespace
}  // namespace pfk3
