#include <gtest/gtest.h>

#include "cremona/constraints.hpp"
#include "oracle.hpp"

using namespace cremona;

TEST(KatzTest, Examples) {
  EXPECT_EQ(katz_cd(4, 1, 2, 1), std::make_pair(Rational(3), Rational(2)));
  EXPECT_EQ(katz_cd(9, 1, 6, 4), std::make_pair(Rational(3), Rational(2)));
  EXPECT_EQ(katz_cd(5, 1, 3, 1).second, Rational(5, 3));
  EXPECT_EQ(cd_minus_one(4, 1, 2, 1), Rational(5));
  EXPECT_EQ(cd_minus_one(9, 1, 6, 4), Rational(5));
}

TEST(KatzTest, IdentityAgainstProduct) {
  for (int n = 4; n <= 40; ++n)
    for (int m1 = 2; m1 <= n - 2; ++m1)
      for (int m2 = 1; m2 < m1; ++m2)
        for (long a = 1; a <= 6; ++a) {
          auto [c, d] = katz_cd(n, a, m1, m2);
          ASSERT_EQ(cd_minus_one(n, a, m1, m2), c * d - 1) << n << " " << a << " " << m1 << " " << m2;
        }
}

TEST(KatzTest, IntegralSolutionsAreConsistent) {
  for (int n = 4; n <= 30; ++n)
    for (int m1 = 2; m1 <= n - 2; ++m1)
      for (int m2 = 1; m2 < m1; ++m2)
        for (long a = 1; a <= 4; ++a) {
          auto [c, d] = katz_cd(n, a, m1, m2);
          if (!is_integral(c) || !is_integral(d)) continue;
          const auto r = check_katz_consistency(n, a, c.get_num(), d.get_num(), m1, m2);
          EXPECT_TRUE(r.witness[0].evaluate());
          EXPECT_TRUE(r.witness[1].evaluate());
        }
}

TEST(ConstraintsTest, QuadroCubicPassesEverything) {
  EXPECT_TRUE(check_katz_consistency(4, 1, 3, 2, 2, 1).holds);
  EXPECT_TRUE(check_eh_divisibility(4, 1, 1, 5).holds);
  EXPECT_TRUE(check_estimate(4, 1, 2, 1).holds);
  EXPECT_TRUE(check_congruences(4, 1, 2, 1).holds);
  EXPECT_TRUE(check_hc_gate(4, 1, 1).holds);
  EXPECT_TRUE(check_degree_bound(5, 2, 1, 4, 1).holds);
}

TEST(ConstraintsTest, Rejections) {
  EXPECT_FALSE(check_eh_divisibility(5, 2, 1, 6).holds);
  EXPECT_TRUE(check_eh_divisibility(5, 2, 1, 32).holds);
  const auto big = check_estimate(20, 2, 10, 5);
  EXPECT_FALSE(big.holds);
  EXPECT_FALSE(big.witness[2].evaluate());
  EXPECT_FALSE(check_katz_consistency(4, 1, 2, 2, 2, 1).holds);
  EXPECT_FALSE(check_katz_consistency(4, 1, 2, 3, 2, 1).holds);  // c < d
}

TEST(ConstraintsTest, DegreeBound) {
  EXPECT_TRUE(check_degree_bound(31, 2, 1, 9, 4).holds);
  EXPECT_FALSE(check_degree_bound(32, 2, 1, 9, 4).holds);
  for (long d2 : {49L, 289L, 14161L}) EXPECT_FALSE(check_degree_bound(d2, 2, 1, 9, 4).holds) << d2;
  const auto r = check_degree_bound(7, 3, 2, 6, 3);
  EXPECT_EQ(r.witness[0].rhs, Rational(27, 8));
  EXPECT_FALSE(r.holds);
}

TEST(ConstraintsTest, HcGate) {
  const auto a1 = check_hc_gate(9, 1, 4);
  EXPECT_TRUE(a1.holds);
  EXPECT_TRUE(a1.axiom);
  EXPECT_FALSE(check_hc_gate(9, 2, 4).holds);
  EXPECT_FALSE(check_hc_gate(9, 2, 6).holds);
  EXPECT_TRUE(check_hc_gate(9, 2, 7).holds);
  EXPECT_EQ(check_hc_gate(9, 2, 4).witness[0].label, "3*m2 > 2n");
}

TEST(ConstraintsTest, Congruences) {
  // (9,1,3,2,6,4): 2 = 8 mod 2, -2 = 6 mod 4.
  EXPECT_TRUE(check_congruences(9, 1, 6, 4).holds);
  EXPECT_FALSE(check_congruences(9, 1, 5, 4).holds);
}

TEST(ConstraintsTest, ComparisonText) {
  ConstraintResult r("x");
  r.compare("m", Relation::CongruentMod, 7, 1, 3);
  EXPECT_EQ(r.witness[0].str(), "m: 7 =~ 1 (mod 3)");
  EXPECT_TRUE(r.holds);
  r.compare("d", Relation::Divides, Rational(1, 2), 1);
  EXPECT_FALSE(r.holds);
}

TEST(ConstraintsTest, ReverifyMatchesHolds) {
  oracle::Gen gen(3);
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = gen.uniform(4, 40);
    const int m1 = gen.uniform(2, n - 2);
    const int m2 = gen.uniform(1, m1 - 1);
    const long a = gen.uniform(1, 5);
    const long c = gen.uniform(1, 30), d = gen.uniform(1, 30);
    for (const auto& r : {check_estimate(n, a, m1, m2), check_congruences(n, a, m1, m2),
                          check_katz_consistency(n, a, c, d, m1, m2), check_hc_gate(n, a, m2),
                          check_eh_divisibility(n, a, m2, Integer(c * d - 1)),
                          check_degree_bound(Integer(gen.uniform(2, 100)), d, a, n, m2)}) {
      ASSERT_EQ(r.holds, r.reverify()) << r.id;
      ASSERT_FALSE(r.witness.empty());
    }
  }
}
