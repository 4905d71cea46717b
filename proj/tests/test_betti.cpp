#include <gtest/gtest.h>

#include "cremona/betti.hpp"
#include "oracle.hpp"

using namespace cremona;

TEST(BettiSeqTest, Basics) {
  const BettiSeq s({1, 2, 1});
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s[-1], 0);
  EXPECT_EQ(s[3], 0);
  EXPECT_TRUE(s.palindromic());
  EXPECT_TRUE(s.positive());
  EXPECT_FALSE(BettiSeq({1, 2}).palindromic());
  EXPECT_FALSE(BettiSeq({1, 0, 1}).positive());
  EXPECT_EQ(s.str(), "(1,2,1)");
}

TEST(BettiTest, BlowupOfPointAndLine) {
  // P^4 blown up in a line: 1, 2, 3, 2, 1.
  const BettiSeq line({1, 1});
  std::vector<std::int64_t> got;
  for (int k = 0; k <= 4; ++k) got.push_back(blowup_even_betti(line, 4, 1, k));
  EXPECT_EQ(got, (std::vector<std::int64_t>{1, 2, 3, 2, 1}));
  EXPECT_EQ(blowup_even_betti(BettiSeq({1}), 3, 0, 2), 2);
}

TEST(BettiTest, QuadroCubicCenters) {
  // elliptic quintic curve and elliptic scroll: even Betti numbers (1,1) and (1,2,1).
  EXPECT_TRUE(difference_relation(BettiSeq({1, 2, 1}), BettiSeq({1, 1}), 4, 2, 1).holds);
  EXPECT_FALSE(difference_relation(BettiSeq({1, 1, 1}), BettiSeq({1, 1}), 4, 2, 1).holds);
}

TEST(BettiTest, BarthLarsen) {
  EXPECT_TRUE(barth_larsen_forced(9, 6, 1));
  EXPECT_FALSE(barth_larsen_forced(9, 6, 2));
  EXPECT_FALSE(barth_larsen_forced(9, 4, 0));
  EXPECT_THROW(barth_larsen_forced(9, 8, 0), DomainError);
  EXPECT_THROW(barth_larsen_forced(9, 0, 0), DomainError);
  EXPECT_THROW(barth_larsen_forced(9, 3, -1), DomainError);
}

TEST(BettiTest, Gate) {
  EXPECT_TRUE(check_betti_gate(4, 3));
  EXPECT_FALSE(check_betti_gate(9, 6));
  EXPECT_TRUE(check_betti_gate(9, 7));
}

TEST(BettiTest, CaseTwoDerivation) {
  const Case2Betti r = derive_case2_betti();
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.a, BettiSeq({1, 1, 2, 2, 2, 1, 1}));
  EXPECT_EQ(r.b, BettiSeq({1, 1, 1, 1, 1}));
  EXPECT_TRUE(difference_relation(r.a, r.b, 9, 6, 4).holds);
  EXPECT_TRUE(r.a.palindromic() && r.b.palindromic());
  bool axioms = false;
  for (const auto& s : r.steps) {
    EXPECT_TRUE(s.ok) << s.id;
    axioms = axioms || s.axiom;
  }
  EXPECT_TRUE(axioms);
}

// The difference relation is exactly agreement of the two blow-up formulas.
TEST(BettiTest, DifferenceRelationIffBlowupsAgree) {
  oracle::Gen gen(17);
  for (int iter = 0; iter < 3000; ++iter) {
    const int n = gen.uniform(4, 10);
    const int m1 = gen.uniform(2, n - 2);
    const int m2 = gen.uniform(1, m1 - 1);
    std::vector<std::int64_t> av(m1 + 1), bv(m2 + 1);
    for (auto& x : av) x = gen.uniform(1, 3);
    for (auto& x : bv) x = gen.uniform(1, 3);
    const BettiSeq a(av), b(bv);
    bool same = true;
    for (int k = 0; k <= n; ++k) same = same && blowup_even_betti(a, n, m1, k) == blowup_even_betti(b, n, m2, k);
    ASSERT_EQ(difference_relation(a, b, n, m1, m2).holds, same) << n << " " << m1 << " " << m2 << " " << a.str() << " "
                                                                << b.str();
  }
  EXPECT_TRUE(difference_relation(BettiSeq({1, 2, 1}), BettiSeq({1, 1}), 4, 2, 1).holds);
}
