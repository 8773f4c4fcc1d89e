#include <gtest/gtest.h>

#include "symgb/symgb.hpp"

namespace symgb {
namespace {

SignedPair hkn(std::vector<int> A, std::vector<int> B, int k, int n) { return {A, B, Family::hkn, k, n}; }
SignedPair ekn(std::vector<int> A, std::vector<int> B, int k, int n) { return {A, B, Family::ekn, k, n}; }

TEST(CarrierTest, HknSmall) {
  const auto c = enumerate_carrier(Family::hkn, 2, 2);
  const std::vector<SignedPair> expected{hkn({}, {1, 1}, 2, 2), hkn({1}, {1}, 2, 2), hkn({2}, {1}, 2, 2),
                                         hkn({1, 2}, {}, 2, 2)};
  EXPECT_EQ(c, expected);

  const std::vector<SignedPair> one{hkn({}, {1}, 1, 1), hkn({1}, {}, 1, 1)};
  EXPECT_EQ(enumerate_carrier(Family::hkn, 1, 1), one);
}

TEST(CarrierTest, EknSmall) {
  const std::vector<SignedPair> expected{ekn({}, {1}, 1, 2), ekn({}, {2}, 1, 2), ekn({1}, {}, 1, 2),
                                         ekn({2}, {}, 1, 2)};
  EXPECT_EQ(enumerate_carrier(Family::ekn, 1, 2), expected);
}

TEST(CarrierTest, SizesMatchFormula) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n + 1; ++k)
      for (auto f : {Family::hkn, Family::ekn}) {
        const auto c = enumerate_carrier(f, k, n);
        ASSERT_EQ(c.size(), carrier_size_formula(f, k, n)) << to_string(f) << k << "," << n;
        for (const auto& p : c) ASSERT_TRUE(in_carrier(p)) << to_string(p);
      }
}

TEST(CarrierTest, InCarrierRejectsBadShapes) {
  EXPECT_FALSE(in_carrier(hkn({1, 1}, {}, 2, 2)));      // A must be a set
  EXPECT_FALSE(in_carrier(hkn({}, {2, 2}, 2, 2)));      // B over {1..n-k+1} = {1}
  EXPECT_FALSE(in_carrier(hkn({1}, {}, 2, 2)));         // |A| + |B| != k
  EXPECT_FALSE(in_carrier(ekn({1}, {2}, 2, 2)));        // B must lie in {1..n-|A|}
  EXPECT_FALSE(in_carrier(ekn({}, {1, 1}, 2, 2)));      // B must be a set
  EXPECT_TRUE(in_carrier(ekn({1, 1}, {}, 2, 2)));
}

TEST(ApplyFTest, HknExamples) {
  EXPECT_EQ(apply_f(hkn({2}, {1}, 2, 2)), hkn({1, 2}, {}, 2, 2));
  EXPECT_EQ(apply_f(hkn({1}, {1}, 2, 2)), hkn({}, {1, 1}, 2, 2));
  EXPECT_EQ(apply_f(hkn({}, {1, 1}, 2, 2)), hkn({1}, {1}, 2, 2));
}

TEST(ApplyFTest, EknExamples) {
  EXPECT_EQ(apply_f(ekn({}, {1, 2}, 2, 2)), ekn({2}, {1}, 2, 2));
  EXPECT_EQ(apply_f(ekn({2}, {1}, 2, 2)), ekn({}, {1, 2}, 2, 2));
  EXPECT_EQ(apply_f(ekn({1}, {1}, 2, 2)), ekn({1, 1}, {}, 2, 2));
}

TEST(ApplyFTest, RejectsPairsOutsideCarrier) {
  EXPECT_THROW(apply_f(hkn({1, 1}, {}, 2, 2)), std::invalid_argument);
  EXPECT_THROW(apply_f(hkn({}, {}, 0, 2), InvolutionRule::min_anchor), std::domain_error);
}

TEST(CertifyTest, Examples) {
  const auto a = certify_involution(Family::hkn, 2, 2);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.carrier_size, 4u);
  const auto b = certify_involution(Family::ekn, 1, 2);
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.carrier_size, 4u);
  EXPECT_TRUE(certify_involution(Family::hkn, 3, 5).ok());
}

TEST(CertifyTest, LiteralMinRuleLeavesEknCarrier) {
  // The min-anchored move sends (|1,2) to (1|2), but |A| = 1 forces B in {1}.
  EXPECT_EQ(apply_f(ekn({}, {1, 2}, 2, 2), InvolutionRule::min_anchor), ekn({1}, {2}, 2, 2));
  const auto r = certify_involution(Family::ekn, 2, 2, InvolutionRule::min_anchor);
  EXPECT_FALSE(r.carrier_closed);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.witness.empty());
  // The signed weights still cancel: the identity itself is fine.
  EXPECT_TRUE(r.weight_sum_zero);
  EXPECT_TRUE(r.matches_identity_terms);
  // At k = 1 the two rules agree and both are closed.
  EXPECT_TRUE(certify_involution(Family::ekn, 1, 4, InvolutionRule::min_anchor).ok());
}

TEST(CertifyTest, TrivialRangeFlagged) {
  const auto r = certify_involution(Family::hkn, 4, 3);
  EXPECT_TRUE(r.trivial_range);
  EXPECT_EQ(r.carrier_size, 0u);
  EXPECT_TRUE(r.ok());
}

TEST(CertifyProperty, BothFamiliesUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (auto f : {Family::hkn, Family::ekn}) {
        const auto r = certify_involution(f, k, n);
        ASSERT_TRUE(r.ok()) << to_string(f) << " k=" << k << " n=" << n << " " << r.witness;
        ASSERT_GT(r.carrier_size, 0u);
      }
}

TEST(TraceTest, OrbitLines) {
  const auto lines = trace_orbits(Family::hkn, 2, 2, InvolutionRule::min_anchor);
  const std::vector<std::string> expected{"(|1,1) <-> (1|1) weight +x1^2", "(2|1) <-> (1,2|) weight -x1*x2"};
  EXPECT_EQ(lines, expected);
  const auto bad = trace_orbits(Family::ekn, 2, 2, InvolutionRule::min_anchor);
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(bad.front(), "(|1,2) -> (1|2) outside carrier");
}

}  // namespace
}  // namespace symgb
