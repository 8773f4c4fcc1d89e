#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "symgb/symgb.hpp"

namespace symgb {
namespace {

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }

std::vector<Polynomial> elementary_gens(std::vector<int> idx, int n) {
  std::vector<Polynomial> out;
  for (int i : idx) out.push_back(elementary(i, n, static_cast<std::size_t>(n)));
  return out;
}

/// Checks the three division-theorem conditions by direct expansion.
::testing::AssertionResult division_contract(const Polynomial& f, const std::vector<Polynomial>& divisors,
                                             const DivisionResult& r) {
  const auto& ord = f.order();
  if (r.quotients.size() != divisors.size()) return ::testing::AssertionFailure() << "quotient count";
  Polynomial sum = r.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const Polynomial prod = r.quotients[i] * divisors[i];
    sum += prod;
    if (!prod.is_zero() && ord.greater(prod.leading_monomial(), f.leading_monomial()))
      return ::testing::AssertionFailure() << "LT(a_i f_i) exceeds LT(f) for i=" << i;
  }
  if (!(sum == f)) return ::testing::AssertionFailure() << "reconstruction differs: " << to_string(sum);
  for (const auto& t : r.remainder.terms())
    for (const auto& d : divisors)
      if (divides(d.leading_monomial(), t.mono))
        return ::testing::AssertionFailure() << "remainder term " << to_string(t.mono) << " divisible";
  return ::testing::AssertionSuccess();
}

TEST(DivideTest, WorkedExample) {
  const auto f = P("x3^2", 3);
  const std::vector<Polynomial> divisors{P("x3+x2+x1", 3), P("x2^2+x1*x2+x1^2", 3)};
  const auto r = divide(f, divisors);
  ASSERT_EQ(r.quotients.size(), 2u);
  EXPECT_EQ(r.quotients[0], P("x3-x2-x1", 3));
  EXPECT_EQ(r.quotients[1], P("1", 3));
  EXPECT_EQ(r.remainder, P("x1*x2", 3));
  EXPECT_TRUE(division_contract(f, divisors, r));
}

TEST(DivideTest, SelfAndNoDivisibility) {
  const auto f = P("x1^2*x2-3*x2+5", 2);
  const auto r = divide(f, {f});
  EXPECT_EQ(r.quotients[0], P("1", 2));
  EXPECT_TRUE(r.remainder.is_zero());

  const auto r2 = divide(P("x1", 2), {P("x2", 2)});
  EXPECT_TRUE(r2.quotients[0].is_zero());
  EXPECT_EQ(r2.remainder, P("x1", 2));
}

TEST(DivideTest, FirstMatchingDivisorWins) {
  // Both divisors' leading terms divide x1*x2; the first one is used.
  const auto r = divide(P("x1*x2", 2), {P("x2", 2), P("x1", 2)});
  EXPECT_EQ(r.quotients[0], P("x1", 2));
  EXPECT_TRUE(r.quotients[1].is_zero());
  const auto s = divide(P("x1*x2", 2), {P("x1", 2), P("x2", 2)});
  EXPECT_EQ(s.quotients[0], P("x2", 2));
  EXPECT_TRUE(s.quotients[1].is_zero());
}

TEST(DivideTest, Errors) {
  EXPECT_THROW(divide(P("x1", 2), {Polynomial(MonomialOrder::lex(2))}), ZeroPolynomialError);
  EXPECT_THROW(divide(P("x1", 2), {P("x1", 3)}), ArityError);
}

TEST(DivideProperty, ContractHolds) {
  oracle::Gen gen(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
    const auto ord = MonomialOrder::lex(n);
    const auto f = gen.nonzero_polynomial(ord, 6, 4);
    std::vector<Polynomial> ds;
    const int m = gen.uniform(1, 4);
    for (int i = 0; i < m; ++i) ds.push_back(gen.nonzero_polynomial(ord, 3, 4));
    ASSERT_TRUE(division_contract(f, ds, divide(f, ds))) << to_string(f);
  }
}

TEST(SPolynomialTest, Examples) {
  const auto f = P("x1^2-x2", 2);
  EXPECT_TRUE(s_polynomial(f, f).is_zero());

  const auto h13 = homogeneous(1, 3, 3), h22 = homogeneous(2, 2, 3);
  EXPECT_EQ(s_polynomial(h13, h22), P("x2^2", 3) * h13 - P("x3", 3) * h22);

  EXPECT_EQ(s_polynomial(P("x2+x1", 2), P("x2-x1", 2)), P("2*x1", 2));
  EXPECT_THROW(s_polynomial(f, Polynomial(MonomialOrder::lex(2))), ZeroPolynomialError);
}

TEST(SPolynomialTest, UsesLeadingCoefficients) {
  // lcm = x1^2*x2; (x2)(2x1^2+1)/2 - (x1)(3x1x2+x1)/3 = x2/2 - x1^2/3
  EXPECT_EQ(s_polynomial(P("2*x1^2+1", 2), P("3*x1*x2+x1", 2)), P("1/2*x2-1/3*x1^2", 2));
}

TEST(BuchbergerTest, Examples) {
  const auto single = buchberger(std::vector<Polynomial>{P("x1", 1)}, MonomialOrder::lex(1));
  EXPECT_EQ(single.elements, std::vector<Polynomial>{P("x1", 1)});

  const auto G = reduce_basis(buchberger(elementary_gens({1, 2, 3}, 3), MonomialOrder::lex(3)));
  EXPECT_TRUE(G.reduced);
  EXPECT_EQ(G.elements, (std::vector<Polynomial>{P("x3+x2+x1", 3), P("x2^2+x1*x2+x1^2", 3), P("x1^3", 3)}));

  const auto f = P("3*x2^2-x1", 2);
  const auto dup = reduced_groebner_basis(std::vector<Polynomial>{f, f}, MonomialOrder::lex(2));
  EXPECT_EQ(dup.elements, std::vector<Polynomial>{make_monic(f)});
}

TEST(BuchbergerTest, ZeroAndUnitIdeals) {
  const auto lex2 = MonomialOrder::lex(2);
  EXPECT_THROW(buchberger(std::vector<Polynomial>{}, lex2), ZeroIdealError);
  EXPECT_THROW(buchberger(std::vector<Polynomial>{Polynomial(lex2)}, lex2), ZeroIdealError);
  const auto G = reduced_groebner_basis(std::vector<Polynomial>{P("x1", 2), P("x1+1", 2)}, lex2);
  EXPECT_EQ(G.elements, std::vector<Polynomial>{P("1", 2)});
  EXPECT_TRUE(G.is_unit_ideal());
}

TEST(BuchbergerTest, ProductCriterionDoesNotChangeResult) {
  oracle::Gen gen(202);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ord = MonomialOrder::lex(static_cast<std::size_t>(gen.uniform(1, 3)));
    std::vector<Polynomial> gens;
    for (int i = gen.uniform(1, 3); i > 0; --i) gens.push_back(gen.nonzero_polynomial(ord, 3, 3, 3));
    BuchbergerStats with, without;
    const auto a = reduced_groebner_basis(gens, ord, {true}, &with);
    const auto b = reduced_groebner_basis(gens, ord, {false}, &without);
    ASSERT_EQ(a, b);
    ASSERT_EQ(without.pairs_skipped, 0u);
  }
}

TEST(ReduceBasisTest, Examples) {
  const auto lex1 = MonomialOrder::lex(1);
  const auto G = reduce_basis(GroebnerBasis{lex1, {P("x1", 1), P("2*x1", 1)}, false});
  EXPECT_EQ(G.elements, std::vector<Polynomial>{P("x1", 1)});

  const auto ek = reduced_groebner_basis(elementary_gens({1, 2}, 4), MonomialOrder::lex(4));
  EXPECT_EQ(ek.elements, (std::vector<Polynomial>{homogeneous(1, 4, 4), homogeneous(2, 3, 4)}));

  const auto e1e3 = reduced_groebner_basis(elementary_gens({1, 3}, 4), MonomialOrder::lex(4));
  const auto second = elementary(1, 3, 4) * elementary(2, 3, 4) - elementary(3, 3, 4);
  EXPECT_EQ(e1e3.elements, (std::vector<Polynomial>{elementary(1, 4, 4), second}));
}

TEST(NormalFormTest, Examples) {
  const auto G = reduced_groebner_basis(elementary_gens({1, 2}, 3), MonomialOrder::lex(3));
  EXPECT_TRUE(normal_form(elementary(2, 3, 3), G).is_zero());
  EXPECT_EQ(normal_form(P("1", 3), G), P("1", 3));

  const GroebnerBasis H{MonomialOrder::lex(3), {homogeneous(1, 3, 3), homogeneous(2, 2, 3)}, true};
  EXPECT_TRUE(normal_form(homogeneous(2, 3, 3), H).is_zero());
  // Not in the ideal: x1^2 is a standard monomial for {x3, x2^2}.
  EXPECT_EQ(normal_form(P("x1^2", 3), H), P("x1^2", 3));
}

TEST(CriterionTest, Examples) {
  const auto lex3 = MonomialOrder::lex(3);
  const std::vector<Polynomial> hs{homogeneous(1, 3, 3), homogeneous(2, 2, 3), homogeneous(3, 1, 3)};
  EXPECT_TRUE(is_groebner_basis(hs, lex3));
  EXPECT_TRUE(is_reduced(hs, lex3));

  const auto lex2 = MonomialOrder::lex(2);
  EXPECT_FALSE(is_reduced(std::vector<Polynomial>{P("x1*x2", 2), P("x1", 2)}, lex2));

  const std::vector<Polynomial> bad{P("x2^2-x1", 2), P("x2*x1", 2)};
  // S = x1*(x2^2 - x1) - x2*(x1*x2) = -x1^2, which no leading term divides.
  EXPECT_EQ(s_polynomial(bad[0], bad[1]), P("-x1^2", 2));
  EXPECT_EQ(divide(s_polynomial(bad[0], bad[1]), bad).remainder, P("-x1^2", 2));
  EXPECT_FALSE(is_groebner_basis(bad, lex2));
  EXPECT_FALSE(is_reduced(bad, lex2));

  EXPECT_FALSE(is_reduced(std::vector<Polynomial>{P("2*x1", 1)}, MonomialOrder::lex(1)));
}

TEST(BuchbergerProperty, SoundnessAndUniqueness) {
  oracle::Gen gen(303);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto ord = trial % 3 == 0 ? MonomialOrder(n, OrderKind::grevlex_descending) : MonomialOrder::lex(n);
    std::vector<Polynomial> gens;
    for (int i = gen.uniform(1, 3); i > 0; --i) gens.push_back(gen.nonzero_polynomial(ord, 3, 3, 3));

    const auto raw = buchberger(gens, ord);
    ASSERT_TRUE(is_groebner_basis(raw.elements, ord));
    for (const auto& g : gens) ASSERT_TRUE(normal_form(g, raw).is_zero());

    const auto reduced = reduce_basis(raw);
    ASSERT_TRUE(is_reduced(reduced.elements, ord));
    for (const auto& g : gens) ASSERT_TRUE(normal_form(g, reduced).is_zero());

    // Membership of every output element via an independent run on the
    // reversed generator list.
    std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
    const auto other = buchberger(reversed, ord);
    for (const auto& g : raw.elements) ASSERT_TRUE(normal_form(g, other).is_zero());
    ASSERT_EQ(reduce_basis(other), reduced);

    const auto f = gen.polynomial(ord, 5, 4);
    const auto nf = normal_form(f, reduced);
    ASSERT_EQ(normal_form(nf, reduced), nf);
    ASSERT_TRUE(normal_form(f - nf, reduced).is_zero());
  }
}

TEST(BuchbergerProperty, PermutationInvariance) {
  oracle::Gen gen(404);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ord = MonomialOrder::lex(3);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(gen.nonzero_polynomial(ord, 2, 2, 3));
    std::vector<std::size_t> perm(gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<GroebnerBasis> first;
    do {
      std::vector<Polynomial> permuted;
      for (auto i : perm) permuted.push_back(gens[i]);
      const auto G = reduced_groebner_basis(permuted, ord);
      if (!first) first = G;
      else ASSERT_EQ(G, *first);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(BuchbergerTest, GrevlexBasisOfElementaryIdeal) {
  const MonomialOrder grevlex(4, OrderKind::grevlex_descending);
  std::vector<Polynomial> gens;
  for (int i = 1; i <= 4; ++i) gens.push_back(elementary(i, 4, grevlex));
  const auto G = reduced_groebner_basis(gens, grevlex);
  EXPECT_TRUE(is_reduced(G.elements, grevlex));
  // Different order, same quotient dimension 4!.
  EXPECT_EQ(staircase_series(G.leading_monomials(), 4), closed_form_series(4));
}

}  // namespace
}  // namespace symgb
