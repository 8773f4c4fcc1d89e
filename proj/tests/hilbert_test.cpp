#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symgb/symgb.hpp"

namespace symgb {
namespace {

Monomial X(std::size_t n, std::size_t i, unsigned e = 1) { return Monomial::variable(n, i, e); }

std::vector<Monomial> box_staircase(int n) {
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i)
    out.push_back(X(static_cast<std::size_t>(n), static_cast<std::size_t>(n - i + 1), static_cast<unsigned>(i)));
  return out;
}

TEST(StaircaseTest, Examples) {
  EXPECT_EQ(staircase_series({X(1, 1)}, 1).coeffs, std::vector<std::uint64_t>{1});
  EXPECT_EQ(staircase_series({X(3, 3), X(3, 2, 2), X(3, 1, 3)}, 3).coeffs, (std::vector<std::uint64_t>{1, 2, 2, 1}));
  EXPECT_EQ(staircase_series(box_staircase(4), 4).total(), 24u);
}

TEST(StaircaseTest, NonBoxStaircase) {
  // <x1^2, x1*x2, x2^3>: standard monomials 1, x1, x2, x2^2.
  const auto s = staircase_series({X(2, 1, 2), X(2, 1) * X(2, 2), X(2, 2, 3)}, 2);
  EXPECT_EQ(s.coeffs, (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(standard_monomials({X(2, 1, 2), X(2, 1) * X(2, 2), X(2, 2, 3)}, 2).size(), 4u);
}

TEST(StaircaseTest, Errors) {
  try {
    (void)staircase_series({X(2, 1)}, 2);
    FAIL() << "expected NotArtinianError";
  } catch (const NotArtinianError& e) {
    EXPECT_EQ(e.variable(), 1u);
  }
  EXPECT_THROW((void)staircase_series({X(2, 1)}, 3), ArityError);
  // Unit ideal: nothing survives.
  EXPECT_TRUE(staircase_series({Monomial(2)}, 2).coeffs.empty());
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(closed_form_series(1).coeffs, std::vector<std::uint64_t>{1});
  EXPECT_EQ(closed_form_series(3).coeffs, (std::vector<std::uint64_t>{1, 2, 2, 1}));
  EXPECT_EQ(closed_form_series(4).total(), 24u);
  EXPECT_EQ(closed_form_series(4).degree(), 6u);
  EXPECT_EQ(quotient_dimension(1), 1u);
  EXPECT_EQ(quotient_dimension(3), 6u);
  EXPECT_EQ(quotient_dimension(6), 720u);
  EXPECT_THROW(closed_form_series(0), std::domain_error);
}

TEST(ClosedFormProperty, PalindromicDegreeAndInversions) {
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    const auto s = closed_form_series(n);
    ASSERT_TRUE(s.is_palindromic());
    ASSERT_EQ(*s.degree(), static_cast<std::size_t>(n * (n - 1) / 2));
    ASSERT_EQ(s.total(), factorial);
    ASSERT_EQ(s.coeffs, oracle::inversion_counts(n));
  }
}

TEST(HilbertProperty, ReducedBasisStaircaseMatchesClosedForm) {
  for (int n = 1; n <= 6; ++n) {
    const auto ord = MonomialOrder::lex(static_cast<std::size_t>(n));
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(elementary(i, n, ord));
    const auto G = reduced_groebner_basis(gens, ord);
    ASSERT_EQ(G.leading_monomials(), box_staircase(n));
    ASSERT_EQ(staircase_series(G.leading_monomials(), ord.arity()), closed_form_series(n));
  }
}

}  // namespace
}  // namespace symgb
