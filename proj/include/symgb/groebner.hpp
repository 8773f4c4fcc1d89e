// Multivariate division, S-polynomials, Buchberger's algorithm and reduced
// Groebner bases.
#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symgb/polynomial.hpp"

namespace symgb {

/// Raised when Buchberger's algorithm receives only zero generators.
class ZeroIdealError : public std::invalid_argument {
 public:
  ZeroIdealError() : std::invalid_argument("zero ideal: no nonzero generators") {}
};

template <Field Coeff>
struct BasicDivisionResult {
  std::vector<BasicPolynomial<Coeff>> quotients;  // aligned with the divisor list
  BasicPolynomial<Coeff> remainder;
};

template <Field Coeff>
struct BasicGroebnerBasis {
  MonomialOrder order;
  std::vector<BasicPolynomial<Coeff>> elements;
  bool reduced = false;

  [[nodiscard]] std::size_t arity() const { return order.arity(); }
  [[nodiscard]] bool is_zero_ideal() const { return elements.empty(); }
  [[nodiscard]] bool is_unit_ideal() const {
    return std::any_of(elements.begin(), elements.end(),
                       [](const auto& g) { return !g.is_zero() && g.leading_monomial().is_one(); });
  }
  [[nodiscard]] std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const BasicGroebnerBasis&, const BasicGroebnerBasis&) = default;
};

using DivisionResult = BasicDivisionResult<Rational>;
using GroebnerBasis = BasicGroebnerBasis<Rational>;

struct BuchbergerOptions {
  /// Skip pairs whose leading monomials are coprime.
  bool product_criterion = true;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_additions = 0;
};

namespace detail {

template <Field Coeff>
std::vector<BasicPolynomial<Coeff>> under_order(const std::vector<BasicPolynomial<Coeff>>& ps,
                                                const MonomialOrder& ord) {
  std::vector<BasicPolynomial<Coeff>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    if (p.arity() != ord.arity()) throw ArityError("polynomial arity differs from the order's");
    out.push_back(p.order() == ord ? p : p.with_order(ord));
  }
  return out;
}

/// Working dividend stored in increasing order so the leading term sits at
/// the back and can be removed in O(1).
template <Field Coeff>
class Dividend {
 public:
  using Term = BasicTerm<Coeff>;

  explicit Dividend(const BasicPolynomial<Coeff>& f) : order_(f.order()), terms_(f.terms().rbegin(), f.terms().rend()) {}

  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] const Term& lead() const { return terms_.back(); }
  Term pop() {
    Term t = std::move(terms_.back());
    terms_.pop_back();
    return t;
  }

  /// Cancels the leading term against c * m * g, where c * m * LT(g)
  /// equals the current leading term.
  void cancel_lead(const BasicPolynomial<Coeff>& g, const Coeff& c, const Monomial& m) {
    terms_.pop_back();
    const auto& gt = g.terms();
    std::vector<Term> out;
    out.reserve(terms_.size() + gt.size());
    auto a = terms_.begin();
    // g's tail, walked from its smallest term upward.
    auto b = gt.rbegin();
    const auto b_end = gt.rend() - 1;
    while (a != terms_.end() || b != b_end) {
      if (b == b_end) {
        out.push_back(std::move(*a++));
        continue;
      }
      Monomial bm = b->mono * m;
      if (a == terms_.end()) {
        out.push_back(Term{-(b->coeff * c), std::move(bm)});
        ++b;
        continue;
      }
      const auto cmp = order_.compare(a->mono, bm);
      if (cmp == std::strong_ordering::less) {
        out.push_back(std::move(*a++));
      } else if (cmp == std::strong_ordering::greater) {
        out.push_back(Term{-(b->coeff * c), std::move(bm)});
        ++b;
      } else {
        Coeff diff = a->coeff - b->coeff * c;
        if (!(diff == Coeff(0))) out.push_back(Term{std::move(diff), std::move(bm)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
  }

 private:
  MonomialOrder order_;
  std::vector<Term> terms_;
};

template <Field Coeff>
BasicDivisionResult<Coeff> divide_impl(const BasicPolynomial<Coeff>& f,
                                       const std::vector<BasicPolynomial<Coeff>>& divisors,
                                       const MonomialOrder& ord, bool track_quotients) {
  using Term = BasicTerm<Coeff>;
  for (const auto& g : divisors)
    if (g.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
  if (f.arity() != ord.arity()) throw ArityError("dividend arity differs from the order's");

  Dividend<Coeff> p(f.order() == ord ? f : f.with_order(ord));
  std::vector<std::vector<Term>> quotient_terms(track_quotients ? divisors.size() : 0);
  std::vector<Term> remainder_terms;

  while (!p.empty()) {
    const Term& lead = p.lead();
    std::size_t i = 0;
    for (; i < divisors.size(); ++i)
      if (divides(divisors[i].leading_monomial(), lead.mono)) break;
    if (i == divisors.size()) {
      remainder_terms.push_back(p.pop());
      continue;
    }
    const auto& g = divisors[i];
    Coeff c = lead.coeff / g.leading_coeff();
    Monomial m = quotient(lead.mono, g.leading_monomial());
    if (track_quotients) quotient_terms[i].push_back(Term{c, m});
    p.cancel_lead(g, c, m);
  }

  BasicDivisionResult<Coeff> result;
  result.remainder = BasicPolynomial<Coeff>(ord, std::move(remainder_terms));
  if (track_quotients) {
    for (auto& qt : quotient_terms) result.quotients.emplace_back(ord, std::move(qt));
  }
  return result;
}

}  // namespace detail

/// Divides f by the ordered list of divisors. At each step the first divisor
/// whose leading monomial divides the current leading monomial is used;
/// terms no divisor can touch move to the remainder.
template <Field Coeff>
BasicDivisionResult<Coeff> divide(const BasicPolynomial<Coeff>& f,
                                  const std::vector<BasicPolynomial<Coeff>>& divisors,
                                  const MonomialOrder& ord) {
  return detail::divide_impl(f, detail::under_order(divisors, ord), ord, true);
}

template <Field Coeff>
BasicDivisionResult<Coeff> divide(const BasicPolynomial<Coeff>& f,
                                  const std::vector<BasicPolynomial<Coeff>>& divisors) {
  return divide(f, divisors, f.order());
}

/// Remainder of f on division by the list (no quotient bookkeeping).
template <Field Coeff>
BasicPolynomial<Coeff> remainder(const BasicPolynomial<Coeff>& f,
                                 const std::vector<BasicPolynomial<Coeff>>& divisors,
                                 const MonomialOrder& ord) {
  return detail::divide_impl(f, detail::under_order(divisors, ord), ord, false).remainder;
}

template <Field Coeff>
BasicPolynomial<Coeff> normal_form(const BasicPolynomial<Coeff>& f, const BasicGroebnerBasis<Coeff>& G) {
  return remainder(f, G.elements, G.order);
}

/// (L / LT(f)) f - (L / LT(g)) g with L = lcm(LM(f), LM(g)).
template <Field Coeff>
BasicPolynomial<Coeff> s_polynomial(const BasicPolynomial<Coeff>& f, const BasicPolynomial<Coeff>& g,
                                    const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("S-polynomial of the zero polynomial");
  const auto fo = f.order() == ord ? f : f.with_order(ord);
  const auto go = g.order() == ord ? g : g.with_order(ord);
  const Monomial l = lcm(fo.leading_monomial(), go.leading_monomial());
  auto s = fo.scaled(Coeff(1) / fo.leading_coeff(), quotient(l, fo.leading_monomial()));
  s.add_scaled(go, -(Coeff(1) / go.leading_coeff()), quotient(l, go.leading_monomial()));
  return s;
}

template <Field Coeff>
BasicPolynomial<Coeff> s_polynomial(const BasicPolynomial<Coeff>& f, const BasicPolynomial<Coeff>& g) {
  return s_polynomial(f, g, f.order());
}

/// Buchberger's algorithm with first-in-first-out pair processing. The
/// result generates the same ideal and satisfies Buchberger's criterion; it
/// is not interreduced (see reduce_basis).
template <Field Coeff>
BasicGroebnerBasis<Coeff> buchberger(const std::vector<BasicPolynomial<Coeff>>& generators,
                                     const MonomialOrder& ord, BuchbergerOptions options = {},
                                     BuchbergerStats* stats = nullptr) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<BasicPolynomial<Coeff>> basis;
  for (const auto& g : detail::under_order(generators, ord))
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) throw ZeroIdealError();

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    ++st.pairs_considered;
    if (options.product_criterion && coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) {
      ++st.pairs_skipped;
      continue;
    }
    auto r = detail::divide_impl(s_polynomial(basis[i], basis[j], ord), basis, ord, false).remainder;
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    ++st.basis_additions;
    basis.push_back(r.monic());
    const std::size_t added = basis.size() - 1;
    for (std::size_t k = 0; k < added; ++k) pairs.emplace_back(k, added);
  }
  return BasicGroebnerBasis<Coeff>{ord, std::move(basis), false};
}

template <Field Coeff>
BasicGroebnerBasis<Coeff> buchberger(const std::vector<BasicPolynomial<Coeff>>& generators) {
  if (generators.empty()) throw ZeroIdealError();
  return buchberger(generators, generators.front().order());
}

/// Turns a Groebner basis into the unique reduced one: monic, minimal,
/// every element fully reduced by the others, sorted by decreasing leading
/// monomial. Assumes the input satisfies Buchberger's criterion.
template <Field Coeff>
BasicGroebnerBasis<Coeff> reduce_basis(const BasicGroebnerBasis<Coeff>& G) {
  const MonomialOrder& ord = G.order;
  std::vector<BasicPolynomial<Coeff>> elems;
  for (const auto& g : detail::under_order(G.elements, ord))
    if (!g.is_zero()) elems.push_back(g.monic());

  // Keep g only if no other kept element's leading monomial divides LM(g);
  // among equal leading monomials the first one survives.
  std::vector<BasicPolynomial<Coeff>> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Monomial& lm = elems[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = elems[j].leading_monomial();
      if (other == lm) redundant = j < i;
      else redundant = divides(other, lm);
    }
    if (!redundant) minimal.push_back(elems[i]);
  }

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasicPolynomial<Coeff>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = detail::divide_impl(minimal[i], others, ord, false).remainder.monic();
  }

  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return BasicGroebnerBasis<Coeff>{ord, std::move(minimal), true};
}

/// Reduced Groebner basis of the ideal generated by the list.
template <Field Coeff>
BasicGroebnerBasis<Coeff> reduced_groebner_basis(const std::vector<BasicPolynomial<Coeff>>& generators,
                                                 const MonomialOrder& ord, BuchbergerOptions options = {},
                                                 BuchbergerStats* stats = nullptr) {
  return reduce_basis(buchberger(generators, ord, options, stats));
}

/// Buchberger's criterion: every pairwise S-polynomial reduces to zero.
template <Field Coeff>
bool is_groebner_basis(const std::vector<BasicPolynomial<Coeff>>& G, const MonomialOrder& ord) {
  const auto elems = detail::under_order(G, ord);
  for (const auto& g : elems)
    if (g.is_zero()) throw ZeroPolynomialError("zero element in a candidate basis");
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!detail::divide_impl(s_polynomial(elems[i], elems[j], ord), elems, ord, false).remainder.is_zero())
        return false;
  return true;
}

/// Reduced Groebner basis check: a Groebner basis whose elements are monic
/// and contain no monomial divisible by another element's leading monomial.
template <Field Coeff>
bool is_reduced(const std::vector<BasicPolynomial<Coeff>>& G, const MonomialOrder& ord) {
  const auto elems = detail::under_order(G, ord);
  for (const auto& g : elems)
    if (g.is_zero()) throw ZeroPolynomialError("zero element in a candidate basis");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!(elems[i].leading_coeff() == Coeff(1))) return false;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      const Monomial& lm = elems[j].leading_monomial();
      for (const auto& t : elems[i].terms())
        if (divides(lm, t.mono)) return false;
    }
  }
  return is_groebner_basis(elems, ord);
}

}  // namespace symgb
