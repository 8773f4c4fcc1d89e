// Sparse multivariate polynomials in canonical (sorted, merged) form.
#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symgb/monomial.hpp"
#include "symgb/rational.hpp"

namespace symgb {

/// What the polynomial code needs from a coefficient type.
template <typename T>
concept Field = std::regular<T> && requires(T a, const T& b) {
  T(0);
  T(1);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

class ZeroPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <Field Coeff>
struct BasicTerm {
  Coeff coeff;
  Monomial mono;

  friend bool operator==(const BasicTerm&, const BasicTerm&) = default;
};

/// A polynomial over Coeff. Terms are kept strictly decreasing under the
/// polynomial's monomial order with no zero coefficients; the empty term
/// list is the zero polynomial. Every constructor and arithmetic result is
/// canonical, so structural equality is polynomial equality.
template <Field Coeff>
class BasicPolynomial {
 public:
  using Term = BasicTerm<Coeff>;

  BasicPolynomial() = default;

  explicit BasicPolynomial(MonomialOrder order) : order_(order) {}

  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  BasicPolynomial(MonomialOrder order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) {
    canonicalize();
  }

  static BasicPolynomial constant(MonomialOrder order, Coeff c) {
    return BasicPolynomial(order, {Term{std::move(c), Monomial(order.arity())}});
  }

  static BasicPolynomial monomial(MonomialOrder order, Monomial m, Coeff c = Coeff(1)) {
    return BasicPolynomial(order, {Term{std::move(c), std::move(m)}});
  }

  static BasicPolynomial variable(MonomialOrder order, std::size_t index, unsigned power = 1) {
    return monomial(order, Monomial::variable(order.arity(), index, power));
  }

  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] std::size_t arity() const { return order_.arity(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }

  [[nodiscard]] const Term& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    return terms_.front();
  }
  [[nodiscard]] const Monomial& leading_monomial() const { return leading_term().mono; }
  [[nodiscard]] const Coeff& leading_coeff() const { return leading_term().coeff; }

  [[nodiscard]] unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Same polynomial, terms re-sorted under another order of equal arity.
  [[nodiscard]] BasicPolynomial with_order(MonomialOrder order) const {
    if (order.arity() != arity()) throw ArityError("order arity mismatch");
    return BasicPolynomial(order, terms_);
  }

  [[nodiscard]] BasicPolynomial monic() const {
    const Coeff lc = leading_coeff();
    if (lc == Coeff(1)) return *this;
    const Coeff inv = Coeff(1) / lc;
    BasicPolynomial r(order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * inv, t.mono});
    return r;
  }

  [[nodiscard]] BasicPolynomial scaled(const Coeff& c, const Monomial& m) const {
    BasicPolynomial r(order_);
    if (c == Coeff(0)) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order, so no resort is needed.
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono * m});
    return r;
  }

  [[nodiscard]] BasicPolynomial operator-() const {
    BasicPolynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  /// this + c * m * g, computed by a single merge pass.
  BasicPolynomial& add_scaled(const BasicPolynomial& g, const Coeff& c, const Monomial& m) {
    require_compatible(g);
    if (c == Coeff(0) || g.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        out.push_back(std::move(*a++));
        continue;
      }
      Monomial bm = b->mono * m;
      if (a == terms_.end()) {
        out.push_back(Term{b->coeff * c, std::move(bm)});
        ++b;
        continue;
      }
      const auto cmp = order_.compare(a->mono, bm);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(std::move(*a++));
      } else if (cmp == std::strong_ordering::less) {
        out.push_back(Term{b->coeff * c, std::move(bm)});
        ++b;
      } else {
        Coeff sum = a->coeff + b->coeff * c;
        if (!(sum == Coeff(0))) out.push_back(Term{std::move(sum), std::move(bm)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& g) {
    return add_scaled(g, Coeff(1), Monomial(arity()));
  }
  BasicPolynomial& operator-=(const BasicPolynomial& g) {
    return add_scaled(g, -Coeff(1), Monomial(arity()));
  }
  BasicPolynomial& operator*=(const BasicPolynomial& g) { return *this = *this * g; }

  friend BasicPolynomial operator+(BasicPolynomial f, const BasicPolynomial& g) { return f += g; }
  friend BasicPolynomial operator-(BasicPolynomial f, const BasicPolynomial& g) { return f -= g; }

  friend BasicPolynomial operator*(const BasicPolynomial& f, const BasicPolynomial& g) {
    f.require_compatible(g);
    const BasicPolynomial& small = f.size() <= g.size() ? f : g;
    const BasicPolynomial& large = f.size() <= g.size() ? g : f;
    BasicPolynomial r(f.order_);
    for (const auto& t : small.terms_) r.add_scaled(large, t.coeff, t.mono);
    return r;
  }

  friend BasicPolynomial operator*(const Coeff& c, const BasicPolynomial& f) {
    return f.scaled(c, Monomial(f.arity()));
  }

  [[nodiscard]] BasicPolynomial pow(unsigned e) const {
    BasicPolynomial r = constant(order_, Coeff(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const BasicPolynomial& f, const BasicPolynomial& g) {
    return f.order_.arity() == g.order_.arity() && f.terms_ == g.terms_;
  }

 private:
  void require_compatible(const BasicPolynomial& g) const {
    if (g.arity() != arity()) throw ArityError("polynomial arity mismatch");
    if (!(g.order_ == order_)) throw std::invalid_argument("polynomial monomial order mismatch");
  }

  void canonicalize() {
    for (const auto& t : terms_)
      if (t.mono.arity() != arity()) throw ArityError("term arity differs from polynomial arity");
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == Coeff(0)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == Coeff(0)) out.pop_back();
    terms_ = std::move(out);
  }

  MonomialOrder order_;
  std::vector<Term> terms_;
};

using Term = BasicTerm<Rational>;
using Polynomial = BasicPolynomial<Rational>;

/// Maximal term of f under ord, which may differ from f's own order.
template <Field Coeff>
BasicTerm<Coeff> leading_term(const BasicPolynomial<Coeff>& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw ZeroPolynomialError("leading term of the zero polynomial");
  if (ord == f.order()) return f.leading_term();
  const auto& ts = f.terms();
  return *std::max_element(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return ord.compare(a.mono, b.mono) == std::strong_ordering::less;
  });
}

template <Field Coeff>
BasicPolynomial<Coeff> make_monic(const BasicPolynomial<Coeff>& f) {
  if (f.is_zero()) throw ZeroPolynomialError("cannot make the zero polynomial monic");
  return f.monic();
}

}  // namespace symgb
