// Elementary, complete homogeneous and power-sum symmetric polynomials, and
// checkers for the identities relating them.
//
// Index conventions (applied for every integer n, including n <= 0, so that
// identities remain well-typed when an index runs past the variable count):
//   e_{k,n} = 0 if n < k;  1 if k = 0;  e_{k,n-1} + x_n e_{k-1,n-1} otherwise
//   h_{k,n} = 0 if n <= 0 and k > 0;  1 if k = 0;  h_{k,n-1} + x_n h_{k-1,n} otherwise
// Negative k yields 0 for both families.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symgb/polynomial.hpp"

namespace symgb {

enum class SymKind { elementary, homogeneous, powersum };

inline SymKind parse_sym_kind(const std::string& s) {
  if (s == "e") return SymKind::elementary;
  if (s == "h") return SymKind::homogeneous;
  if (s == "p") return SymKind::powersum;
  throw std::invalid_argument("unknown symmetric polynomial kind: " + s);
}

namespace detail {

inline void require_embeddable(int n, const MonomialOrder& ord) {
  if (n > static_cast<int>(ord.arity()))
    throw ArityError("x_" + std::to_string(n) + " does not fit in arity " + std::to_string(ord.arity()));
}

}  // namespace detail

namespace detail {

// Builders without the arity-vs-n check, for identities whose index
// arithmetic produces e_{0,n+1} = 1 and similar constants.
inline Polynomial elementary_unchecked(int k, int n, const MonomialOrder& ord) {
  if (k < 0 || n < k) return Polynomial(ord);
  if (k == 0) return Polynomial::constant(ord, Rational(1));
  // row[j] holds e_{j,m} for the current m.
  std::vector<Polynomial> row(static_cast<std::size_t>(k) + 1, Polynomial(ord));
  row[0] = Polynomial::constant(ord, Rational(1));
  for (int m = 1; m <= n; ++m) {
    const Monomial xm = Monomial::variable(ord.arity(), static_cast<std::size_t>(m));
    for (int j = std::min(k, m); j >= 1; --j) row[j].add_scaled(row[j - 1], Rational(1), xm);
  }
  return row[static_cast<std::size_t>(k)];
}

inline Polynomial homogeneous_unchecked(int k, int n, const MonomialOrder& ord) {
  if (k < 0) return Polynomial(ord);
  if (k == 0) return Polynomial::constant(ord, Rational(1));
  if (n <= 0) return Polynomial(ord);
  // row[j] holds h_{j,m}; h_{j,m} = h_{j,m-1} + x_m h_{j-1,m}, so sweep j upward.
  std::vector<Polynomial> row(static_cast<std::size_t>(k) + 1, Polynomial(ord));
  row[0] = Polynomial::constant(ord, Rational(1));
  for (int m = 1; m <= n; ++m) {
    const Monomial xm = Monomial::variable(ord.arity(), static_cast<std::size_t>(m));
    for (int j = 1; j <= k; ++j) row[j].add_scaled(row[j - 1], Rational(1), xm);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace detail

inline Polynomial elementary(int k, int n, const MonomialOrder& ord) {
  detail::require_embeddable(n, ord);
  return detail::elementary_unchecked(k, n, ord);
}

inline Polynomial homogeneous(int k, int n, const MonomialOrder& ord) {
  detail::require_embeddable(n, ord);
  return detail::homogeneous_unchecked(k, n, ord);
}

/// x_1^k + ... + x_n^k, for k >= 1.
inline Polynomial powersum(int k, int n, const MonomialOrder& ord) {
  if (k < 1) throw std::domain_error("power sum requires k >= 1");
  detail::require_embeddable(n, ord);
  std::vector<Term> terms;
  for (int j = 1; j <= n; ++j)
    terms.push_back(Term{Rational(1), Monomial::variable(ord.arity(), static_cast<std::size_t>(j),
                                                         static_cast<unsigned>(k))});
  return Polynomial(ord, std::move(terms));
}

inline Polynomial elementary(int k, int n, std::size_t arity) { return elementary(k, n, MonomialOrder::lex(arity)); }
inline Polynomial homogeneous(int k, int n, std::size_t arity) { return homogeneous(k, n, MonomialOrder::lex(arity)); }
inline Polynomial powersum(int k, int n, std::size_t arity) { return powersum(k, n, MonomialOrder::lex(arity)); }

inline Polynomial symmetric(SymKind kind, int k, int n, const MonomialOrder& ord) {
  switch (kind) {
    case SymKind::elementary: return elementary(k, n, ord);
    case SymKind::homogeneous: return homogeneous(k, n, ord);
    case SymKind::powersum: return powersum(k, n, ord);
  }
  throw std::logic_error("unreachable");
}

/// wt(S) = prod x_s^{m(s)} for a set or multiset S over 1..arity.
inline Monomial weight(const std::vector<int>& elements, std::size_t arity) {
  Monomial m(arity);
  for (int s : elements) {
    if (s < 1 || static_cast<std::size_t>(s) > arity)
      throw std::out_of_range("element " + std::to_string(s) + " outside 1.." + std::to_string(arity));
    const auto i = static_cast<std::size_t>(s - 1);
    m.set(i, m[i] + 1);
  }
  return m;
}

// Identity checkers. Each *_difference returns the identity moved to one
// side; the check_* wrapper tests it for zero. All operands live in arity
// max(n, 1) under lex. Degrees k must be >= 1.

namespace detail {

inline MonomialOrder identity_order(int n) {
  if (n < 0) throw std::domain_error("n must be non-negative");
  return MonomialOrder::lex(static_cast<std::size_t>(std::max(n, 1)));
}

inline void require_positive_degree(int k) {
  if (k < 1) throw std::domain_error("identity degree k must be >= 1");
}

inline Rational alternating(int i) { return Rational(i % 2 == 0 ? 1 : -1); }

}  // namespace detail

/// h_{k,n-k+1} - sum_{i=1..k} (-1)^{i+1} e_{i,n} h_{k-i,n-k+1}
inline Polynomial prop_hkn_difference(int k, int n) {
  detail::require_positive_degree(k);
  const auto ord = detail::identity_order(n);
  Polynomial diff = detail::homogeneous_unchecked(k, n - k + 1, ord);
  for (int i = 1; i <= k; ++i)
    diff += detail::alternating(i) * (detail::elementary_unchecked(i, n, ord) * detail::homogeneous_unchecked(k - i, n - k + 1, ord));
  return diff;
}

/// e_{k,n} - sum_{i=1..k} (-1)^{i+1} h_{i,n-i+1} e_{k-i,n-i}
inline Polynomial prop_ekn_difference(int k, int n) {
  detail::require_positive_degree(k);
  const auto ord = detail::identity_order(n);
  Polynomial diff = detail::elementary_unchecked(k, n, ord);
  for (int i = 1; i <= k; ++i)
    diff += detail::alternating(i) * (detail::homogeneous_unchecked(i, n - i + 1, ord) * detail::elementary_unchecked(k - i, n - i, ord));
  return diff;
}

/// sum_{l=0..j} x_{n-j+1}^l h_{j-l,n-j} - h_{j,n-j+1}, for 1 <= j <= n.
inline Polynomial telescope_difference(int j, int n) {
  if (j < 1 || j > n) throw std::domain_error("telescope requires 1 <= j <= n");
  const auto ord = detail::identity_order(n);
  const auto var = static_cast<std::size_t>(n - j + 1);
  Polynomial diff = -detail::homogeneous_unchecked(j, n - j + 1, ord);
  for (int l = 0; l <= j; ++l)
    diff.add_scaled(detail::homogeneous_unchecked(j - l, n - j, ord), Rational(1),
                    Monomial::variable(ord.arity(), var, static_cast<unsigned>(l)));
  return diff;
}

/// sum_{r=0..k-1} (-1)^r e_{r,n} p_{k-r,n} + (-1)^k k e_{k,n}
inline Polynomial newton_difference(int k, int n) {
  detail::require_positive_degree(k);
  const auto ord = detail::identity_order(n);
  Polynomial diff(ord);
  for (int r = 0; r < k; ++r)
    diff += detail::alternating(r) * (detail::elementary_unchecked(r, n, ord) * powersum(k - r, n, ord));
  diff += (detail::alternating(k) * Rational(k)) * detail::elementary_unchecked(k, n, ord);
  return diff;
}

/// Both one-sided forms behind the <e_1, e_k> ideal rewrite:
///   e_{k,n} - e_{k,n-1} - x_n e_{k-1,n-1}
///   (e_{1,n-1} e_{k-1,n-1} - e_{k,n-1}) - (e_{1,n} e_{k-1,n-1} - e_{k,n})
/// Requires n >= 1.
inline std::pair<Polynomial, Polynomial> e1ek_reduction_differences(int k, int n) {
  detail::require_positive_degree(k);
  if (n < 1) throw std::domain_error("e1/ek reduction requires n >= 1");
  const auto ord = detail::identity_order(n);
  const Polynomial ek_prev = detail::elementary_unchecked(k - 1, n - 1, ord);
  Polynomial first = detail::elementary_unchecked(k, n, ord) - detail::elementary_unchecked(k, n - 1, ord);
  first.add_scaled(ek_prev, Rational(-1), Monomial::variable(ord.arity(), static_cast<std::size_t>(n)));
  Polynomial second = (detail::elementary_unchecked(1, n - 1, ord) * ek_prev - detail::elementary_unchecked(k, n - 1, ord)) -
                      (detail::elementary_unchecked(1, n, ord) * ek_prev - detail::elementary_unchecked(k, n, ord));
  return {std::move(first), std::move(second)};
}

inline bool check_prop_hkn(int k, int n) { return prop_hkn_difference(k, n).is_zero(); }
inline bool check_prop_ekn(int k, int n) { return prop_ekn_difference(k, n).is_zero(); }
inline bool check_telescope(int j, int n) { return telescope_difference(j, n).is_zero(); }
inline bool check_newton(int k, int n) { return newton_difference(k, n).is_zero(); }
inline bool check_e1ek_reduction(int k, int n) {
  const auto [first, second] = e1ek_reduction_differences(k, n);
  return first.is_zero() && second.is_zero();
}

/// {h_{i,n-i+1} : i = 1..k}, the closed-form reduced basis of <e_1..e_k>.
inline std::vector<Polynomial> conjectured_gb_ek(int k, int n) {
  if (k < 1 || k > n) throw std::domain_error("closed-form basis requires 1 <= k <= n");
  const auto ord = MonomialOrder::lex(static_cast<std::size_t>(n));
  std::vector<Polynomial> out;
  for (int i = 1; i <= k; ++i) out.push_back(make_monic(detail::homogeneous_unchecked(i, n - i + 1, ord)));
  return out;
}

/// {e_{1,n}, e_{1,n-1} e_{k-1,n-1} - e_{k,n-1}}, the closed-form reduced
/// basis of <e_1, e_k>. At k = 1 the second element vanishes and is dropped.
inline std::vector<Polynomial> conjectured_gb_e1ek(int k, int n) {
  if (k < 1 || k > n) throw std::domain_error("closed-form basis requires 1 <= k <= n");
  const auto ord = MonomialOrder::lex(static_cast<std::size_t>(n));
  std::vector<Polynomial> out{make_monic(detail::elementary_unchecked(1, n, ord))};
  Polynomial second = detail::elementary_unchecked(1, n - 1, ord) * detail::elementary_unchecked(k - 1, n - 1, ord) - detail::elementary_unchecked(k, n - 1, ord);
  if (!second.is_zero()) out.push_back(make_monic(second));
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.leading_monomial(), b.leading_monomial()); });
  return out;
}

}  // namespace symgb
