// Sign-reversing involutions behind the e/h alternating-sum identities.
//
// Family hkn carries pairs (A, B) with A a subset of {1..n} and B a multiset
// of size k - |A| over {1..n-k+1}; its signed weight enumerator is
//   sum_i (-1)^i e_{i,n} h_{k-i,n-k+1}.
// Family ekn carries pairs with A a multiset over {1..n-|A|+1} and B a
// subset of {1..n-|A|} of size k - |A|; its enumerator is
//   sum_i (-1)^i h_{i,n-i+1} e_{k-i,n-i}.
// The weight of (A, B) is (-1)^{|A|} wt(A) wt(B).
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symgb/symfunc.hpp"
#include "symgb/text.hpp"

namespace symgb {

enum class Family { hkn, ekn };

inline std::string to_string(Family f) { return f == Family::hkn ? "hkn" : "ekn"; }

inline Family parse_family(const std::string& s) {
  if (s == "hkn") return Family::hkn;
  if (s == "ekn") return Family::ekn;
  throw std::invalid_argument("unknown involution family: " + s);
}

/// How the involution picks the element to move between A and B.
enum class InvolutionRule {
  /// If min(B) < min(A) move min(B) into A, otherwise move min(A) into B,
  /// with min of an empty collection = +infinity.
  min_anchor,
  /// If B is nonempty and max(B) >= max(A) move max(B) into A, otherwise
  /// move max(A) into B, with max of an empty collection = -infinity.
  max_anchor,
};

inline std::string to_string(InvolutionRule r) { return r == InvolutionRule::min_anchor ? "min" : "max"; }

inline InvolutionRule parse_rule(const std::string& s) {
  if (s == "min") return InvolutionRule::min_anchor;
  if (s == "max") return InvolutionRule::max_anchor;
  throw std::invalid_argument("unknown involution rule: " + s);
}

/// The rule that stays inside the carrier for the family. The prefix ranges
/// {1..n-|A|+1} of the ekn carrier shrink as A grows, which only the
/// max-anchored move respects.
inline InvolutionRule default_rule(Family f) {
  return f == Family::hkn ? InvolutionRule::min_anchor : InvolutionRule::max_anchor;
}

struct SignedPair {
  std::vector<int> A;  // sorted; a set for hkn, a multiset for ekn
  std::vector<int> B;  // sorted; a multiset for hkn, a set for ekn
  Family family = Family::hkn;
  int k = 0;
  int n = 0;

  [[nodiscard]] int sign() const { return A.size() % 2 == 0 ? 1 : -1; }

  /// wt(A) wt(B), without the sign.
  [[nodiscard]] Monomial monomial() const {
    std::vector<int> all(A);
    all.insert(all.end(), B.begin(), B.end());
    return weight(all, static_cast<std::size_t>(std::max(n, 1)));
  }

  friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

namespace detail {

inline bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

inline bool within(const std::vector<int>& v, int lo, int hi) {
  return std::all_of(v.begin(), v.end(), [&](int x) { return x >= lo && x <= hi; });
}

/// Calls visit on every size-r sorted selection from {1..top}, in
/// lexicographic order; with repetition when multiset is true.
inline void for_each_selection(int top, int r, bool multiset, const std::function<void(const std::vector<int>&)>& visit) {
  if (r < 0) return;
  if (r == 0) {
    visit({});
    return;
  }
  if (top < 1) return;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == r) {
      visit(cur);
      return;
    }
    for (int v = lo; v <= top; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, multiset ? v : v + 1);
    }
  };
  rec(0, 1);
}

inline void insert_sorted(std::vector<int>& v, int x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }

inline void erase_one(std::vector<int>& v, int x) { v.erase(std::find(v.begin(), v.end(), x)); }

inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

/// "(A|B)" with comma-separated elements.
inline std::string to_string(const SignedPair& p) {
  return "(" + detail::join(p.A) + "|" + detail::join(p.B) + ")";
}

/// True iff p satisfies the shape constraints of its family's carrier.
inline bool in_carrier(const SignedPair& p) {
  const int a = static_cast<int>(p.A.size());
  const int b = static_cast<int>(p.B.size());
  if (p.k < 0 || p.n < 0 || a + b != p.k) return false;
  if (!std::is_sorted(p.A.begin(), p.A.end()) || !std::is_sorted(p.B.begin(), p.B.end())) return false;
  if (p.family == Family::hkn)
    return detail::strictly_increasing(p.A) && detail::within(p.A, 1, p.n) && detail::within(p.B, 1, p.n - p.k + 1);
  return detail::strictly_increasing(p.B) && detail::within(p.A, 1, p.n - a + 1) && detail::within(p.B, 1, p.n - a);
}

/// Every carrier element once, ordered by (|A|, A, B).
inline std::vector<SignedPair> enumerate_carrier(Family family, int k, int n) {
  if (k < 0 || n < 0) throw std::domain_error("carrier requires k, n >= 0");
  std::vector<SignedPair> out;
  for (int a = 0; a <= k; ++a) {
    const bool hkn = family == Family::hkn;
    const int a_top = hkn ? n : n - a + 1;
    const int b_top = hkn ? n - k + 1 : n - a;
    detail::for_each_selection(a_top, a, !hkn, [&](const std::vector<int>& A) {
      detail::for_each_selection(b_top, k - a, hkn, [&](const std::vector<int>& B) {
        out.push_back(SignedPair{A, B, family, k, n});
      });
    });
  }
  return out;
}

/// Closed-form carrier size: sum_i C(n,i) C(n-k+i, k-i) for hkn and
/// sum_i C(n,i) C(n-i, k-i) for ekn.
inline std::size_t carrier_size_formula(Family family, int k, int n) {
  auto binom = [](long long top, long long r) -> long long {
    if (r < 0 || top < r || top < 0) return r == 0 ? 1 : 0;
    long long c = 1;
    for (long long i = 1; i <= r; ++i) c = c * (top - r + i) / i;
    return c;
  };
  long long total = 0;
  for (int i = 0; i <= k; ++i) {
    if (family == Family::hkn) {
      // (k-i)-multisets over n-k+1 symbols.
      const long long syms = n - k + 1;
      const long long multisets = (k - i == 0) ? 1 : (syms <= 0 ? 0 : binom(syms + (k - i) - 1, k - i));
      total += binom(n, i) * multisets;
    } else {
      // i-multisets over n-i+1 symbols, then (k-i)-subsets of n-i symbols.
      const long long syms = n - i + 1;
      const long long multisets = (i == 0) ? 1 : (syms <= 0 ? 0 : binom(syms + i - 1, i));
      total += multisets * binom(n - i, k - i);
    }
  }
  return static_cast<std::size_t>(total);
}

/// Moves one element between A and B according to the rule. The result is
/// not checked against the carrier; see certify_involution.
inline SignedPair apply_f(const SignedPair& p, InvolutionRule rule) {
  if (p.A.empty() && p.B.empty()) throw std::domain_error("involution undefined on (empty|empty)");
  SignedPair q = p;
  if (rule == InvolutionRule::min_anchor) {
    constexpr int inf = std::numeric_limits<int>::max();
    const int min_a = p.A.empty() ? inf : p.A.front();
    const int min_b = p.B.empty() ? inf : p.B.front();
    if (min_b < min_a) {
      detail::erase_one(q.B, min_b);
      detail::insert_sorted(q.A, min_b);
    } else {
      detail::erase_one(q.A, min_a);
      detail::insert_sorted(q.B, min_a);
    }
  } else {
    constexpr int neg_inf = std::numeric_limits<int>::min();
    const int max_a = p.A.empty() ? neg_inf : p.A.back();
    if (!p.B.empty() && p.B.back() >= max_a) {
      const int x = p.B.back();
      q.B.pop_back();
      detail::insert_sorted(q.A, x);
    } else {
      q.A.pop_back();
      detail::insert_sorted(q.B, max_a);
    }
  }
  return q;
}

/// Applies the family's default rule; throws if p is not in the carrier.
inline SignedPair apply_f(const SignedPair& p) {
  if (!in_carrier(p)) throw std::invalid_argument("pair " + to_string(p) + " is outside the carrier");
  return apply_f(p, default_rule(p.family));
}

struct CertReport {
  Family family = Family::hkn;
  InvolutionRule rule = InvolutionRule::min_anchor;
  int k = 0;
  int n = 0;
  std::size_t carrier_size = 0;
  bool carrier_size_matches = false;  // enumeration agrees with the closed-form count
  bool carrier_closed = false;        // f maps the carrier into itself
  bool is_involution = false;         // f(f(p)) = p
  bool sign_reversing = false;
  bool fixed_point_free = false;
  bool weight_preserving = false;     // wt(A) wt(B) unchanged by f
  bool weight_sum_zero = false;
  bool matches_identity_terms = false;  // per-|A| sums equal the symmetric-function products
  bool trivial_range = false;         // k > n: the identity holds vacuously
  Polynomial weight_sum;
  std::string witness;                // first offending pair, if any

  [[nodiscard]] bool ok() const {
    return carrier_size_matches && carrier_closed && is_involution && sign_reversing && fixed_point_free &&
           weight_preserving && weight_sum_zero && matches_identity_terms;
  }
};

/// Signed product term of the identity for |A| = i.
inline Polynomial identity_term(Family family, int k, int n, int i) {
  const auto ord = MonomialOrder::lex(static_cast<std::size_t>(std::max(n, 1)));
  const Rational sign(i % 2 == 0 ? 1 : -1);
  if (family == Family::hkn) return sign * (detail::elementary_unchecked(i, n, ord) * detail::homogeneous_unchecked(k - i, n - k + 1, ord));
  return sign * (detail::homogeneous_unchecked(i, n - i + 1, ord) * detail::elementary_unchecked(k - i, n - i, ord));
}

inline CertReport certify_involution(Family family, int k, int n, InvolutionRule rule) {
  if (k < 1) throw std::domain_error("certification requires k >= 1");
  const auto carrier = enumerate_carrier(family, k, n);
  const auto ord = MonomialOrder::lex(static_cast<std::size_t>(std::max(n, 1)));

  CertReport rep;
  rep.family = family;
  rep.rule = rule;
  rep.k = k;
  rep.n = n;
  rep.trivial_range = k > n;
  rep.carrier_size = carrier.size();
  rep.carrier_size_matches = carrier.size() == carrier_size_formula(family, k, n);
  rep.carrier_closed = rep.is_involution = rep.sign_reversing = rep.fixed_point_free = rep.weight_preserving = true;

  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index.emplace(std::make_pair(carrier[i].A, carrier[i].B), i);

  auto flag = [&](bool& field, const std::string& what, const SignedPair& p) {
    if (field && rep.witness.empty()) rep.witness = what + " at " + to_string(p);
    field = false;
  };

  std::vector<std::vector<Term>> by_size(static_cast<std::size_t>(k) + 1);
  for (const auto& p : carrier) {
    by_size[p.A.size()].push_back(Term{Rational(p.sign()), p.monomial()});
    const SignedPair q = apply_f(p, rule);
    if (!in_carrier(q) || !index.contains({q.A, q.B})) {
      flag(rep.carrier_closed, "image " + to_string(q) + " outside carrier", p);
      continue;
    }
    if (q == p) flag(rep.fixed_point_free, "fixed point", p);
    if (q.sign() == p.sign()) flag(rep.sign_reversing, "sign kept", p);
    if (!(q.monomial() == p.monomial())) flag(rep.weight_preserving, "weight changed", p);
    if (!(apply_f(q, rule) == p)) flag(rep.is_involution, "f(f(p)) != p", p);
  }
  if (!rep.carrier_closed) rep.is_involution = false;

  rep.weight_sum = Polynomial(ord);
  rep.matches_identity_terms = true;
  for (int i = 0; i <= k; ++i) {
    const Polynomial group(ord, by_size[static_cast<std::size_t>(i)]);
    rep.weight_sum += group;
    if (!(group == identity_term(family, k, n, i))) {
      rep.matches_identity_terms = false;
      if (rep.witness.empty()) rep.witness = "|A|=" + std::to_string(i) + " group differs from identity term";
    }
  }
  rep.weight_sum_zero = rep.weight_sum.is_zero();
  return rep;
}

inline CertReport certify_involution(Family family, int k, int n) {
  return certify_involution(family, k, n, default_rule(family));
}

/// One line per cancelling orbit, "(A|B) <-> (A'|B') weight +m", listing
/// each orbit once at its earlier member. Pairs whose image leaves the
/// carrier are reported as "(A|B) -> (A'|B') outside carrier".
inline std::vector<std::string> trace_orbits(Family family, int k, int n, InvolutionRule rule) {
  const auto carrier = enumerate_carrier(family, k, n);
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index.emplace(std::make_pair(carrier[i].A, carrier[i].B), i);
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    const auto& p = carrier[i];
    const SignedPair q = apply_f(p, rule);
    const auto it = index.find({q.A, q.B});
    if (!in_carrier(q) || it == index.end()) {
      lines.push_back(to_string(p) + " -> " + to_string(q) + " outside carrier");
      continue;
    }
    if (it->second < i) continue;
    lines.push_back(to_string(p) + " <-> " + to_string(q) + " weight " + (p.sign() > 0 ? "+" : "-") +
                    to_string(p.monomial()));
  }
  return lines;
}

}  // namespace symgb
