// Dense exponent-vector monomials and monomial orders.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace symgb {

/// Largest number of variables a monomial can carry.
inline constexpr std::size_t kMaxArity = 16;

using Exponent = std::uint16_t;

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// x_1^{e_1} ... x_n^{e_n}, stored densely. Index i (0-based) holds the
/// exponent of x_{i+1}. The all-zero vector is the monomial 1.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::size_t arity) : arity_(check_arity(arity)) {}

  Monomial(std::size_t arity, std::initializer_list<unsigned> exps) : arity_(check_arity(arity)) {
    if (exps.size() != arity) throw ArityError("exponent list length differs from arity");
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  /// x_index (1-based index) to the given power.
  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1) {
    Monomial m(arity);
    if (index < 1 || index > arity)
      throw std::out_of_range("variable x" + std::to_string(index) + " outside arity " +
                              std::to_string(arity));
    m.set(index - 1, power);
    return m;
  }

  [[nodiscard]] std::size_t arity() const { return arity_; }

  /// Exponent of x_{i+1}.
  [[nodiscard]] unsigned operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, unsigned e) {
    if (i >= arity_) throw std::out_of_range("exponent index outside arity");
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    exps_[i] = static_cast<Exponent>(e);
  }

  [[nodiscard]] std::span<const Exponent> exponents() const { return {exps_.data(), arity_}; }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
    return d;
  }

  [[nodiscard]] bool is_one() const {
    return std::all_of(exps_.begin(), exps_.begin() + arity_, [](Exponent e) { return e == 0; });
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = arity_;
    for (std::size_t i = 0; i < arity_; ++i) h = h * 1000003u ^ exps_[i];
    return h;
  }

 private:
  static std::size_t check_arity(std::size_t arity) {
    if (arity < 1 || arity > kMaxArity)
      throw ArityError("arity must be in 1.." + std::to_string(kMaxArity));
    return arity;
  }

  std::size_t arity_ = 0;
  std::array<Exponent, kMaxArity> exps_{};
};

inline void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityError("monomial arity mismatch");
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial r(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) r.set(i, a[i] + b[i]);
  return r;
}

/// True iff a | b.
inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// b / a; throws when a does not divide b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::domain_error("monomial division by a non-divisor");
  Monomial r(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) r.set(i, b[i] - a[i]);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial r(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

enum class OrderKind {
  /// Lexicographic with x_n > x_{n-1} > ... > x_1.
  lex_descending,
  /// Graded reverse lexicographic with the same variable ranking.
  grevlex_descending,
};

inline std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::lex_descending: return "lex";
    case OrderKind::grevlex_descending: return "grevlex";
  }
  return "?";
}

inline OrderKind parse_order_kind(const std::string& name) {
  if (name == "lex") return OrderKind::lex_descending;
  if (name == "grevlex") return OrderKind::grevlex_descending;
  throw std::invalid_argument("unknown monomial order: " + name);
}

/// A total, multiplicative well-order on monomials of fixed arity.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::size_t arity, OrderKind kind = OrderKind::lex_descending)
      : kind_(kind), arity_(arity) {
    if (arity < 1 || arity > kMaxArity) throw ArityError("order arity out of range");
  }

  static MonomialOrder lex(std::size_t arity) { return MonomialOrder(arity); }

  [[nodiscard]] OrderKind kind() const { return kind_; }
  [[nodiscard]] std::size_t arity() const { return arity_; }

  [[nodiscard]] std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != arity_ || b.arity() != arity_) throw ArityError("monomial/order arity mismatch");
    if (kind_ == OrderKind::grevlex_descending) {
      const unsigned da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      // Smaller exponent on the lowest-ranked variable wins.
      for (std::size_t i = 0; i < arity_; ++i)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    for (std::size_t i = arity_; i-- > 0;)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }

  [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::lex_descending;
  std::size_t arity_ = 1;
};

}  // namespace symgb

template <>
struct std::hash<symgb::Monomial> {
  std::size_t operator()(const symgb::Monomial& m) const noexcept { return m.hash(); }
};
