// Hilbert series of artinian monomial quotients by standard-monomial counting.
#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgb/monomial.hpp"

namespace symgb {

class NotArtinianError : public std::domain_error {
 public:
  explicit NotArtinianError(std::size_t variable)
      : std::domain_error("staircase is not artinian: no pure power of x" + std::to_string(variable + 1)),
        variable_(variable) {}
  /// 0-based index of a variable with no pure power among the generators.
  [[nodiscard]] std::size_t variable() const { return variable_; }

 private:
  std::size_t variable_;
};

/// Dense polynomial in t; coeffs[d] is the dimension of the degree-d piece.
/// Trailing zeros are trimmed, so the zero quotient has no coefficients.
struct SeriesPoly {
  std::vector<std::uint64_t> coeffs;

  [[nodiscard]] std::uint64_t total() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0});
  }
  [[nodiscard]] std::optional<std::size_t> degree() const {
    if (coeffs.empty()) return std::nullopt;
    return coeffs.size() - 1;
  }
  [[nodiscard]] bool is_palindromic() const {
    for (std::size_t i = 0, j = coeffs.size(); i < j--; ++i)
      if (coeffs[i] != coeffs[j]) return false;
    return true;
  }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;
};

inline std::string to_string(const SeriesPoly& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.coeffs[i]);
  }
  return out + "]";
}

/// Standard monomials (divisible by none of the generators) of an artinian
/// monomial ideal, in increasing lexicographic exponent order.
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& generators, std::size_t arity,
                                                std::uint64_t max_box = 100'000'000) {
  for (const auto& g : generators)
    if (g.arity() != arity) throw ArityError("staircase generator arity mismatch");

  // caps[i]: smallest pure power of x_{i+1} in the ideal.
  std::vector<unsigned> caps(arity, 0);
  for (const auto& g : generators) {
    if (g.is_one()) return {};
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < arity; ++i)
      if (g[i] != 0) ++support, var = i;
    if (support == 1 && (caps[var] == 0 || g[var] < caps[var])) caps[var] = g[var];
  }
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (caps[i] == 0) throw NotArtinianError(i);
    box *= caps[i];
    if (box > max_box) throw std::length_error("staircase box too large to enumerate");
  }

  std::vector<Monomial> out;
  Monomial m(arity);
  for (;;) {
    bool standard = true;
    for (const auto& g : generators)
      if (divides(g, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
    // Odometer step over the box, x_1 fastest.
    std::size_t i = 0;
    while (i < arity && m[i] + 1 == caps[i]) m.set(i++, 0);
    if (i == arity) break;
    m.set(i, m[i] + 1);
  }
  return out;
}

/// Hilbert series numerator of k[x]/<generators> for an artinian monomial
/// ideal: coeffs[d] counts standard monomials of degree d.
inline SeriesPoly staircase_series(const std::vector<Monomial>& generators, std::size_t arity) {
  SeriesPoly s;
  for (const auto& m : standard_monomials(generators, arity)) {
    const unsigned d = m.degree();
    if (s.coeffs.size() <= d) s.coeffs.resize(d + 1, 0);
    ++s.coeffs[d];
  }
  s.trim();
  return s;
}

/// prod_{i=1..n} (1 - t^i) / (1 - t) = prod_{i=1..n} (1 + t + ... + t^{i-1}).
inline SeriesPoly closed_form_series(int n) {
  if (n < 1) throw std::domain_error("closed-form series requires n >= 1");
  SeriesPoly s{{1}};
  for (int i = 2; i <= n; ++i) {
    std::vector<std::uint64_t> next(s.coeffs.size() + static_cast<std::size_t>(i) - 1, 0);
    for (std::size_t d = 0; d < s.coeffs.size(); ++d)
      for (int j = 0; j < i; ++j) next[d + static_cast<std::size_t>(j)] += s.coeffs[d];
    s.coeffs = std::move(next);
  }
  return s;
}

inline std::uint64_t quotient_dimension(int n) { return closed_form_series(n).total(); }

}  // namespace symgb
