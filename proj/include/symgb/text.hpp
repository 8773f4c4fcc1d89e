// Text form of polynomials.
//
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := coeff | powprod | coeff '*' powprod
//   powprod := factor ('*' factor)*
//   factor  := 'x' INT ['^' INT]
//   coeff   := INT ['/' INT]
//
// Whitespace between tokens is ignored on input. Printing lists terms in
// decreasing order, factors by increasing variable index, omits unit
// coefficients and denominators of 1, and never leads with '+'.
#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symgb/polynomial.hpp"

namespace symgb {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  [[nodiscard]] std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : f.terms()) {
    const bool neg = c.sign() < 0;
    if (neg) out += '-';
    else if (!first) out += '+';
    first = false;
    const Rational mag = neg ? -c : c;
    if (m.is_one()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + '*';
      out += to_string(m);
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, MonomialOrder order) : text_(text), order_(order) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    terms.push_back(term(neg));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(op == '-'));
    }
    return Polynomial(order_, std::move(terms));
  }

 private:
  Term term(bool negate) {
    skip_ws();
    Rational coeff(1);
    Monomial mono(order_.arity());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        mono = powprod();
      }
    } else if (peek() == 'x') {
      mono = powprod();
    } else {
      fail("expected a coefficient or a variable");
    }
    return Term{negate ? -coeff : coeff, mono};
  }

  Rational coefficient() {
    std::string num = integer();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      std::string den = integer();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", at);
      return Rational::parse(num + '/' + den);
    }
    return Rational::parse(num);
  }

  Monomial powprod() {
    Monomial m = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return m;
      ++pos_;
      m = m * factor();
    }
  }

  Monomial factor() {
    skip_ws();
    if (peek() != 'x') fail("expected variable 'x<index>'");
    ++pos_;
    const std::size_t at = pos_;
    const unsigned long idx = small_integer();
    if (idx < 1 || idx > order_.arity())
      fail("variable x" + std::to_string(idx) + " outside 1.." + std::to_string(order_.arity()), at);
    unsigned long power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      power = small_integer();
      if (power > 60000) fail("exponent too large");
    }
    return Monomial::variable(order_.arity(), idx, static_cast<unsigned>(power));
  }

  unsigned long small_integer() {
    const std::size_t at = pos_;
    const std::string digits = integer();
    if (digits.size() > 9) fail("integer too large", at);
    return std::stoul(digits);
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 4000) fail("integer literal too long");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, MonomialOrder order) {
  return detail::PolyParser(text, order).parse();
}

inline Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  return parse_polynomial(text, MonomialOrder::lex(arity));
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace symgb
