#pragma once
// EXPR: the numeric input language of the tool.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'sqrt2' | 'm0' | 'sqrt' '(' expr ')' | '(' expr ')'
//
// Rationals are written as quotients. No decimal points: certified commands
// never see a float.

#include <cctype>

#include "gaps.hpp"

namespace h4spec {

struct ExprError : Error {
  using Error::Error;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Real parse() {
    Real v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError("bad EXPR at position " + std::to_string(i_) + ": " + what + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool word(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) != w) return false;
    size_t j = i_ + w.size();
    if (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) return false;
    i_ = j;
    return true;
  }
  Int integer() {
    skip();
    size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected an integer");
    if (j < s_.size() && (s_[j] == '.' || s_[j] == 'e' || s_[j] == 'E')) fail("floating-point literals are not accepted");
    Int z(std::string(s_.substr(i_, j - i_)));
    i_ = j;
    return z;
  }

  Real expr() {
    Real v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Real term() {
    Real v = unary();
    for (;;) {
      if (eat('*')) v = mul(v, unary());
      else if (eat('/')) {
        Real d = unary();
        if (sign(d) == 0) fail("division by zero");
        v = div(v, d);
      } else return v;
    }
  }
  Real unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Real power() {
    Real b = atom();
    if (!eat('^')) return b;
    bool neg = eat('-');
    Int e = integer();
    if (e > 64) fail("exponent too large");
    Real r(1);
    for (long k = 0; k < e.get_si(); ++k) r = mul(r, b);
    if (neg) {
      if (sign(r) == 0) fail("division by zero");
      r = div(Real(1), r);
    }
    return r;
  }
  Real atom() {
    skip();
    if (eat('(')) {
      Real v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (word("sqrt2")) return Real(QSqrt2::sqrt2());
    if (word("m0")) return Real(gap_m0());
    if (word("sqrt")) {
      if (!eat('(')) fail("expected '(' after sqrt");
      Real v = expr();
      if (!eat(')')) fail("expected ')'");
      if (!v.surds().empty()) fail("sqrt of a value outside Q(sqrt2) is not supported");
      if (sign(v) < 0) fail("sqrt of a negative value");
      return Real(QuadExt::sqrt(v.base()));
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) return Real(Rat(integer()));
    if (i_ >= s_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }

  Real mul(const Real& a, const Real& b) {
    try {
      return a * b;
    } catch (const FieldMismatch&) {
      fail("product of surds from different fields");
    }
  }
  Real div(const Real& a, const Real& b) {
    try {
      return a / b;
    } catch (const FieldMismatch&) {
      fail("quotient of surds from different fields");
    }
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace detail

inline Real parse_expr(std::string_view s) { return detail::ExprParser(s).parse(); }

// single-field values only
inline QuadExt parse_quad(std::string_view s) {
  Real r = parse_expr(s);
  if (auto q = r.as_quad()) return *q;
  throw ExprError("EXPR must lie in a single quadratic extension: " + std::string(s));
}

inline Rat parse_rational(std::string_view s) {
  Real r = parse_expr(s);
  if (r.surds().empty() && r.base().is_rational()) return r.base().a();
  throw ExprError("EXPR must be rational: " + std::string(s));
}

}  // namespace h4spec
