#pragma once
// Digit words over {1,2,3}, their values under the three generating maps
//   N1 = (1 0; sqrt2 1),  N2 = (1 sqrt2; sqrt2 1),  N3 = (1 sqrt2; 0 1),
// the greedy expansion of a point of [0, inf], and geodesic reduction.

#include <map>

#include "mobius.hpp"

namespace h4spec {

enum class Digit : std::uint8_t { one = 1, two = 2, three = 3 };

inline Digit digit_from_char(char c) {
  if (c < '1' || c > '3') throw Error(std::string("not a digit in {1,2,3}: '") + c + "'");
  return static_cast<Digit>(c - '0');
}
inline char to_char(Digit d) { return static_cast<char>('0' + static_cast<int>(d)); }
inline Digit vee(Digit d) { return static_cast<Digit>(4 - static_cast<int>(d)); }

// A finite word, stored as the characters '1'..'3'.
class FiniteWord {
 public:
  FiniteWord() = default;
  FiniteWord(std::string s) : s_(std::move(s)) {
    for (char c : s_) digit_from_char(c);
  }
  FiniteWord(const char* s) : FiniteWord(std::string(s)) {}

  const std::string& str() const { return s_; }
  size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Digit operator[](size_t i) const { return static_cast<Digit>(s_[i] - '0'); }
  Digit back() const { return (*this)[s_.size() - 1]; }

  FiniteWord& operator+=(const FiniteWord& o) {
    s_ += o.s_;
    return *this;
  }
  FiniteWord& operator+=(Digit d) {
    s_ += to_char(d);
    return *this;
  }
  friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) { return a += b; }
  friend bool operator==(const FiniteWord& a, const FiniteWord& b) { return a.s_ == b.s_; }
  friend bool operator!=(const FiniteWord& a, const FiniteWord& b) { return a.s_ != b.s_; }
  friend bool operator<(const FiniteWord& a, const FiniteWord& b) { return a.s_ < b.s_; }

  FiniteWord substr(size_t pos, size_t n = std::string::npos) const { return raw(s_.substr(pos, n)); }
  FiniteWord repeat(size_t k) const {
    std::string r;
    r.reserve(s_.size() * k);
    for (size_t i = 0; i < k; ++i) r += s_;
    return raw(std::move(r));
  }
  FiniteWord rotate(size_t i) const {
    if (s_.empty()) return *this;
    i %= s_.size();
    return raw(s_.substr(i) + s_.substr(0, i));
  }
  bool all(Digit d) const { return !s_.empty() && s_.find_first_not_of(to_char(d)) == std::string::npos; }

 private:
  static FiniteWord raw(std::string s) {
    FiniteWord w;
    w.s_ = std::move(s);
    return w;
  }
  std::string s_;
};

inline FiniteWord reverse(const FiniteWord& w) { return FiniteWord(std::string(w.str().rbegin(), w.str().rend())); }

inline FiniteWord vee(const FiniteWord& w) {
  std::string s = w.str();
  for (char& c : s) c = static_cast<char>('4' - (c - '0'));
  return FiniteWord(std::move(s));
}

inline FiniteWord repeat(Digit d, size_t k) { return FiniteWord(std::string(k, to_char(d))); }

// shortest primitive root of a nonempty word
inline FiniteWord primitive_root(const FiniteWord& w) {
  size_t n = w.size();
  for (size_t p = 1; p <= n; ++p)
    if (n % p == 0 && w.substr(0, p).repeat(n / p) == w) return w.substr(0, p);
  return w;
}

// prefix followed by cycle repeated forever; kept canonical (primitive cycle,
// shortest prefix) so that equal infinite words compare equal.
class EvPeriodicWord {
 public:
  EvPeriodicWord() : cycle_("1") {}
  EvPeriodicWord(FiniteWord prefix, FiniteWord cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw Error("empty cycle");
    canonicalize();
  }

  const FiniteWord& prefix() const { return prefix_; }
  const FiniteWord& cycle() const { return cycle_; }

  Digit at(size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
  }
  // the first n digits
  FiniteWord head(size_t n) const {
    std::string s;
    for (size_t i = 0; i < n; ++i) s += to_char(at(i));
    return FiniteWord(s);
  }
  // the tail after dropping k digits
  EvPeriodicWord drop(size_t k) const {
    if (k <= prefix_.size()) return {prefix_.substr(k), cycle_};
    return {FiniteWord(), cycle_.rotate((k - prefix_.size()) % cycle_.size())};
  }
  EvPeriodicWord prepend(const FiniteWord& w) const { return {w + prefix_, cycle_}; }

  friend bool operator==(const EvPeriodicWord& a, const EvPeriodicWord& b) {
    return a.prefix_ == b.prefix_ && a.cycle_ == b.cycle_;
  }
  friend bool operator!=(const EvPeriodicWord& a, const EvPeriodicWord& b) { return !(a == b); }
  friend bool operator<(const EvPeriodicWord& a, const EvPeriodicWord& b) {
    return std::tie(a.prefix_, a.cycle_) < std::tie(b.prefix_, b.cycle_);
  }

  // "prefix(cycle)"
  std::string to_string() const { return prefix_.str() + "(" + cycle_.str() + ")"; }
  static EvPeriodicWord parse(std::string_view s) {
    auto open = s.find('(');
    if (open == std::string_view::npos || s.empty() || s.back() != ')')
      throw Error("word must look like prefix(cycle): " + std::string(s));
    return {FiniteWord(std::string(s.substr(0, open))), FiniteWord(std::string(s.substr(open + 1, s.size() - open - 2)))};
  }

 private:
  void canonicalize() {
    cycle_ = primitive_root(cycle_);
    // pull the prefix's last digit into the cycle while it matches
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
      cycle_ = cycle_.rotate(cycle_.size() - 1);
      prefix_ = prefix_.substr(0, prefix_.size() - 1);
    }
  }
  FiniteWord prefix_;
  FiniteWord cycle_;
};

inline EvPeriodicWord vee(const EvPeriodicWord& w) { return {vee(w.prefix()), vee(w.cycle())}; }

inline const Mobius& digit_matrix(Digit d) {
  static const Mobius n1{1, 0, QSqrt2::sqrt2(), 1};
  static const Mobius n2{1, QSqrt2::sqrt2(), QSqrt2::sqrt2(), 1};
  static const Mobius n3{1, QSqrt2::sqrt2(), 0, 1};
  switch (d) {
    case Digit::one: return n1;
    case Digit::two: return n2;
    default: return n3;
  }
}

inline const Mobius& digit_matrix_inverse(Digit d) {
  static const Mobius i1{1, 0, -QSqrt2::sqrt2(), 1};
  static const Mobius i2{-1, QSqrt2::sqrt2(), QSqrt2::sqrt2(), -1};
  static const Mobius i3{1, -QSqrt2::sqrt2(), 0, 1};
  switch (d) {
    case Digit::one: return i1;
    case Digit::two: return i2;
    default: return i3;
  }
}

inline Mobius word_matrix(const FiniteWord& w) {
  Mobius m;
  for (size_t i = 0; i < w.size(); ++i) m = m * digit_matrix(w[i]);
  return m;
}

// value of the purely periodic word cycle^inf
inline ProjValue eval_cycle(const FiniteWord& cycle) {
  if (cycle.all(Digit::three)) return ProjValue::infinity();
  if (cycle.all(Digit::one)) return ProjValue(0);
  return attracting_fixed_point(word_matrix(cycle));
}

inline ProjValue eval(const EvPeriodicWord& w) { return word_matrix(w.prefix()).apply(eval_cycle(w.cycle())); }

// cylinder of a finite prefix: all values [u, x], x in [0, inf]; endpoints N_u 0, N_u inf
struct Cylinder {
  ProjValue at_zero, at_inf;
};
inline Cylinder cylinder(const FiniteWord& u) {
  Mobius m = word_matrix(u);
  return {m.apply(ProjValue(0)), m.apply(ProjValue::infinity())};
}
inline DyadicInterval cylinder_interval(const FiniteWord& u, unsigned long bits = 128) {
  Mobius m = word_matrix(u);
  if (m.c.is_zero()) throw Error("unbounded cylinder");
  DyadicInterval p = enclose(m.b / m.d, bits), q = enclose(m.a / m.c, bits);
  return hull(p, q);
}

inline Digit leading_digit(const ProjValue& v) {
  static const QuadExt r2 = QuadExt(QSqrt2::sqrt2());
  static const QuadExt r2inv = QuadExt(QSqrt2(0, Rat(1, 2)));
  if (v.is_infinite()) return Digit::three;
  const QuadExt& x = v.value();
  if (sign(x) < 0) throw Error("expansion is defined on [0, inf]");
  if (sign(x - r2) > 0) return Digit::three;
  if (sign(x - r2inv) > 0) return Digit::two;
  return Digit::one;
}

struct Expansion {
  FiniteWord digits;
  ProjValue remainder;
  bool terminated = false;  // remainder reached 0 or inf
};

inline Expansion expand(ProjValue v, size_t n) {
  Expansion e;
  for (size_t i = 0; i < n; ++i) {
    if (v.is_infinite() || v.value().is_zero()) {
      e.terminated = true;
      break;
    }
    Digit d = leading_digit(v);
    e.digits += d;
    v = digit_matrix_inverse(d).apply(v);
  }
  if (v.is_infinite() || v.value().is_zero()) e.terminated = true;
  e.remainder = v;
  return e;
}

// The eventually periodic word of v, found by watching for a repeated remainder.
inline EvPeriodicWord to_word(ProjValue v, size_t max_steps = 4096) {
  std::vector<QuadExt> seen;
  FiniteWord digits;
  for (size_t i = 0; i <= max_steps; ++i) {
    if (v.is_infinite()) return {digits, "3"};
    if (v.value().is_zero()) return {digits, "1"};
    for (size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == v.value()) return {digits.substr(0, j), digits.substr(j)};
    seen.push_back(v.value());
    Digit d = leading_digit(v);
    digits += d;
    v = digit_matrix_inverse(d).apply(v);
  }
  throw Error("no periodic expansion found within the step limit");
}

// A cut P*|Q of a bi-infinite word: `left` is read outward from the cut.
struct BiSection {
  EvPeriodicWord left, right;

  // "left|right" with the left part written as it stands in the word, i.e. "(13)|(2)"
  std::string to_string() const {
    return "(" + reverse(left.cycle()).str() + ")" + reverse(left.prefix()).str() + "|" + right.to_string();
  }
  static BiSection parse(std::string_view s) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos) throw Error("section must contain '|'");
    std::string_view l = s.substr(0, bar);
    auto close = l.find(')');
    if (l.empty() || l.front() != '(' || close == std::string_view::npos)
      throw Error("left part must look like (cycle)prefix: " + std::string(l));
    FiniteWord cyc(std::string(l.substr(1, close - 1)));
    FiniteWord pre(std::string(l.substr(close + 1)));
    return {EvPeriodicWord(reverse(pre), reverse(cyc)), EvPeriodicWord::parse(s.substr(bar + 1))};
  }
  friend bool operator==(const BiSection& a, const BiSection& b) { return a.left == b.left && a.right == b.right; }
};

// Given a geodesic with distinct endpoints xi, eta (not both infinite), find a
// section P*|Q whose value [P] + [Q] bounds |eta - xi| from above.
inline BiSection reduce_pair(const ProjValue& xi0, const ProjValue& eta0) {
  if (xi0 == eta0) throw Error("endpoints must differ");
  if (xi0.is_infinite() || eta0.is_infinite()) throw Error("endpoints must be finite");
  ProjValue xi = xi0, eta = eta0;
  if (sign(xi.value()) > 0 && sign(eta.value()) < 0) std::swap(xi, eta);
  int sx = sign(xi.value()), se = sign(eta.value());
  if (sx <= 0 && se >= 0) return {to_word(-xi.value()), to_word(eta.value())};
  bool negative = sx < 0;
  auto word_of = [&](const ProjValue& v) { return to_word(negative ? -v.value() : v.value()); };
  EvPeriodicWord a = word_of(xi), b = word_of(eta);
  if (a == b) throw Error("endpoints must differ");
  size_t k = 0;
  while (a.at(k) == b.at(k)) ++k;
  if (static_cast<int>(a.at(k)) < static_cast<int>(b.at(k))) std::swap(a, b);
  // a_k > b_k now; c is the third digit
  Digit c = static_cast<Digit>(6 - static_cast<int>(a.at(k)) - static_cast<int>(b.at(k)));
  FiniteWord cw;
  cw += c;
  return {a.drop(k + 1), b.drop(k + 1).prepend(cw)};
}

}  // namespace h4spec
