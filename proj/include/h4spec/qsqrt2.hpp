#pragma once
// Q(sqrt2): a + b*sqrt2 with rational a, b.

#include <ostream>
#include <utility>

#include "rational.hpp"

namespace h4spec {

class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rat a, Rat b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  QSqrt2(long a) : a_(a), b_(0) {}
  QSqrt2(int a) : a_(a), b_(0) {}

  static QSqrt2 sqrt2() { return {Rat(0), Rat(1)}; }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

  QSqrt2 conj() const { return {a_, -b_}; }
  Rat norm() const { return a_ * a_ - 2 * b_ * b_; }

  QSqrt2 inverse() const {
    Rat n = norm();
    if (n == 0) throw Error("division by zero in Q(sqrt2)");
    return {a_ / n, -b_ / n};
  }

  QSqrt2 operator-() const { return {-a_, -b_}; }
  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rat na = a_ * o.a_ + 2 * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QSqrt2& operator/=(const QSqrt2& o) {
    if (o.b_ == 0) {
      if (o.a_ == 0) throw Error("division by zero in Q(sqrt2)");
      a_ /= o.a_;
      b_ /= o.a_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rat a_ = 0;
  Rat b_ = 0;
};

// exact sign of a + b*sqrt2
inline int sign(const QSqrt2& v) {
  int sa = sgn(v.a()), sb = sgn(v.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 2 b^2 (never equal, sqrt2 is irrational)
  Rat d = v.a() * v.a() - 2 * v.b() * v.b();
  return sgn(d) > 0 ? sa : sb;
}

inline bool operator<(const QSqrt2& x, const QSqrt2& y) { return sign(x - y) < 0; }
inline bool operator>(const QSqrt2& x, const QSqrt2& y) { return sign(x - y) > 0; }
inline bool operator<=(const QSqrt2& x, const QSqrt2& y) { return sign(x - y) <= 0; }
inline bool operator>=(const QSqrt2& x, const QSqrt2& y) { return sign(x - y) >= 0; }

inline QSqrt2 abs(const QSqrt2& v) { return sign(v) < 0 ? -v : v; }

inline QSqrt2 pow(QSqrt2 base, unsigned e) {
  QSqrt2 r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// non-negative square root inside Q(sqrt2), if there is one
inline std::optional<QSqrt2> sqrt_exact(const QSqrt2& v) {
  int s = sign(v);
  if (s < 0) return std::nullopt;
  if (s == 0) return QSqrt2();
  if (v.b() == 0) {
    if (auto r = rat_sqrt(v.a())) return QSqrt2(*r);
    if (auto r = rat_sqrt(v.a() / 2)) return QSqrt2(Rat(0), *r);
    return std::nullopt;
  }
  // (x + y sqrt2)^2 = v  =>  x^2 + 2y^2 = a, 2xy = b, and x^2 - 2y^2 = +-sqrt(norm)
  auto n = rat_sqrt(v.norm());
  if (!n) return std::nullopt;
  for (const Rat& x2 : {Rat((v.a() + *n) / 2), Rat((v.a() - *n) / 2)}) {
    auto x = rat_sqrt(x2);
    if (!x || *x == 0) continue;
    QSqrt2 r(*x, v.b() / (2 * *x));
    if (r * r == v) return sign(r) < 0 ? -r : r;
  }
  return std::nullopt;
}

inline std::string to_string(const QSqrt2& v) {
  if (v.b() == 0) return v.a().get_str();
  std::string out;
  if (v.a() != 0) out = v.a().get_str() + (v.b() > 0 ? "+" : "");
  if (v.b() == 1)
    out += "sqrt2";
  else if (v.b() == -1)
    out += "-sqrt2";
  else
    out += v.b().get_str() + "*sqrt2";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const QSqrt2& v) { return os << to_string(v); }

}  // namespace h4spec
