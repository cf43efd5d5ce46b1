#pragma once
// 2x2 matrices over Q(sqrt2) acting by fractional linear maps, and points of
// the projective line over a quadratic extension.

#include "real.hpp"

namespace h4spec {

class ProjValue {
 public:
  ProjValue() = default;
  ProjValue(QuadExt v) : v_(std::move(v)) {}
  ProjValue(const QSqrt2& v) : v_(v) {}
  ProjValue(int v) : v_(v) {}
  static ProjValue infinity() {
    ProjValue p;
    p.inf_ = true;
    return p;
  }
  bool is_infinite() const { return inf_; }
  const QuadExt& value() const {
    if (inf_) throw Error("value is infinite");
    return v_;
  }
  friend bool operator==(const ProjValue& a, const ProjValue& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ProjValue& a, const ProjValue& b) { return !(a == b); }

 private:
  bool inf_ = false;
  QuadExt v_;
};

inline std::string to_string(const ProjValue& p) { return p.is_infinite() ? "inf" : to_string(p.value()); }

struct Mobius {
  QSqrt2 a = 1, b = 0, c = 0, d = 1;

  QSqrt2 det() const { return a * d - b * c; }
  QSqrt2 trace() const { return a + d; }

  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const Mobius& m, const Mobius& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }

  Mobius inverse() const {
    QSqrt2 di = det().inverse();
    return {d * di, -b * di, -c * di, a * di};
  }
  Mobius transpose() const { return {a, c, b, d}; }

  ProjValue apply(const ProjValue& v) const {
    if (v.is_infinite()) {
      if (c.is_zero()) return ProjValue::infinity();
      return QuadExt(a / c);
    }
    QuadExt den = QuadExt(c) * v.value() + QuadExt(d);
    QuadExt num = QuadExt(a) * v.value() + QuadExt(b);
    if (den.is_zero()) return ProjValue::infinity();
    return num / den;
  }
};

struct NoFixedPoint : Error {
  using Error::Error;
};

// The fixed point that attracts under iteration; defined for hyperbolic maps
// (and the c = 0 dilations).  The attracting root r has |c r + d|^2 > |det|.
inline ProjValue attracting_fixed_point(const Mobius& m) {
  QSqrt2 det = m.det();
  if (det.is_zero()) throw NoFixedPoint("singular matrix");
  QSqrt2 adet = abs(det);
  if (m.c.is_zero()) {
    if (m.a == m.d) throw NoFixedPoint("parabolic or identity map");
    // v -> (a/d) v + b/d
    QSqrt2 ratio = abs(m.a / m.d);
    if (sign(ratio - QSqrt2(1)) > 0) return ProjValue::infinity();
    return QuadExt(m.b / (m.d - m.a));
  }
  QSqrt2 tr = m.trace();
  QSqrt2 disc = tr * tr - 4 * det;
  if (sign(disc) <= 0) throw NoFixedPoint("map is not hyperbolic");
  QSqrt2 inv2c = (2 * m.c).inverse();
  for (int s : {1, -1}) {
    QuadExt r = QuadExt::make((m.a - m.d) * inv2c, QSqrt2(s) * inv2c, disc);
    QuadExt crd = QuadExt(m.c) * r + QuadExt(m.d);
    if (sign(crd * crd - QuadExt(adet)) > 0) return r;
  }
  throw NoFixedPoint("no attracting fixed point");
}

}  // namespace h4spec
