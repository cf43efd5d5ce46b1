#pragma once
// Closed rational intervals with dyadic endpoints, plus certified enclosures
// of Q(sqrt2) and quadratic-extension numbers.

#include <algorithm>

#include "quadext.hpp"

namespace h4spec {

struct DyadicInterval {
  Rat lo, hi;

  DyadicInterval() = default;
  DyadicInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw Error("empty interval");
  }
  static DyadicInterval point(const Rat& r) { return {r, r}; }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& r) const { return lo <= r && r <= hi; }
  bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const DyadicInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  DyadicInterval operator-() const { return {-hi, -lo}; }
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
    Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  }
  friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) {
    if (b.contains(Rat(0))) throw Error("interval division by an interval containing 0");
    return a * DyadicInterval(1 / b.hi, 1 / b.lo);
  }
  friend DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
};

// widen outward to multiples of 2^-bits (keeps denominators from exploding)
inline DyadicInterval round_out(const DyadicInterval& v, unsigned long bits) {
  Int s = pow2(bits);
  Rat lo = make_rat(floor_div(v.lo * s), s);
  Rat hi = make_rat(ceil_div(v.hi * s), s);
  return {lo, hi};
}

inline DyadicInterval sqrt_interval(const DyadicInterval& v, unsigned long bits) {
  if (v.lo < 0) throw Error("square root of an interval reaching below 0");
  Int s2 = pow2(2 * bits);
  Int lo = floor_sqrt(floor_div(v.lo * s2));
  Int hi = floor_sqrt(ceil_div(v.hi * s2)) + 1;
  Int s = pow2(bits);
  return {make_rat(lo, s), make_rat(hi, s)};
}

inline DyadicInterval sqrt2_interval(unsigned long bits) { return sqrt_interval(DyadicInterval::point(2), bits); }

inline DyadicInterval enclose(const QSqrt2& v, unsigned long bits) {
  if (v.b() == 0) return DyadicInterval::point(v.a());
  DyadicInterval r = DyadicInterval::point(v.a()) + DyadicInterval::point(v.b()) * sqrt2_interval(bits);
  return round_out(r, bits + 2);
}

inline DyadicInterval enclose(const QuadExt& v, unsigned long bits) {
  DyadicInterval x = enclose(v.x(), bits);
  if (v.in_base()) return x;
  DyadicInterval d = enclose(v.delta(), bits + 4);
  while (d.lo <= 0) d = enclose(v.delta(), bits *= 2);
  DyadicInterval r = x + enclose(v.y(), bits) * sqrt_interval(d, bits);
  return round_out(r, bits + 2);
}

// adaptive: width <= eps.  A point interval for rationals.
template <class T>
DyadicInterval to_interval(const T& v, const Rat& eps) {
  if (eps <= 0) throw Error("tolerance must be positive");
  unsigned long bits = 64;
  for (;;) {
    DyadicInterval r = enclose(v, bits);
    if (r.width() <= eps) return r;
    if (bits > (1ul << 20)) throw Error("enclosure did not converge");
    bits *= 2;
  }
}

inline double to_double(const QuadExt& v) { return enclose(v, 64).mid().get_d(); }

}  // namespace h4spec
