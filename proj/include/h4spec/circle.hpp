#pragma once
// The quarter circle side: Romik's map on primitive Pythagorean triples, the
// Berggren tree, the stereographic parametrisation, heights and empirical
// Lagrange numbers, and the even-integer continued fraction of a digit word.
//
// All maps act on integer triples (a, b, c) ~ (a/c, b/c).

#include <deque>

#include "romik.hpp"

namespace h4spec {

struct CirclePointQ {
  Int a, b, c;

  CirclePointQ() : a(1), b(0), c(1) {}
  CirclePointQ(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (c <= 0) throw Error("circle point needs c > 0");
    if (a * a + b * b != c * c) throw Error("not a point of the unit circle: a^2 + b^2 != c^2");
    Int g = gcd(gcd(a, b), c);
    if (g != 1) {
      a /= g;
      b /= g;
      c /= g;
    }
  }

  Rat x() const { return make_rat(a, c); }
  Rat y() const { return make_rat(b, c); }
  bool in_quarter() const { return a >= 0 && b >= 0; }
  bool is_fixed() const { return (a == 1 && b == 0) || (a == 0 && b == 1); }
  std::string to_string() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }

  friend bool operator==(const CirclePointQ& p, const CirclePointQ& q) { return p.a == q.a && p.b == q.b && p.c == q.c; }
  friend bool operator<(const CirclePointQ& p, const CirclePointQ& q) {
    return std::tie(p.c, p.a, p.b) < std::tie(q.c, q.a, q.b);
  }
};

inline CirclePointQ parse_triple(std::string_view s) {
  std::vector<Int> v;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    std::string part(s.substr(i, j - i));
    Int z;
    if (part.empty() || z.set_str(part, 10) != 0) throw Error("triple must look like a,b,c: " + std::string(s));
    v.push_back(z);
    i = j + 1;
  }
  if (v.size() != 3) throw Error("triple must look like a,b,c: " + std::string(s));
  return {v[0], v[1], v[2]};
}

// 1 on [4/5, 1], 2 on (3/5, 4/5), 3 on [0, 3/5]
inline Digit circle_digit(const CirclePointQ& p) {
  if (!p.in_quarter()) throw Error("point is outside the closed quarter circle");
  if (5 * p.a >= 4 * p.c) return Digit::one;
  if (5 * p.a > 3 * p.c) return Digit::two;
  return Digit::three;
}

// T(x,y) = (|2 - x - 2y|, |2 - 2x - y|) / (3 - 2x - 2y)
inline std::pair<CirclePointQ, Digit> romik_step(const CirclePointQ& p) {
  Digit d = circle_digit(p);
  Int u = 2 * p.c - p.a - 2 * p.b, v = 2 * p.c - 2 * p.a - p.b, w = 3 * p.c - 2 * p.a - 2 * p.b;
  return {CirclePointQ(abs(u), abs(v), w), d};
}

struct OrbitStep {
  CirclePointQ point;
  Digit digit;
};

// runs T until a fixed point; the last step is the fixed point itself
inline std::vector<OrbitStep> circle_orbit(CirclePointQ p, size_t max_steps = 1000000) {
  std::vector<OrbitStep> out;
  for (size_t i = 0; i < max_steps; ++i) {
    auto [q, d] = romik_step(p);
    out.push_back({p, d});
    if (p.is_fixed()) return out;
    // c drops strictly while a, b > 0
    if (!(q.c < p.c)) throw std::logic_error("Romik orbit failed to descend");
    p = q;
  }
  throw Error("orbit did not reach (1,0) or (0,1)");
}

inline FiniteWord orbit_digits(const std::vector<OrbitStep>& orbit) {
  FiniteWord w;
  for (auto& s : orbit) w += s.digit;
  return w;
}

// H(a,b,c) = (2c - a - 2b, 2c - 2a - b, 3c - 2a - 2b); U_1, U_2, U_3 flip the
// sign of b, of both, of a. The child under U_d has first digit d.
inline std::array<CirclePointQ, 3> berggren_children(const CirclePointQ& t) {
  if (!(t.a > 0 && t.b > 0)) throw Error("Berggren children need a, b > 0");
  auto h = [](const Int& a, const Int& b, const Int& c) {
    return CirclePointQ(2 * c - a - 2 * b, 2 * c - 2 * a - b, 3 * c - 2 * a - 2 * b);
  };
  return {h(t.a, -t.b, t.c), h(-t.a, -t.b, t.c), h(-t.a, t.b, t.c)};
}

// every primitive triple with a, b > 0 and c <= cmax; the two trees rooted at
// (3,4,5) and (4,3,5) (odd and even first leg)
inline std::vector<CirclePointQ> pythagoras_tree(const Int& cmax) {
  std::vector<CirclePointQ> out;
  std::deque<CirclePointQ> todo;
  for (const CirclePointQ& r : {CirclePointQ(3, 4, 5), CirclePointQ(4, 3, 5)})
    if (r.c <= cmax) todo.push_back(r);
  while (!todo.empty()) {
    CirclePointQ t = todo.front();
    todo.pop_front();
    out.push_back(t);
    for (auto& ch : berggren_children(t))
      if (ch.c <= cmax) todo.push_back(ch);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// phi(t) = (2t/(t^2+1), (t^2-1)/(t^2+1)); at t = p/q this is
// (2pq, p^2-q^2, p^2+q^2), halved when p+q is even
inline CirclePointQ stereo(const Rat& t) {
  Int p = t.get_num(), q = t.get_den();
  return {2 * p * q, p * p - q * q, p * p + q * q};
}

inline std::pair<QuadExt, QuadExt> stereo(const QuadExt& t) {
  QuadExt d = t * t + QuadExt(1);
  return {QuadExt(2) * t / d, (t * t - QuadExt(1)) / d};
}

// [P] = (alpha/(1 - beta) - 1)/sqrt2
inline ProjValue mod_proj(const QuadExt& alpha, const QuadExt& beta) {
  QuadExt den = QuadExt(1) - beta;
  if (den.is_zero()) return ProjValue::infinity();
  return ProjValue((alpha / den - QuadExt(1)) * QuadExt(QSqrt2(0, Rat(1, 2))));
}
inline ProjValue mod_proj(const CirclePointQ& p) { return mod_proj(QuadExt(p.x()), QuadExt(p.y())); }

// index-2 sublattices of Z^2
enum class Sublattice { sum_even, num_even, den_even };

inline bool in_sublattice(const Int& p, const Int& q, Sublattice l) {
  switch (l) {
    case Sublattice::sum_even: return mpz_even_p(Int(p + q).get_mpz_t());
    case Sublattice::num_even: return mpz_even_p(p.get_mpz_t());
    case Sublattice::den_even: return mpz_even_p(q.get_mpz_t());
  }
  return false;
}

struct HeightedRational {
  Int p, q;
  Rat height;
};

inline HeightedRational heighted(const Rat& r, Sublattice l = Sublattice::sum_even) {
  Int p = r.get_num(), q = r.get_den();
  Rat h(q * q);
  if (in_sublattice(p, q, l)) h /= 2;
  return {p, q, h};
}

struct LagrangeEstimate {
  Rat value;  // a lower bound for the maximum over the window
  bool unbounded = false;
  Int p, q;        // the best candidate (p/q, or the triple's parameter)
  Int window_lo;   // candidates below this size were skipped
};

namespace detail {
inline bool is_rational(const QuadExt& x) { return x.in_base() && x.x().is_rational(); }
inline unsigned long scan_bits(const Int& n) { return 96 + 4 * mpz_sizeinbase(n.get_mpz_t(), 2); }
}  // namespace detail

// max of 1/(Ht(p/q) |alpha - p/q|) over qmin <= q <= qmax. Only
// p = floor(alpha q), floor(alpha q) + 1 are scanned: every other p is at
// distance >= 1/q and contributes at most 2/q. A qmin > 1 drops the small
// denominators, which do not bear on the limsup.
inline LagrangeEstimate lagrange_estimate(const QuadExt& alpha, long qmax, Sublattice l = Sublattice::sum_even,
                                          long qmin = 1) {
  if (qmax < 1) throw Error("qmax must be >= 1");
  if (qmin < 1 || qmin > qmax) throw Error("need 1 <= qmin <= qmax");
  LagrangeEstimate out;
  if (detail::is_rational(alpha)) {
    out.unbounded = true;
    return out;
  }
  DyadicInterval x = enclose(alpha, detail::scan_bits(Int(qmax)));
  Rat w = x.width();
  out.window_lo = qmin;
  Rat best_den(-1);  // minimise Ht * (|x.lo - p/q| + w)
  for (long qi = qmin; qi <= qmax; ++qi) {
    Int q(qi);
    Int p0 = floor_div(x.lo * Rat(q));
    for (Int p : {p0, Int(p0 + 1)}) {
      if (gcd(p, q) != 1) continue;
      Rat ht(q * q);
      if (in_sublattice(p, q, l)) ht /= 2;
      Rat den = ht * (abs_rat(x.lo - make_rat(p, q)) + w);
      if (best_den < 0 || den < best_den) {
        best_den = den;
        out.p = p;
        out.q = q;
      }
    }
  }
  out.value = 1 / best_den;
  return out;
}

// the point is phi(t); max of 1/(c |phi(t) - (a/c, b/c)|) over primitive points
// with hmin <= c <= hmax. Points near phi(t) are phi(p/q) with p/q near t,
// so the same two p per q are scanned, q up to sqrt(2 hmax).
inline LagrangeEstimate circle_lagrange_estimate(const QuadExt& t, const Int& hmax, const Int& hmin = Int(1)) {
  if (hmax < 1) throw Error("hmax must be >= 1");
  if (hmin < 1 || hmin > hmax) throw Error("need 1 <= hmin <= hmax");
  LagrangeEstimate out;
  if (detail::is_rational(t)) {
    out.unbounded = true;
    return out;
  }
  unsigned long bits = detail::scan_bits(hmax);
  auto [al, be] = stereo(t);
  DyadicInterval ai = enclose(al, bits), bi = enclose(be, bits), ti = enclose(t, bits);
  out.window_lo = hmin;
  Int qtop = floor_sqrt(2 * hmax) + 1;
  Rat best2(0);  // lower bound for the squared reciprocal quality
  for (Int q = 1; q <= qtop; ++q) {
    Int p0 = floor_div(ti.lo * Rat(q));
    for (Int p : {p0, Int(p0 + 1)}) {
      if (gcd(p, q) != 1) continue;
      CirclePointQ pt = stereo(make_rat(p, q));
      if (pt.c > hmax || pt.c < hmin) continue;
      DyadicInterval dx = ai - DyadicInterval::point(pt.x()), dy = bi - DyadicInterval::point(pt.y());
      Rat d2 = std::max(dx.lo * dx.lo, dx.hi * dx.hi) + std::max(dy.lo * dy.lo, dy.hi * dy.hi);
      Rat v2 = 1 / (Rat(pt.c * pt.c) * d2);
      if (v2 > best2) {
        best2 = v2;
        out.p = p;
        out.q = q;
      }
    }
  }
  out.value = sqrt_interval(DyadicInterval::point(best2), 128).lo;
  return out;
}

struct EvenCfTerm {
  long a;   // partial quotient 2a
  int eps;  // sign of the numerator before this term; 0 for the first
};

// t = 2a_0 + eps_1/(2a_1 + eps_2/(2a_2 + ...)) for t = sqrt2 [P] + 1, where
// k_0 = 0 < k_1 < k_2 < ... index the digits of P other than 3 (from 1),
// a_i = k_{i+1} - k_i and eps_i = -1 if d_{k_i} = 1, +1 if d_{k_i} = 2
inline std::vector<EvenCfTerm> even_cf(const EvPeriodicWord& w, size_t count = 16) {
  if (w.cycle().all(Digit::three)) throw Error("even continued fraction needs infinitely many digits other than 3");
  std::vector<EvenCfTerm> out;
  size_t prev = 0;
  int eps = 0;
  for (size_t k = 1; out.size() < count; ++k) {
    Digit d = w.at(k - 1);
    if (d == Digit::three) continue;
    out.push_back({static_cast<long>(k - prev), eps});
    eps = d == Digit::one ? -1 : 1;
    prev = k;
  }
  return out;
}

// value of the truncated fraction (the tail after the last term dropped)
inline Rat even_cf_value(const std::vector<EvenCfTerm>& terms) {
  if (terms.empty()) throw Error("empty continued fraction");
  Rat v(2 * terms.back().a);
  for (size_t i = terms.size() - 1; i-- > 0;) v = Rat(2 * terms[i].a) + Rat(terms[i + 1].eps) / v;
  return v;
}

}  // namespace h4spec
