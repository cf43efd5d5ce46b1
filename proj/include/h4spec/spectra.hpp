#pragma once
// Markoff and Lagrange values of bi-infinite words, and the quadratic-form
// side of the same numbers.

#include "romik.hpp"

namespace h4spec {

// A purely periodic bi-infinite word, stored as the least representative of
// its class under rotation, reversal and the digit swap 1 <-> 3.
class PeriodicBiWord {
 public:
  explicit PeriodicBiWord(const FiniteWord& cycle) : cycle_(canonical(cycle)) {}
  static PeriodicBiWord parse(std::string_view s) {
    std::string t(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    return PeriodicBiWord(FiniteWord(t));
  }

  const FiniteWord& cycle() const { return cycle_; }
  std::string to_string() const { return "(" + cycle_.str() + ")"; }
  friend bool operator==(const PeriodicBiWord& a, const PeriodicBiWord& b) { return a.cycle_ == b.cycle_; }

  static FiniteWord least_rotation(const FiniteWord& w) {
    FiniteWord best = w;
    for (size_t i = 1; i < w.size(); ++i) best = std::min(best, w.rotate(i));
    return best;
  }
  static FiniteWord canonical(const FiniteWord& w) {
    if (w.empty()) throw Error("empty cycle");
    FiniteWord p = primitive_root(w);
    FiniteWord best = least_rotation(p);
    for (const FiniteWord& v : {reverse(p), vee(p), reverse(vee(p))}) best = std::min(best, least_rotation(v));
    return best;
  }
  static bool is_canonical(const FiniteWord& w) { return primitive_root(w) == w && canonical(w) == w; }

 private:
  FiniteWord cycle_;
};

// ...L L L M R R R...
struct SplicedBiWord {
  FiniteWord left_cycle, middle, right_cycle;

  std::string to_string() const { return "(" + left_cycle.str() + ")" + middle.str() + "(" + right_cycle.str() + ")"; }
  static SplicedBiWord parse(std::string_view s) {
    auto c1 = s.find(')'), o2 = s.rfind('(');
    if (s.empty() || s.front() != '(' || c1 == std::string_view::npos || o2 == std::string_view::npos || o2 < c1 ||
        s.back() != ')')
      throw Error("spliced word must look like (L)M(R): " + std::string(s));
    SplicedBiWord w{FiniteWord(std::string(s.substr(1, c1 - 1))), FiniteWord(std::string(s.substr(c1 + 1, o2 - c1 - 1))),
                    FiniteWord(std::string(s.substr(o2 + 1, s.size() - o2 - 2)))};
    if (w.left_cycle.empty() || w.right_cycle.empty()) throw Error("empty cycle");
    return w;
  }
};

inline SplicedBiWord vee(const SplicedBiWord& w) { return {vee(w.left_cycle), vee(w.middle), vee(w.right_cycle)}; }

struct SectionValue {
  bool infinite = false;
  Real value;
};

inline SectionValue section_value(const BiSection& s) {
  ProjValue p = eval(s.left), q = eval(s.right);
  if (p.is_infinite() || q.is_infinite()) return {true, Real()};
  return {false, Real(p.value()) + Real(q.value())};
}

// The sections of cycle^Z and of its swap all have the form
//   [P_i] + [Q_i] = sqrt(tr^2 - 4 det) / c_i
// with c_i the lower-left entry of the i-th rotation's matrix (b_i for the
// swapped word), so M is sqrt(D) over the least such entry.
inline ProjValue markoff_periodic(const PeriodicBiWord& t) {
  const FiniteWord& w = t.cycle();
  if (w.all(Digit::one) || w.all(Digit::three)) return ProjValue::infinity();
  Mobius m = word_matrix(w);
  QSqrt2 tr = m.trace();
  QSqrt2 disc = tr * tr - 4 * m.det();
  QSqrt2 least = m.c;
  for (size_t i = 0;; ++i) {
    if (sign(m.b - least) < 0) least = m.b;
    if (sign(m.c - least) < 0) least = m.c;
    if (i + 1 == w.size()) break;
    m = digit_matrix_inverse(w[i]) * m * digit_matrix(w[i]);
  }
  if (sign(least) <= 0) return ProjValue::infinity();
  return QuadExt::make(0, least.inverse(), disc);
}

// all 2|w| sections of the periodic word, evaluated one by one
inline std::vector<BiSection> periodic_sections(const FiniteWord& w) {
  std::vector<BiSection> out;
  for (const FiniteWord& v : {w, vee(w)}) {
    for (size_t i = 0; i < v.size(); ++i) {
      FiniteWord r = v.rotate(i);
      out.push_back({EvPeriodicWord(FiniteWord(), reverse(r)), EvPeriodicWord(FiniteWord(), r)});
    }
  }
  return out;
}

struct MarkoffBound {
  DyadicInterval enclosure;
  std::optional<QuadExt> exact;  // set when the supremum is certified as attained and single-field
  Real lower, upper;             // exact bracketing values (lower attained or a limit)
  size_t depth = 0;              // copies of each cycle unrolled
};

namespace detail {

inline QuadExt proj_upper(const Cylinder& c) {
  if (c.at_zero.is_infinite() || c.at_inf.is_infinite()) throw Error("unbounded cylinder");
  return sign(c.at_zero.value() - c.at_inf.value()) > 0 ? c.at_zero.value() : c.at_inf.value();
}

// sup of the sections of ...L L [core] R R... where core = L^k M R^k
struct SplicedScan {
  Real best;
  bool infinite = false;
  Real tail_upper;  // bound for every cut outside the core
};

inline SplicedScan scan_spliced(const SplicedBiWord& w, size_t k) {
  SplicedScan s;
  FiniteWord core = w.left_cycle.repeat(k) + w.middle + w.right_cycle.repeat(k);
  FiniteWord revL = reverse(w.left_cycle);
  bool have = false;
  for (size_t j = 0; j <= core.size(); ++j) {
    BiSection sec{EvPeriodicWord(reverse(core.substr(0, j)), revL), EvPeriodicWord(core.substr(j), w.right_cycle)};
    SectionValue v = section_value(sec);
    if (v.infinite) {
      s.infinite = true;
      return s;
    }
    if (!have || v.value > s.best) s.best = v.value, have = true;
  }
  // cuts further right: right side is a rotation of R, left side starts with
  // (R^k rotated) read backwards
  bool have_tail = false;
  auto bump = [&](const Real& v) {
    if (!have_tail || v > s.tail_upper) s.tail_upper = v, have_tail = true;
  };
  const FiniteWord& R = w.right_cycle;
  for (size_t r = 0; r < R.size(); ++r) {
    ProjValue q = eval_cycle(R.rotate(r));
    FiniteWord back = reverse(R.repeat(k) + R.substr(0, r));
    Cylinder cyl = cylinder(back);
    if (q.is_infinite() || cyl.at_inf.is_infinite()) {
      s.infinite = true;
      return s;
    }
    bump(Real(q.value()) + Real(proj_upper(cyl)));
  }
  const FiniteWord& L = w.left_cycle;
  for (size_t r = 0; r < L.size(); ++r) {
    // cut with r digits of L to its right before the core starts
    FiniteWord right = L.substr(L.size() - r) + L.repeat(k);
    FiniteWord left_cycle = reverse(L.rotate(L.size() - r));
    ProjValue p = eval_cycle(left_cycle);
    Cylinder cyl = cylinder(right);
    if (p.is_infinite() || cyl.at_inf.is_infinite()) {
      s.infinite = true;
      return s;
    }
    bump(Real(p.value()) + Real(proj_upper(cyl)));
  }
  return s;
}

}  // namespace detail

inline MarkoffBound markoff_spliced(const SplicedBiWord& w, const Rat& tol = Rat(1, 1000000000)) {
  if (tol <= 0) throw Error("tolerance must be positive");
  // a genuinely periodic word goes to the closed form
  {
    FiniteWord pl = primitive_root(w.left_cycle), pr = primitive_root(w.right_cycle);
    std::string core = (pl.repeat(2) + w.middle + pr.repeat(2)).str();
    size_t p = pl.size();
    bool periodic = pl.size() == pr.size();
    for (size_t i = 0; periodic && i + p < core.size(); ++i) periodic = core[i] == core[i + p];
    if (periodic) {
      ProjValue m = markoff_periodic(PeriodicBiWord(pl));
      if (m.is_infinite()) throw Error("Markoff value is infinite");
      return {to_interval(m.value(), tol), m.value(), Real(m.value()), Real(m.value()), 0};
    }
  }
  ProjValue ml = markoff_periodic(PeriodicBiWord(w.left_cycle));
  ProjValue mr = markoff_periodic(PeriodicBiWord(w.right_cycle));
  if (ml.is_infinite() || mr.is_infinite()) throw Error("Markoff value is infinite");
  Real limit = max(Real(ml.value()), Real(mr.value()));
  for (size_t k = 2;; k *= 2) {
    detail::SplicedScan a = detail::scan_spliced(w, k), b = detail::scan_spliced(vee(w), k);
    if (a.infinite || b.infinite) throw Error("Markoff value is infinite");
    Real core = max(a.best, b.best);
    Real tail = max(a.tail_upper, b.tail_upper);
    Real lower = max(core, limit);
    if (core >= limit && tail < core) {
      std::optional<QuadExt> ex = core.as_quad();
      return {to_interval(core, tol), ex, core, core, k};
    }
    Real upper = max(core, tail);
    if (sign(upper - lower - Real(tol)) <= 0) {
      DyadicInterval lo = to_interval(lower, tol), hi = to_interval(upper, tol);
      return {DyadicInterval(lo.lo, hi.hi), std::nullopt, lower, upper, k};
    }
    if (k > 4096) throw Error("spliced Markoff value did not converge");
  }
}

// Lagrange value of the one-sided word: only the tail cycle matters.
inline ProjValue lagrange_ev_periodic(const EvPeriodicWord& w) { return markoff_periodic(PeriodicBiWord(w.cycle())); }

// Checks limsup <= sup on the word ...333 P  with P = prefix cycle^inf, using
// sections evaluated directly (left parts are finite words followed by 3s).
// For each unrolling depth K the best section is compared with M + the width of
// the cylinder that bounds its distance to a periodic section.
struct LagrangeCheck {
  bool ok = true;
  std::vector<DyadicInterval> depth_maxima;
};

inline LagrangeCheck lagrange_leq_markoff_check(const PeriodicBiWord& t, const FiniteWord& prefix = FiniteWord(),
                                                size_t max_depth = 6) {
  LagrangeCheck out;
  ProjValue mp = markoff_periodic(t);
  if (mp.is_infinite()) return out;
  Real M(mp.value());
  const FiniteWord& w = t.cycle();
  for (size_t K = 1; K <= max_depth; ++K) {
    bool have = false;
    Real best;
    Rat slack = 0;
    for (const bool swapped : {false, true}) {
      FiniteWord cw = swapped ? vee(w) : w, pw = swapped ? vee(prefix) : prefix;
      FiniteWord three = swapped ? FiniteWord("1") : FiniteWord("3");
      for (size_t r = 0; r < cw.size(); ++r) {
        FiniteWord before = pw + cw.repeat(K) + cw.substr(0, r);
        SectionValue v = section_value({EvPeriodicWord(reverse(before), three), EvPeriodicWord(FiniteWord(), cw.rotate(r))});
        if (v.infinite) continue;
        if (!have || v.value > best) best = v.value, have = true;
        FiniteWord common = reverse(cw.repeat(K) + cw.substr(0, r));
        DyadicInterval ci = cylinder_interval(common);
        slack = std::max(slack, ci.width());
      }
    }
    if (!have) continue;
    out.depth_maxima.push_back(to_interval(best, Rat(1, 1000000)));
    if (best > M + Real(slack)) out.ok = false;
  }
  return out;
}

// f(x, y) = a x^2 + b x y + c y^2
struct QuadForm {
  QuadExt a, b, c;
  QuadExt discriminant() const { return b * b - QuadExt(4) * a * c; }
  QuadExt operator()(long x, long y) const {
    QuadExt X(x), Y(y);
    return a * X * X + b * X * Y + c * Y * Y;
  }
};

// f = (x - sqrt2 xi y)(x - sqrt2 eta y), discriminant 2 (eta - xi)^2
inline QuadForm form_from_geodesic(const QuadExt& xi, const QuadExt& eta) {
  if (xi == eta) throw Error("endpoints must differ");
  QuadExt r2(QSqrt2::sqrt2());
  return {QuadExt(1), -r2 * (xi + eta), QuadExt(2) * xi * eta};
}

// sqrt(disc) / min |f| over the lattice 2Z x Z (weight 1/2) and its odd-x coset,
// for 0 < max(|x|, |y|) <= box.  Per row only integers near the two roots matter.
inline QuadExt brute_force_ratio_exact(const QuadForm& f, const QuadExt& sqrt_disc, long box) {
  if (box < 1) throw Error("box must be positive");
  if (f.a.is_zero()) throw Error("form vanishes on (1, 0)");
  // roots in x for y = 1 : x = r y
  QuadExt disc = f.discriminant();
  if (sign(disc) <= 0) throw Error("form must be indefinite");
  QuadExt sd = sqrt_disc;
  QuadExt r1 = (-f.b + sd) / (QuadExt(2) * f.a), r2 = (-f.b - sd) / (QuadExt(2) * f.a);
  DyadicInterval e1 = to_interval(r1, Rat(1, Int(1) << 40)), e2 = to_interval(r2, Rat(1, Int(1) << 40));
  bool have = false;
  QuadExt best;
  auto consider = [&](long x, long y) {
    if (x == 0 && y == 0) return;
    if (x < -box || x > box) return;
    QuadExt v = abs(f(x, y));
    if (v.is_zero()) throw Error("form represents 0");
    if (x % 2 == 0) v = v / QuadExt(2);
    if (!have || sign(v - best) < 0) best = v, have = true;
  };
  for (long y = 0; y <= box; ++y) {
    std::vector<long> xs = {-box, box, 1, -1, 0, 2, -2};
    for (const DyadicInterval* e : {&e1, &e2}) {
      long c = floor_div(e->mid() * y).get_si();
      for (long d = -2; d <= 3; ++d) xs.push_back(c + d);
    }
    for (long x : xs) {
      if (y == 0 && x <= 0) continue;
      consider(x, y);
    }
  }
  return sqrt_disc / best;
}

inline DyadicInterval brute_force_ratio(const QuadForm& f, const QuadExt& sqrt_disc, long box,
                                        const Rat& eps = Rat(1, Int(1) << 60)) {
  return to_interval(brute_force_ratio_exact(f, sqrt_disc, box), eps);
}

// geodesic convenience: sqrt(disc) = sqrt2 |eta - xi|
inline DyadicInterval brute_force_ratio(const QuadExt& xi, const QuadExt& eta, long box) {
  return brute_force_ratio(form_from_geodesic(xi, eta), QuadExt(QSqrt2::sqrt2()) * abs(eta - xi), box);
}

}  // namespace h4spec
