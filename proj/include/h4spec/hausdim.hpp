#pragma once
// Lower bound for the Hausdorff dimension of the Lagrange spectrum near 2 sqrt2:
// the IFS on [alpha, beta] built from A = 3 2^(2m+2) 1 and B = 3 2^(2m) 1.

#include <mpfr.h>

#include <array>

#include "spectra.hpp"

namespace h4spec {

inline FiniteWord word_a(unsigned m) { return FiniteWord("3") + repeat(Digit::two, 2 * m + 2) + FiniteWord("1"); }
inline FiniteWord word_b(unsigned m) { return FiniteWord("3") + repeat(Digit::two, 2 * m) + FiniteWord("1"); }

// [(A)^inf] + 1/[(B)^inf], which decreases to 2 sqrt2 as m grows
inline Real ebound_value(unsigned m) {
  return Real(eval_cycle(word_a(m)).value()) + Real(eval_cycle(word_b(m)).value().inverse());
}

inline unsigned choose_m(const Rat& eps, unsigned m_max = 10000) {
  if (eps <= 0) throw Error("eps must be positive");
  Real target = Real(QuadExt(QSqrt2(eps, 2)));
  for (unsigned m = 0; m <= m_max; ++m)
    if (ebound_value(m) < target) return m;
  throw Error("no m up to the search limit");
}

// N_3 N_2^k N_1 = 1/2 ( u^(k+2) + v^(k+2), u^(k+1) - v^(k+1) ; u^(k+1) - v^(k+1), u^k + v^k ),  u, v = 1 +- sqrt2
inline Mobius closed_form_n3_n2k_n1(unsigned k) {
  QSqrt2 u(1, 1), v(1, -1), h(Rat(1, 2));
  return {h * (pow(u, k + 2) + pow(v, k + 2)), h * (pow(u, k + 1) - pow(v, k + 1)), h * (pow(u, k + 1) - pow(v, k + 1)),
          h * (pow(u, k) + pow(v, k))};
}

struct IfsSpec {
  unsigned m = 0;
  Mobius na, nb;
  QuadExt alpha, beta;
  std::array<Mobius, 4> maps;
  std::array<QuadExt, 4> c;  // inf of |f_i'| on [alpha, beta]
};

inline IfsSpec ifs_build(unsigned m) {
  IfsSpec f;
  f.m = m;
  f.na = word_matrix(word_a(m));
  f.nb = word_matrix(word_b(m));
  if (!(f.na == closed_form_n3_n2k_n1(2 * m + 2)) || !(f.nb == closed_form_n3_n2k_n1(2 * m)))
    throw std::logic_error("closed form of N_A / N_B disagrees with the matrix product");
  FiniteWord a = word_a(m), b = word_b(m);
  f.alpha = eval_cycle(b + b + a).value();
  f.beta = eval_cycle(b + a + a).value();
  f.maps = {f.nb * f.nb * f.na, f.nb * f.nb * f.na * f.na, f.nb * f.na, f.nb * f.na * f.na};
  Real lo(f.alpha), hi(f.beta);
  if (!(lo < hi)) throw std::logic_error("alpha >= beta");
  for (size_t i = 0; i < 4; ++i) {
    const Mobius& g = f.maps[i];
    if (!(g.det() == QSqrt2(1))) throw std::logic_error("IFS map with det != 1");
    for (const QuadExt* x : {&f.alpha, &f.beta}) {
      Real y(g.apply(ProjValue(*x)).value());
      if (y < lo || y > hi) throw std::logic_error("IFS map leaves [alpha, beta]");
    }
    // f' = 1/(cx+d)^2 decreases on x > 0, so the infimum sits at beta
    QuadExt den = QuadExt(g.c) * f.beta + QuadExt(g.d);
    f.c[i] = (den * den).inverse();
  }
  return f;
}

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v_, p); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

inline Rat to_rat(mpfr_ptr x) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  Rat r(m);
  if (e >= 0) r *= Rat(pow2(static_cast<unsigned long>(e)));
  else r /= Rat(pow2(static_cast<unsigned long>(-e)));
  return r;
}

// directed-rounding enclosure of sum_i c_i^s for c_i in [lo_i, hi_i] (0 < lo_i) and a dyadic s > 0
inline DyadicInterval power_sum(const std::vector<DyadicInterval>& c, const Rat& s, mpfr_prec_t prec) {
  Mpfr se(prec), x(prec), y(prec), lo(prec), hi(prec);
  if (mpfr_set_q(se.get(), s.get_mpq_t(), MPFR_RNDN) != 0) throw Error("exponent not representable");
  mpfr_set_ui(lo.get(), 0, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 0, MPFR_RNDN);
  for (const DyadicInterval& ci : c) {
    // t -> t^s increases for s > 0
    mpfr_set_q(x.get(), ci.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_pow(y.get(), x.get(), se.get(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), y.get(), MPFR_RNDD);
    mpfr_set_q(x.get(), ci.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_pow(y.get(), x.get(), se.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), y.get(), MPFR_RNDU);
  }
  return {to_rat(lo.get()), to_rat(hi.get())};
}

}  // namespace detail

struct DimBound {
  IfsSpec ifs;
  DyadicInterval s;         // the root of sum c_i^s = 1 lies here
  DyadicInterval residual;  // sum c_i^s - 1 at the midpoint of s
};

inline DimBound dim_lower_bound(const Rat& eps, const Rat& tol) {
  if (tol <= 0) throw Error("tol must be positive");
  DimBound out;
  out.ifs = ifs_build(choose_m(eps));
  std::vector<DyadicInterval> c;
  for (auto& ci : out.ifs.c) {
    // relative accuracy 1e-30
    unsigned long bits = 128;
    DyadicInterval e = enclose(ci, bits);
    while (e.lo <= 0 || e.width() * pow10(30) > e.lo) e = enclose(ci, bits *= 2);
    c.push_back(e);
  }
  mpfr_prec_t prec = 128;
  Rat lo(0), hi(1);
  if (detail::power_sum(c, hi, prec).hi >= 1) throw Error("contraction sum at s = 1 is not below 1");
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    DyadicInterval v = detail::power_sum(c, mid, prec);
    if (v.lo > 1) lo = mid;
    else if (v.hi < 1) hi = mid;
    else if (prec < 4096) prec *= 2;
    else break;  // the root sits within rounding of mid
  }
  if (lo <= 0) throw Error("dimension bound is not positive");
  out.s = DyadicInterval(lo, hi);
  out.residual = detail::power_sum(c, out.s.mid(), prec) - DyadicInterval::point(1);
  return out;
}

// E-prefixes are words over {A, B}: B-runs and A-runs alternating, starting
// with B, each run of length 1 or 2
inline void check_e_prefix(const std::string& p) {
  if (p.empty() || p[0] != 'B') throw Error("E-prefix must start with B");
  size_t i = 0;
  while (i < p.size()) {
    if (p[i] != 'A' && p[i] != 'B') throw Error("E-prefix letters are A and B");
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (j - i > 2) throw Error("E-prefix runs have length 1 or 2");
    i = j;
  }
}

inline FiniteWord expand_ab(const std::string& p, unsigned m) {
  FiniteWord a = word_a(m), b = word_b(m), out;
  for (char ch : p) out += ch == 'A' ? a : b;
  return out;
}

struct TpCheck {
  Real target;             // 1/[B^inf] + [A^3 P] with P the periodic extension of the prefix
  DyadicInterval section;  // the section B^k | A^3 W_k at k = depth, in any context
  bool contains = false;
};

// T_P = ...B A^3 W_1 B^2 A^3 W_2 ... B^k A^3 W_k ...; the section before the
// k-th A^3 agrees with B^inf | A^3 P on B^k to the left and A^3 W_k to the right
inline TpCheck t_p_check(const std::string& prefix, size_t depth, unsigned m = 0) {
  check_e_prefix(prefix);
  if (depth < 1) throw Error("depth must be >= 1");
  if (prefix.back() != 'A') throw Error("E-prefix must end with an A-run to extend periodically");
  FiniteWord a = word_a(m), b = word_b(m), a3 = a.repeat(3);
  // W_depth: the first `depth` (B-run, A-run) pairs of P
  std::string p_ext;
  for (size_t pairs = 0; pairs < depth;) {
    for (size_t i = 0; i < prefix.size(); ++i) {
      p_ext += prefix[i];
      if (prefix[i] == 'A' && (i + 1 == prefix.size() || prefix[i + 1] == 'B')) ++pairs;
      if (pairs == depth) break;
    }
  }
  FiniteWord wk = expand_ab(p_ext, m);
  TpCheck t;
  t.target = Real(eval_cycle(b).value().inverse()) + Real(eval(EvPeriodicWord(a3, expand_ab(prefix, m))).value());
  t.section = cylinder_interval(reverse(b.repeat(depth)), 256) + cylinder_interval(a3 + wk, 256);
  DyadicInterval te = to_interval(t.target, Rat(1, pow10(60)));
  t.contains = t.section.contains(te);
  return t;
}

}  // namespace h4spec
