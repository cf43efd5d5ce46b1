#pragma once
// The Cantor set F = {[P] : P in {1,2}x{1,2,3}^N without 111 or 333}, its
// dissection into six interval types, F+F, and the construction of words whose
// Markoff (and Lagrange) value is any prescribed alpha > 4 sqrt2.

#include <array>

#include "spectra.hpp"

namespace h4spec {

enum class DType { I = 1, II, III, IV, V, VI };

inline const char* to_string(DType t) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(t) - 1];
}

// S = (332112)^inf and its swap (112332)^inf
inline const FiniteWord& s_cycle() {
  static const FiniteWord c("332112");
  return c;
}
inline const FiniteWord& s_vee_cycle() {
  static const FiniteWord c("112332");
  return c;
}
inline QuadExt s_value() { return QuadExt::make(QSqrt2(0, 1), 1, 7); }                       // sqrt7 + sqrt2
inline QuadExt s_vee_value() { return QuadExt::make(QSqrt2(0, Rat(-1, 5)), Rat(1, 5), 7); }  // (sqrt7 - sqrt2)/5

// an F-word: starts with 1 or 2 and never shows 111 or 333
inline bool in_f(const EvPeriodicWord& w) {
  Digit d = w.at(0);
  if (d == Digit::three) return false;
  std::string s = (w.prefix() + w.cycle().repeat(3)).str();
  return s.find("111") == std::string::npos && s.find("333") == std::string::npos;
}

namespace detail {

struct EndSpec {
  const char* extra;
  bool vee;  // tail S^vee rather than S
};

// endpoint patterns in terms of the stem
inline std::array<EndSpec, 2> end_specs(DType t) {
  switch (t) {
    case DType::I: return {{{"", true}, {"1", false}}};
    case DType::II: return {{{"2", true}, {"2", false}}};
    case DType::III: return {{{"3", true}, {"", false}}};
    case DType::IV: return {{{"", true}, {"11", false}}};
    case DType::V: return {{{"", true}, {"2", true}}};
    case DType::VI: return {{{"", true}, {"12", true}}};
  }
  throw Error("bad interval type");
}

// the stem's last digit may not be this one
inline Digit forbidden_last(DType t) { return t == DType::III ? Digit::three : Digit::one; }

}  // namespace detail

class DissectionInterval {
 public:
  DissectionInterval() : DissectionInterval(DType::V, FiniteWord()) {}
  DissectionInterval(DType t, FiniteWord stem) : type_(t), stem_(std::move(stem)) {
    if (t != DType::II && !stem_.empty() && stem_.back() == detail::forbidden_last(t))
      throw Error(std::string("stem ") + stem_.str() + " violates the side condition of type " + h4spec::to_string(t));
    auto sp = detail::end_specs(t);
    for (int i = 0; i < 2; ++i) {
      FiniteWord pre = stem_ + FiniteWord(sp[i].extra);
      end_[i] = EvPeriodicWord(pre, sp[i].vee ? s_vee_cycle() : s_cycle());
      val_[i] = word_matrix(pre).apply(ProjValue(sp[i].vee ? s_vee_value() : s_value())).value();
    }
    lo_ = sign(val_[0] - val_[1]) < 0 ? 0 : 1;
    if (val_[0] == val_[1]) throw Error("degenerate interval");
  }

  static DissectionInterval f0() { return {DType::V, FiniteWord()}; }

  DType type() const { return type_; }
  const FiniteWord& stem() const { return stem_; }
  const EvPeriodicWord& end(int i) const { return end_[i]; }
  const EvPeriodicWord& lo_word() const { return end_[lo_]; }
  const EvPeriodicWord& hi_word() const { return end_[1 - lo_]; }
  const QuadExt& lo() const { return val_[lo_]; }
  const QuadExt& hi() const { return val_[1 - lo_]; }
  QuadExt width() const { return hi() - lo(); }
  // the common prefix of the two endpoint words
  FiniteWord common_prefix() const {
    size_t k = 0;
    while (k < 4096 && end_[0].at(k) == end_[1].at(k)) ++k;
    return end_[0].head(k);
  }
  std::string to_string() const {
    return std::string(h4spec::to_string(type_)) + "<[" + end_[0].to_string() + "],[" + end_[1].to_string() + "]>";
  }

 private:
  DType type_;
  FiniteWord stem_;
  std::array<EvPeriodicWord, 2> end_;
  std::array<QuadExt, 2> val_;
  int lo_ = 0;
};

// recover type and stem from a pair of endpoint words alone (either order)
inline std::optional<DissectionInterval> classify(const EvPeriodicWord& a, const EvPeriodicWord& b) {
  size_t longest = std::max(a.prefix().size(), b.prefix().size()) + 2 * s_cycle().size();
  for (int ti = 1; ti <= 6; ++ti) {
    DType t = static_cast<DType>(ti);
    auto sp = detail::end_specs(t);
    for (const EvPeriodicWord* w : {&a, &b}) {
      for (size_t n = 0; n <= longest; ++n) {
        FiniteWord stem = w->head(n);
        if (t != DType::II && !stem.empty() && stem.back() == detail::forbidden_last(t)) continue;
        EvPeriodicWord e0(stem + FiniteWord(sp[0].extra), sp[0].vee ? s_vee_cycle() : s_cycle());
        EvPeriodicWord e1(stem + FiniteWord(sp[1].extra), sp[1].vee ? s_vee_cycle() : s_cycle());
        if ((e0 == a && e1 == b) || (e0 == b && e1 == a)) return DissectionInterval(t, stem);
      }
    }
  }
  return std::nullopt;
}

struct Dissection {
  DissectionInterval first, second;  // in the order the ratio constants refer to
  QuadExt gap_lo, gap_hi;            // the removed open interval
  DyadicInterval gap;
  const DissectionInterval& left() const { return sign(first.lo() - second.lo()) < 0 ? first : second; }
  const DissectionInterval& right() const { return sign(first.lo() - second.lo()) < 0 ? second : first; }
};

inline Dissection dissect(const DissectionInterval& i) {
  const FiniteWord& s = i.stem();
  auto mk = [](DType t, const FiniteWord& w) { return DissectionInterval(t, w); };
  std::optional<DissectionInterval> a, b;
  switch (i.type()) {
    case DType::I: a = mk(DType::VI, s), b = mk(DType::III, s + "1"); break;
    case DType::II: a = mk(DType::III, s + "2"), b = mk(DType::V, s + "2"); break;
    case DType::III: a = mk(DType::V, s + "33"), b = mk(DType::V, s + "3"); break;
    case DType::IV: a = mk(DType::III, s + "11"), b = mk(DType::II, s + "11"); break;
    case DType::V: a = mk(DType::II, s), b = mk(DType::I, s); break;
    case DType::VI: a = mk(DType::II, s + "1"), b = mk(DType::IV, s); break;
  }
  bool a_left = sign(a->lo() - b->lo()) < 0;
  const DissectionInterval& l = a_left ? *a : *b;
  const DissectionInterval& r = a_left ? *b : *a;
  if (!(l.lo() == i.lo()) || !(r.hi() == i.hi()) || sign(r.lo() - l.hi()) <= 0)
    throw Error("dissection of " + i.to_string() + " is inconsistent");
  Dissection d{*a, *b, l.hi(), r.lo(), DyadicInterval(0, 0)};
  d.gap = DyadicInterval(enclose(l.hi(), 128).lo, enclose(r.lo(), 128).hi);
  return d;
}

struct GapRatios {
  QuadExt exact1, exact2;  // |J|/|I1|, |J|/|I2|
  DyadicInterval r1, r2;
};

inline GapRatios gap_ratio_check(const DissectionInterval& i) {
  Dissection d = dissect(i);
  QuadExt j = d.gap_hi - d.gap_lo;
  QuadExt e1 = j / d.first.width(), e2 = j / d.second.width();
  Rat tol(1, pow10(30));
  return {e1, e2, to_interval(e1, tol), to_interval(e2, tol)};
}

// the stem-independent bounds on the two ratios used in the proof that every
// piece is at least as long as the removed gap
inline std::pair<QuadExt, QuadExt> ratio_bounds(DType t) {
  auto at = [](const char* pre, bool v) {
    return word_matrix(FiniteWord(pre)).apply(ProjValue(v ? s_vee_value() : s_value())).value();
  };
  QuadExt S = at("", false), Sv = at("", true), T1 = at("1", false), T3v = at("3", true), T2 = at("2", false),
          T2v = at("2", true), T12 = at("12", false), T32v = at("32", true);
  QuadExt r2(QSqrt2::sqrt2()), one(1);
  QuadExt big = S * (T3v - T2v) / (T2v * (S - T3v));
  QuadExt small = (T3v - T2v) / (T2v - Sv);
  switch (t) {
    case DType::I: return {(T3v - T2v) / (T2v - T12), big};
    case DType::II: return {big, small};
    case DType::III: return {T32v * (T3v - T2v) / (T2v * (T32v - T3v)), small};
    case DType::IV: {
      QuadExt c = QuadExt(QSqrt2(0, Rat(1, 5)));
      return {big, (T2 + c) / (T3v + c) * (T3v - T2v) / (T2v - T2)};
    }
    case DType::V: return {(r2 * T2v + one) / (r2 * T1 + one) * (T2 - T1) / (T2v - T2), (T2 - T1) / (T1 - Sv)};
    case DType::VI: {
      QuadExt r8 = QuadExt(QSqrt2(0, 2));
      return {(r8 * T2v + one) / (r8 * T1 + one) * (T2 - T1) / (T2v - T2), (T2 - T1) / (T1 - T12)};
    }
  }
  throw Error("bad interval type");
}

// F + F = [2[S^vee], 2[2,S^vee]]
inline std::pair<QuadExt, QuadExt> f_sum_range() {
  QuadExt lo = eval(EvPeriodicWord(FiniteWord(), s_vee_cycle())).value();
  QuadExt hi = eval(EvPeriodicWord(FiniteWord("2"), s_vee_cycle())).value();
  return {lo + lo, hi + hi};
}

struct SumDecomposition {
  DissectionInterval first, second;
  EvPeriodicWord p1, p2;  // endpoint words of first and second whose sum is nearest t
  QuadExt value;          // [p1] + [p2]
  size_t steps = 0;
};

inline SumDecomposition sum_decompose(const Real& t, const Rat& eps) {
  if (eps <= 0) throw Error("eps must be positive");
  auto [flo, fhi] = f_sum_range();
  if (t < Real(flo) || t > Real(fhi)) throw Error("target outside F+F");
  DissectionInterval a = DissectionInterval::f0(), b = a;
  auto admits = [&](const DissectionInterval& x, const DissectionInterval& y) {
    return Real(x.lo() + y.lo()) <= t && t <= Real(x.hi() + y.hi());
  };
  size_t steps = 0;
  QuadExt qeps(eps);
  while (sign(a.width() + b.width() - qeps) > 0) {
    bool split_a = sign(a.width() - b.width()) >= 0;
    Dissection d = dissect(split_a ? a : b);
    bool done = false;
    for (const DissectionInterval* c : {&d.left(), &d.right()}) {
      if (admits(split_a ? *c : a, split_a ? b : *c)) {
        (split_a ? a : b) = *c;
        done = true;
        break;
      }
    }
    if (!done) throw Error("no child keeps the target in I+J");
    ++steps;
  }
  // best endpoint pair
  SumDecomposition best{a, b, a.lo_word(), b.lo_word(), a.lo() + b.lo(), steps};
  std::optional<Real> err;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      QuadExt v = (i ? a.hi() : a.lo()) + (j ? b.hi() : b.lo());
      Real e = abs(Real(v) - t);
      if (!err || e < *err) {
        err = e;
        best.p1 = i ? a.hi_word() : a.lo_word();
        best.p2 = j ? b.hi_word() : b.lo_word();
        best.value = v;
      }
    }
  return best;
}

struct HallResult {
  long n = 0;  // length of the 3-block
  SumDecomposition parts;
  SplicedBiWord word;
  MarkoffBound markoff;
};

inline Real hall_threshold() { return Real(QuadExt(QSqrt2(0, 4))); }

// T = P1* 3^n P2 with alpha ~ sqrt2 n + [P1] + [P2]
inline HallResult hall_construct(const Real& alpha, const Rat& eps) {
  if (!(alpha > hall_threshold())) throw Error("below Hall ray threshold");
  if (eps <= 0) throw Error("eps must be positive");
  auto [flo, fhi] = f_sum_range();
  // largest n with alpha - sqrt2 n >= min(F+F)
  Real r2(QuadExt(QSqrt2::sqrt2()));
  DyadicInterval ai = to_interval(alpha, Rat(1, 1 << 20));
  long n = std::max<long>(2, floor_div(ai.hi / Rat(14142, 10000)).get_si() + 1);
  while (alpha - Real(QuadExt(QSqrt2(0, n))) < Real(flo)) --n;
  Real t = alpha - Real(QuadExt(QSqrt2(0, n)));
  if (n < 2 || t > Real(fhi)) throw Error("no admissible block length");
  HallResult h;
  h.n = n;
  h.parts = sum_decompose(t, eps);
  const EvPeriodicWord &p1 = h.parts.p1, &p2 = h.parts.p2;
  if (!in_f(p1) || !in_f(p2)) throw Error("decomposition left F");
  FiniteWord rc = reverse(p1.cycle());
  // keep the left cycle aligned with the reversed prefix
  h.word = SplicedBiWord{rc, reverse(p1.prefix()) + repeat(Digit::three, static_cast<size_t>(n)) + p2.prefix(), p2.cycle()};
  h.markoff = markoff_spliced(h.word, eps / 4);
  if (abs(h.markoff.upper - alpha) > Real(eps) || abs(h.markoff.lower - alpha) > Real(eps))
    throw Error("constructed word misses alpha");
  return h;
}

struct HallLagrange {
  HallResult base;
  std::vector<FiniteWord> blocks;
  std::vector<size_t> left_cuts, right_cuts;  // k_j (digits of P1 taken), e_j (digits of P2 taken)
  Digit left_digit = Digit::two, right_digit = Digit::two;
  std::vector<DyadicInterval> enclosures;  // section at the 3-block of the j-th block, any context
};

// blocks t_{-k_j} .. t_{l_j} of the sequence ... B2 B1 | B1 B2 ... whose
// sections at the 3-blocks tend to alpha.  Each block ends on the recurring
// digit of its side: 2 when 2 occurs in the tail's cycle, else 3 (left) / 1 (right).
inline HallLagrange hall_lagrange_construct(const Real& alpha, size_t depth, const Rat& eps = Rat(1, 1000000)) {
  if (depth < 1) throw Error("depth must be >= 1");
  HallLagrange out;
  out.base = hall_construct(alpha, eps);
  const EvPeriodicWord &p1 = out.base.parts.p1, &p2 = out.base.parts.p2;
  auto recurring = [](const EvPeriodicWord& p, Digit other) {
    return p.cycle().str().find('2') != std::string::npos ? Digit::two : other;
  };
  out.left_digit = recurring(p1, Digit::three);
  out.right_digit = recurring(p2, Digit::one);
  FiniteWord w = repeat(Digit::three, static_cast<size_t>(out.base.n));
  size_t k = 0, e = 0;
  for (size_t j = 1; j <= depth; ++j) {
    // k digits of P1 with the last equal to the cut digit, past the prefix and j cycles
    k = std::max(k + 1, p1.prefix().size() + j * p1.cycle().size());
    while (p1.at(k - 1) != out.left_digit) ++k;
    e = std::max(e + 1, p2.prefix().size() + j * p2.cycle().size());
    while (p2.at(e - 1) != out.right_digit) ++e;
    out.left_cuts.push_back(k);
    out.right_cuts.push_back(e);
    out.blocks.push_back(reverse(p1.head(k)) + w + p2.head(e));
  }
  // the section at the 3-block of B_j agrees with P1*|3^n P2 on the block's own
  // digits whatever surrounds it, so it lies in the sum of the two cylinders
  for (size_t j = 0; j < depth; ++j)
    out.enclosures.push_back(cylinder_interval(p1.head(out.left_cuts[j]), 256) +
                             cylinder_interval(w + p2.head(out.right_cuts[j]), 256));
  return out;
}

}  // namespace h4spec
