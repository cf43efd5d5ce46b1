#pragma once
// The ten acceptance criteria, each a pass/fail Verdict with a short detail.
// Shared by the acceptance binary and `h4spec verify-paper`.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "circle.hpp"
#include "gaps.hpp"
#include "hallray.hpp"
#include "hausdim.hpp"
#include "report.hpp"
#include "triples.hpp"

namespace h4spec {

struct AcceptanceOptions {
  size_t gap_len = 12;
  unsigned jobs = 1;
  std::uint64_t seed = 20240611;
};

struct Criterion {
  std::string id, title;
  double limit_seconds;  // 0: no runtime requirement
  std::function<bool(std::ostringstream&)> run;
};

namespace detail {

inline bool check(std::ostringstream& os, bool ok, const std::string& what) {
  if (!ok) os << "FAILED " << what << "; ";
  return ok;
}
inline std::string trunc4(const QuadExt& v) { return to_decimal(v, 8).substr(0, 6); }

}  // namespace detail

inline std::vector<Criterion> acceptance_criteria(const AcceptanceOptions& opt = {}) {
  using detail::check;
  std::vector<Criterion> c;
  const QuadExt r2(QSqrt2::sqrt2());
  const QuadExt sqrt10 = QuadExt::sqrt(10), lower_end = QuadExt::sqrt(238) / QuadExt(5);

  c.push_back({"C1", "discrete spectrum: N2, M2 to 400 and the first three values", 1.0, [](std::ostringstream& os) {
                 TripleSets s = n2_m2_sets(400);
                 std::vector<Int> n2{1, 5, 29, 65, 169, 349}, m2{1, 3, 11, 17, 41, 59};
                 bool ok = check(os, s.xs == n2, "N2 set");
                 // the M2 list is the start of the set: 99, 153, 339 also lie below 400
                 ok &= check(os, s.ys.size() >= 6 && std::equal(m2.begin(), m2.end(), s.ys.begin()), "M2 set begins 1,3,11,17,41,59");
                 auto d = discrete_spectrum(400);
                 ok &= check(os, d.size() >= 3, "at least three values");
                 if (d.size() >= 3) {
                   std::vector<QuadExt> want{QuadExt(2), QuadExt::sqrt(6), QuadExt(2) * QuadExt::sqrt(17) / QuadExt(3)};
                   for (size_t i = 0; i < 3; ++i)
                     ok &= check(os, minimal_polynomial(d[i].value) == minimal_polynomial(want[i]) && d[i].value == want[i],
                                 "value " + std::to_string(i + 1) + " = " + to_string(want[i]));
                 }
                 os << "N2 = {1,5,29,65,169,349}, M2 = {1,3,11,17,41,59,...} (" << s.ys.size() << " below 400); spectrum begins 2, sqrt6, 2sqrt17/3";
                 return ok;
               }});

  c.push_back({"C2", "geodesic values of (2), (31), (312)", 1.0, [](std::ostringstream& os) {
                 bool ok = true;
                 std::pair<const char*, QuadExt> want[] = {
                     {"2", QuadExt(2)}, {"31", QuadExt::sqrt(6)}, {"312", QuadExt(2) * QuadExt::sqrt(17) / QuadExt(3)}};
                 for (auto& [w, v] : want) {
                   ProjValue m = markoff_periodic(PeriodicBiWord(FiniteWord(w)));
                   bool eq = !m.is_infinite() && m.value() == v;
                   ok &= check(os, eq, std::string("M((") + w + ")) = " + to_string(v) + ", computed " + to_string(m));
                 }
                 return ok;
               }});

  c.push_back({"C3", "gap endpoints sqrt10, sqrt238/5 and m0", 10.0, [=](std::ostringstream& os) {
                 bool ok = check(os, markoff_periodic(PeriodicBiWord(FiniteWord("32"))).value() == sqrt10, "M((32)) = sqrt10");
                 ok &= check(os, markoff_periodic(PeriodicBiWord(gap_S())).value() == lower_end, "M((31321312)) = sqrt238/5");
                 MarkoffBound b = markoff_spliced(gap_witness_word(), Rat(1, pow10(12)));
                 QuadExt m0 = gap_m0();
                 bool exact = b.exact && *b.exact == m0;
                 bool encl = b.enclosure.width() < Rat(1, pow10(12)) && b.enclosure.contains(enclose(m0, 200));
                 ok &= check(os, exact || encl, "M(S* 23232 S) = (2124sqrt2 + 48sqrt238)/1177");
                 os << (exact ? "spliced value exact" : "spliced value by enclosure");
                 return ok;
               }});

  c.push_back({"C4", "gap certification to length " + std::to_string(opt.gap_len) + " plus negative control", 600.0,
               [=](std::ostringstream& os) {
                 Real lo(lower_end), mid(sqrt10), hi(gap_m0());
                 GapReport a = gap_certify(lo, mid, opt.gap_len, opt.jobs);
                 GapReport b = gap_certify(mid, hi, opt.gap_len, opt.jobs);
                 bool ok = check(os, a.passed(), std::to_string(a.violations.size()) + " violations in the lower gap");
                 ok &= check(os, b.passed(), std::to_string(b.violations.size()) + " violations in the upper gap");
                 ok &= check(os, a.lo_witnesses == std::vector<std::string>{"(12313213)"}, "lower gap left witness (31321312)");
                 ok &= check(os, a.hi_witnesses == std::vector<std::string>{"(12)"}, "lower gap right witness (32)");
                 ok &= check(os, b.lo_witnesses == std::vector<std::string>{"(12)"}, "upper gap left witness (32)");
                 MarkoffBound w = markoff_spliced(gap_witness_word());
                 ok &= check(os, w.exact && *w.exact == gap_m0(), "upper gap right witness S* 23232 S");
                 GapReport neg = gap_certify(Real(Rat(282, 100)), Real(Rat(284, 100)), 10, opt.jobs);
                 ok &= check(os, !neg.passed(), "negative control (2.82, 2.84) must fail");
                 os << a.words_scanned << " + " << b.words_scanned << " cycles, negative control found " << neg.violations.size()
                    << " values";
                 return ok;
               }});

  c.push_back({"C5", "limit point: M(U_k), k = 1..5, decreasing to m0", 60.0, [](std::ostringstream& os) {
                 auto fam = limit_point_family(5);
                 Real m0(gap_m0());
                 bool ok = true;
                 for (size_t i = 0; i < fam.size(); ++i) {
                   const MarkoffBound& b = fam[i].value;
                   std::string k = std::to_string(fam[i].k);
                   if (!check(os, b.exact.has_value(), "M(U_" + k + ") certified")) return false;
                   ok &= check(os, Real(*b.exact) >= m0, "M(U_" + k + ") >= m0");
                   if (i) ok &= check(os, Real(*b.exact) < Real(*fam[i - 1].value.exact), "M(U_" + k + ") < M(U_" + std::to_string(i) + ")");
                 }
                 DyadicInterval d = to_interval(Real(*fam[4].value.exact) - m0, Rat(1, pow10(30)));
                 ok &= check(os, d.hi < Rat(1, 10000), "|M(U_5) - m0| < 1e-4");
                 char buf[32];
                 std::snprintf(buf, sizeof buf, "%.3e", d.mid().get_d());
                 os << "M(U_5) - m0 = " << buf;
                 return ok;
               }});

  c.push_back({"C6", "Cantor set constants and the seven ratio constants", 1.0, [=](std::ostringstream& os) {
                 auto val = [](const char* w) { return eval(EvPeriodicWord::parse(w)).value(); };
                 auto r7 = [](const Rat& x, const Rat& y) { return QuadExt::make(QSqrt2(0, x), y, 7); };
                 std::pair<const char*, QuadExt> eight[] = {
                     {"(332112)", r7(1, 1)},          {"(112332)", r7(Rat(-1, 5), Rat(1, 5))},
                     {"1(332112)", r7(Rat(4, 5), Rat(-1, 5))}, {"3(112332)", r7(Rat(4, 5), Rat(1, 5))},
                     {"2(332112)", r7(Rat(1, 5), Rat(1, 5))},  {"2(112332)", r7(-1, 1)},
                     {"12(332112)", QuadExt::sqrt(7) / QuadExt(7)}, {"32(112332)", QuadExt::sqrt(7)}};
                 bool ok = true;
                 for (auto& [w, v] : eight) ok &= check(os, val(w) == v, std::string("[") + w + "] = " + to_string(v));
                 std::set<std::string> got;
                 for (int t = 1; t <= 6; ++t) {
                   auto [a, b] = ratio_bounds(static_cast<DType>(t));
                   for (const QuadExt& x : {a, b}) {
                     ok &= check(os, enclose(x, 128).hi < 1, "ratio constant below 1");
                     got.insert(detail::trunc4(x));
                   }
                 }
                 std::set<std::string> want{"0.5025", "0.5893", "0.4354", "0.9354", "0.5760", "0.7403", "0.8292"};
                 ok &= check(os, got == want, "the seven ratio constants to 4 places");
                 os << "eight values exact; ratio constants";
                 for (auto& g : got) os << " " << g;
                 return ok;
               }});

  c.push_back({"C7", "F+F range and width", 0.0, [=](std::ostringstream& os) {
                 auto [lo, hi] = f_sum_range();
                 QuadExt r7 = QuadExt::sqrt(7);
                 QuadExt want_lo = (QuadExt(2) * r7 - QuadExt(2) * r2) / QuadExt(5), want_hi = QuadExt(2) * r7 - QuadExt(2) * r2;
                 bool ok = check(os, lo == want_lo, "min(F+F) = (2sqrt7 - 2sqrt2)/5");
                 ok &= check(os, hi == want_hi, "max(F+F) = 2sqrt7 - 2sqrt2");
                 ok &= check(os, sign(hi - lo - r2) > 0, "width > sqrt2");
                 os << "[" << to_decimal(lo, 6) << ", " << to_decimal(hi, 6) << "]";
                 return ok;
               }});

  c.push_back({"C8", "Hall's ray: alpha in {4sqrt2 + 1/1000, 6, 7, 10} to 1e-9", 240.0, [=](std::ostringstream& os) {
                 Rat eps(1, pow10(9));
                 std::vector<std::pair<std::string, Real>> alphas{
                     {"4sqrt2+1/1000", Real(QuadExt(QSqrt2(Rat(1, 1000), 4)))}, {"6", Real(6)}, {"7", Real(7)}, {"10", Real(10)}};
                 bool ok = true;
                 for (auto& [name, a] : alphas) {
                   auto t0 = std::chrono::steady_clock::now();
                   HallResult h = hall_construct(a, eps);
                   double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                   bool close = to_interval(abs(h.markoff.upper - a), Rat(1, pow10(15))).hi <= eps &&
                                to_interval(abs(h.markoff.lower - a), Rat(1, pow10(15))).hi <= eps;
                   ok &= check(os, close, "|M(T) - " + name + "| <= 1e-9");
                   ok &= check(os, sec < 60, name + " within 1 min");
                   os << name << ": n=" << h.n << " ";
                 }
                 return ok;
               }});

  c.push_back({"C9", "dimension bound near 2sqrt2", 10.0, [](std::ostringstream& os) {
                 DimBound d = dim_lower_bound(Rat(1, 2), Rat(1, pow10(6)));
                 bool ok = check(os, d.s.lo > 0, "s_lo > 0");
                 ok &= check(os, abs_rat(d.residual.lo) < Rat(1, 100000) && abs_rat(d.residual.hi) < Rat(1, 100000),
                             "|sum c_i^s - 1| < 1e-5 at the midpoint");
                 DimBound a = dim_lower_bound(Rat(1), Rat(1, pow10(6)));
                 DimBound b = dim_lower_bound(Rat(1, 10), Rat(1, pow10(6)));
                 ok &= check(os, b.s.lo <= a.s.lo && b.s.hi <= a.s.hi, "s(0.1) <= s(1)");
                 os << "s in [" << to_decimal(d.s.lo, 7) << ", " << to_decimal(d.s.hi, 7) << "], m = " << d.ifs.m
                    << "; s(1) = " << to_decimal(a.s.mid(), 6) << " (m=" << a.ifs.m << "), s(0.1) = " << to_decimal(b.s.mid(), 6)
                    << " (m=" << b.ifs.m << ")";
                 return ok;
               }});

  c.push_back({"C10", "property suites", 0.0, [=](std::ostringstream& os) {
                 std::mt19937_64 g(opt.seed);
                 auto ri = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); };
                 auto word = [&](long lo, long hi) {
                   std::string s;
                   long n = ri(lo, hi);
                   for (long i = 0; i < n; ++i) s += static_cast<char>('0' + ri(1, 3));
                   return FiniteWord(s);
                 };
                 auto cycle = [&](long lo, long hi) {
                   for (;;) {
                     FiniteWord w = word(lo, hi);
                     if (!w.all(Digit::one) && !w.all(Digit::three)) return w;
                   }
                 };
                 bool ok = true;
                 // Romik relations
                 size_t bad = 0;
                 for (int i = 0; i < 200; ++i) {
                   EvPeriodicWord p(word(0, 4), cycle(1, 4));
                   QuadExt v = eval(p).value();
                   bad += !(eval(p.prepend("1")).value() == v / (r2 * v + QuadExt(1)));
                   bad += !(eval(p.prepend("2")).value() == (v + r2) / (r2 * v + QuadExt(1)));
                   bad += !(eval(p.prepend("3")).value() == r2 + v);
                 }
                 ok &= check(os, bad == 0, "Romik relations on 200 words");
                 // expand o eval off the boundary
                 size_t rt = 0;
                 bad = 0;
                 for (int i = 0; i < 200; ++i) {
                   EvPeriodicWord w(word(0, 5), cycle(1, 5));
                   size_t n = w.prefix().size() + 3 * w.cycle().size();
                   bool boundary = false;
                   for (size_t k = 0; k <= n && !boundary; ++k) {
                     ProjValue r = eval(w.drop(k));
                     boundary = !r.is_infinite() && (r.value() == r2 || r.value() == r2 / QuadExt(2));
                   }
                   if (boundary) continue;
                   ++rt;
                   bad += !(expand(eval(w), n).digits == w.head(n)) || !(to_word(eval(w)) == w);
                 }
                 ok &= check(os, bad == 0 && rt > 100, "expand(eval(w)) = w off the boundary");
                 // Lagrange <= Markoff
                 bad = 0;
                 for (int i = 0; i < 100; ++i) bad += !lagrange_leq_markoff_check(PeriodicBiWord(cycle(1, 8)), word(0, 4), 4).ok;
                 ok &= check(os, bad == 0, "L(T) <= M(T) on 100 words");
                 // Pythagorean tree and orbits
                 auto tree = pythagoras_tree(Int(200));
                 std::set<CirclePointQ> seen(tree.begin(), tree.end()), brute;
                 for (long cc = 1; cc <= 200; ++cc)
                   for (long a = 1; a < cc; ++a) {
                     long b2 = cc * cc - a * a;
                     long b = std::lround(std::sqrt(static_cast<double>(b2)));
                     if (b > 0 && b * b == b2 && std::gcd(std::gcd(a, b), cc) == 1) brute.insert(CirclePointQ(a, b, cc));
                   }
                 ok &= check(os, seen.size() == tree.size() && seen == brute, "Berggren tree complete and unique to c = 200");
                 bad = 0;
                 for (auto& p : brute) {
                   CirclePointQ e = circle_orbit(p).back().point;
                   bad += !(e == CirclePointQ(1, 0, 1) || e == CirclePointQ(0, 1, 1));
                 }
                 ok &= check(os, bad == 0, "Romik orbits reach (1,0) or (0,1)");
                 // brute-force ratios: monotone lower bounds for sqrt2 M
                 for (const char* w : {"2", "31", "312"}) {
                   FiniteWord cw(w);
                   QuadExt bound = r2 * markoff_periodic(PeriodicBiWord(cw)).value();
                   BiSection best;
                   Real bv;
                   bool have = false;
                   for (const BiSection& s : periodic_sections(cw)) {
                     SectionValue v = section_value(s);
                     if (!have || v.value > bv) best = s, bv = v.value, have = true;
                   }
                   QuadExt xi = -eval(best.left).value(), eta = eval(best.right).value();
                   QuadForm f = form_from_geodesic(xi, eta);
                   QuadExt sd = r2 * abs(eta - xi);
                   QuadExt prev(0);
                   bool mono = true;
                   for (long box : {2L, 10L, 40L, 120L}) {
                     QuadExt r = brute_force_ratio_exact(f, sd, box);
                     mono &= sign(r - prev) >= 0 && sign(r - bound) <= 0;
                     prev = r;
                   }
                   ok &= check(os, mono, std::string("brute-force ratio of (") + w + ") monotone and <= sqrt2 M");
                 }
                 os << "relations, round trip (" << rt << " words), L <= M, tree (" << tree.size() << " triples), orbits, ratios";
                 return ok;
               }});
  return c;
}

inline Verdict run_criterion(const Criterion& c) {
  std::ostringstream os;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.run(os);
  } catch (const std::exception& e) {
    os << "error: " << e.what();
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.limit_seconds > 0 && sec > c.limit_seconds) {
    os << "; runtime " << sec << " s over the " << c.limit_seconds << " s limit";
    ok = false;
  }
  return {c.id, ok, c.title + ": " + os.str(), sec};
}

inline std::vector<Verdict> run_acceptance(const AcceptanceOptions& opt = {},
                                           const std::function<void(const Verdict&)>& on_result = {}) {
  std::vector<Verdict> out;
  for (auto& c : acceptance_criteria(opt)) {
    out.push_back(run_criterion(c));
    if (on_result) on_result(out.back());
  }
  return out;
}

inline std::string verdict_line(const Verdict& v) {
  std::ostringstream os;
  os << (v.pass ? "PASS " : "FAIL ") << v.id << " (" << std::fixed;
  os.precision(2);
  os << v.seconds << " s) " << v.detail;
  return os.str();
}

}  // namespace h4spec
