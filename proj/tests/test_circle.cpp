#include <gtest/gtest.h>

#include <set>

#include "h4spec/circle.hpp"
#include "support.hpp"

using namespace h4spec;

namespace {
// all primitive triples with a, b > 0 and c <= cmax, by brute force
std::set<CirclePointQ> brute_triples(long cmax) {
  std::set<CirclePointQ> out;
  for (long c = 1; c <= cmax; ++c)
    for (long a = 1; a < c; ++a) {
      long b2 = c * c - a * a;
      long b = static_cast<long>(std::llround(std::sqrt(static_cast<double>(b2))));
      if (b * b == b2 && b > 0 && std::gcd(std::gcd(a, b), c) == 1) out.insert(CirclePointQ(a, b, c));
    }
  return out;
}
}  // namespace

TEST(RomikStep, Examples) {
  auto [img, d] = romik_step(CirclePointQ(3, 4, 5));
  EXPECT_EQ(d, Digit::three);
  EXPECT_EQ(img, CirclePointQ(1, 0, 1));
  auto [f1, d1] = romik_step(CirclePointQ(1, 0, 1));
  EXPECT_EQ(f1, CirclePointQ(1, 0, 1));
  EXPECT_EQ(d1, Digit::one);
  auto [f3, d3] = romik_step(CirclePointQ(0, 1, 1));
  EXPECT_EQ(f3, CirclePointQ(0, 1, 1));
  EXPECT_EQ(d3, Digit::three);
  auto [i4, d4] = romik_step(CirclePointQ(4, 3, 5));
  EXPECT_EQ(d4, Digit::one);
  // (|10-4-6|, |10-8-3|, 15-8-6) = (0, 1, 1)
  EXPECT_EQ(i4, CirclePointQ(0, 1, 1));
  EXPECT_EQ(romik_step(CirclePointQ(21, 20, 29)).second, Digit::two);
  EXPECT_THROW(romik_step(CirclePointQ(-3, 4, 5)), Error);
  EXPECT_THROW(CirclePointQ(1, 2, 3), Error);
  EXPECT_EQ(CirclePointQ(6, 8, 10), CirclePointQ(3, 4, 5));
  EXPECT_EQ(parse_triple("5,12,13"), CirclePointQ(5, 12, 13));
  EXPECT_THROW(parse_triple("5,12"), Error);
  EXPECT_THROW(parse_triple("5,x,13"), Error);
}

// T acts on [P] as N_d^{-1}, exactly
TEST(RomikStep, ConjugateToDigitMaps) {
  for (auto& p : pythagoras_tree(Int(300))) {
    auto [q, d] = romik_step(p);
    EXPECT_EQ(q.a * q.a + q.b * q.b, q.c * q.c);
    EXPECT_EQ(mod_proj(q), digit_matrix_inverse(d).apply(mod_proj(p))) << p.to_string();
  }
}

TEST(Berggren, Children) {
  auto ch = berggren_children(CirclePointQ(3, 4, 5));
  std::set<CirclePointQ> got(ch.begin(), ch.end());
  std::set<CirclePointQ> want{CirclePointQ(5, 12, 13), CirclePointQ(21, 20, 29), CirclePointQ(15, 8, 17)};
  EXPECT_EQ(got, want);
  std::set<CirclePointQ> grand;
  for (auto& c : ch)
    for (auto& g : berggren_children(c)) grand.insert(g);
  EXPECT_EQ(grand.size(), 9u);
  for (auto& g : grand) EXPECT_EQ(got.count(g), 0u);
  // round trip: the U_d child returns to its parent with digit d
  int d = 1;
  for (auto& c : ch) {
    auto [back, digit] = romik_step(c);
    EXPECT_EQ(back, CirclePointQ(3, 4, 5));
    EXPECT_EQ(static_cast<int>(digit), d++);
  }
  EXPECT_THROW(berggren_children(CirclePointQ(1, 0, 1)), Error);
}

TEST(Berggren, CompleteAndUniqueTo200) {
  auto tree = pythagoras_tree(Int(200));
  std::set<CirclePointQ> seen(tree.begin(), tree.end());
  EXPECT_EQ(seen.size(), tree.size());
  EXPECT_EQ(seen, brute_triples(200));
  // random tree walks stay primitive and Pythagorean
  for (int i = 0; i < 50; ++i) {
    CirclePointQ t(3, 4, 5);
    for (int k = 0; k < 12; ++k) t = berggren_children(t)[h4test::rand_int(0, 2)];
    EXPECT_EQ(t.a * t.a + t.b * t.b, t.c * t.c);
    EXPECT_EQ(gcd(gcd(t.a, t.b), t.c), 1);
  }
}

TEST(Orbit, TerminatesTo200) {
  for (auto& p : brute_triples(200)) {
    auto orbit = circle_orbit(p);
    const CirclePointQ& end = orbit.back().point;
    EXPECT_TRUE(end == CirclePointQ(1, 0, 1) || end == CirclePointQ(0, 1, 1)) << p.to_string();
    for (size_t i = 1; i < orbit.size(); ++i) EXPECT_LT(orbit[i].point.c, orbit[i - 1].point.c);
  }
  EXPECT_EQ(orbit_digits(circle_orbit(CirclePointQ(3, 4, 5))).str(), "31");
}

// off the boundary set the circle digit is the leading digit of [P]
TEST(Orbit, DigitConsistency) {
  size_t checked = 0;
  for (auto& p : brute_triples(200)) {
    if (5 * p.a == 4 * p.c || 5 * p.a == 3 * p.c) continue;
    Expansion e = expand(mod_proj(p), 1);
    ASSERT_EQ(e.digits.size(), 1u);
    EXPECT_EQ(e.digits[0], circle_digit(p)) << p.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 50u);
  // the whole orbit digit string is the expansion of [P]
  for (auto& p : brute_triples(120)) {
    auto orbit = circle_orbit(p);
    FiniteWord path = orbit_digits(orbit);
    Mobius m = word_matrix(path.substr(0, path.size() - 1));
    EXPECT_EQ(m.apply(mod_proj(orbit.back().point)), mod_proj(p)) << p.to_string();
  }
}

TEST(Stereo, Examples) {
  EXPECT_EQ(mod_proj(CirclePointQ(3, 4, 5)).value(), QuadExt(QSqrt2::sqrt2()));
  EXPECT_TRUE(mod_proj(CirclePointQ(0, 1, 1)).is_infinite());
  EXPECT_EQ(stereo(Rat(1)), CirclePointQ(1, 0, 1));
  EXPECT_EQ(stereo(Rat(2)), CirclePointQ(4, 3, 5));
  EXPECT_EQ(stereo(Rat(3)), CirclePointQ(3, 4, 5));  // (6, 8, 10) halved
  EXPECT_EQ(stereo(Rat(3, 2)), CirclePointQ(12, 5, 13));
  for (int i = 0; i < 200; ++i) {
    Rat t = h4test::rand_rat(40);
    Int p = t.get_num(), q = t.get_den();
    CirclePointQ pt = stereo(t);
    bool lam = in_sublattice(p, q, Sublattice::sum_even);
    Int c = p * p + q * q;
    EXPECT_EQ(pt.c, lam ? Int(c / 2) : c);
    EXPECT_EQ(heighted(t).height, lam ? Rat(q * q, 2) : Rat(q * q));
    auto [al, be] = stereo(QuadExt(t));
    EXPECT_EQ(al, QuadExt(pt.x()));
    EXPECT_EQ(be, QuadExt(pt.y()));
    // alpha/(1-beta) = t
    EXPECT_EQ(mod_proj(al, be).value(), (QuadExt(t) - QuadExt(1)) * QuadExt(QSqrt2(0, Rat(1, 2))));
  }
  QuadExt r3 = QuadExt::sqrt(3);
  auto [al, be] = stereo(r3);
  EXPECT_EQ(al * al + be * be, QuadExt(1));
  EXPECT_EQ(al, r3 / QuadExt(2));
}

TEST(LagrangeEstimate, SmallCases) {
  QuadExt r2(QSqrt2::sqrt2());
  LagrangeEstimate one = lagrange_estimate(r2, 1);
  EXPECT_FALSE(one.unbounded);
  EXPECT_GT(one.value, 0);
  // p = 1, q = 1: Ht = 1/2, 1/(|sqrt2 - 1|/2) = 2(sqrt2 + 1)
  EXPECT_EQ(one.p, 1);
  EXPECT_LT(one.value, Rat(4829, 1000));
  EXPECT_GT(one.value, Rat(4828, 1000));
  EXPECT_TRUE(lagrange_estimate(QuadExt(Rat(3, 7)), 100).unbounded);
  EXPECT_TRUE(circle_lagrange_estimate(QuadExt(Rat(3, 7)), Int(100)).unbounded);
  EXPECT_THROW(lagrange_estimate(r2, 0), Error);
}

// sqrt2 [P] on the p-even lattice tends to sqrt2 M(P) for purely periodic P
TEST(LagrangeEstimate, ApproachesScaledMarkoff) {
  QuadExt r2(QSqrt2::sqrt2());
  for (const char* w : {"31", "2", "32"}) {
    QuadExt x = r2 * eval_cycle(FiniteWord(w)).value();
    Real target(r2 * markoff_periodic(PeriodicBiWord(FiniteWord(w))).value());
    Rat prev(0);
    for (long qmax : {2000L, 20000L}) {
      LagrangeEstimate e = lagrange_estimate(x, qmax, Sublattice::num_even, 30);
      DyadicInterval t = enclose(target, 64);
      EXPECT_LT(abs_rat(e.value - t.mid()), Rat(1, 1000)) << w << " " << qmax;
      EXPECT_GE(e.value, prev);
      prev = e.value;
    }
  }
}

// L on the p+q even lattice at t is twice the circle value at phi(t). Both
// scans skip the small sizes; each window spans several periods of the
// quadratic surd's approximation pattern, so both maxima sit on the same p/q.
TEST(LagrangeEstimate, LineVersusCircle) {
  std::vector<QuadExt> samples;
  for (long n : {2, 3, 5, 6, 7, 10, 11, 13}) samples.push_back(QuadExt::sqrt(n));
  for (long n : {3, 5, 7, 11}) samples.push_back((QuadExt(1) + QuadExt::sqrt(n)) / QuadExt(2));
  for (long n : {2, 3, 6, 14}) samples.push_back(QuadExt(Rat(1, 3)) + QuadExt::sqrt(n) / QuadExt(5));
  for (const char* w : {"1(2)", "(31)", "(312)", "2(3312)"})
    samples.push_back(QuadExt(1) + QuadExt(QSqrt2::sqrt2()) * eval(EvPeriodicWord::parse(w)).value());
  ASSERT_EQ(samples.size(), 20u);
  const long qmax = 20000, q0 = 20;
  for (auto& t : samples) {
    LagrangeEstimate line = lagrange_estimate(t, qmax, Sublattice::sum_even, q0);
    // c is about q^2 (t^2 + 1), halved on the lattice
    Int scale(std::ceil(to_double(t * t + QuadExt(1))));
    LagrangeEstimate circ = circle_lagrange_estimate(t, scale * qmax * qmax, scale * q0 * q0);
    // matching candidates differ by a relative O(|t - p/q|) = O(1/q^2)
    Rat rel = abs_rat(line.value - 2 * circ.value) / line.value;
    EXPECT_LT(rel, Rat(1, q0 * q0)) << t << " " << line.value.get_d() << " " << circ.value.get_d();
  }
  // spot check at qmax = 1e5
  QuadExt t = QuadExt(1) + QuadExt(QSqrt2::sqrt2()) * eval(EvPeriodicWord::parse("1(2)")).value();
  LagrangeEstimate line = lagrange_estimate(t, 100000, Sublattice::sum_even, 300);
  LagrangeEstimate circ = circle_lagrange_estimate(t, Int(100000) * Int(100000) * 3, Int(300 * 300 * 3));
  EXPECT_LT(abs_rat(line.value - 2 * circ.value), Rat(1, 1000));
  // the full scans are monotone in the bound
  EXPECT_LE(lagrange_estimate(t, 500).value, lagrange_estimate(t, 1000).value);
  EXPECT_LE(circle_lagrange_estimate(t, Int(5000)).value, circle_lagrange_estimate(t, Int(50000)).value);
}

TEST(EvenCf, Examples) {
  auto twos = even_cf(EvPeriodicWord::parse("(2)"), 10);
  for (size_t i = 0; i < twos.size(); ++i) {
    EXPECT_EQ(twos[i].a, 1);
    EXPECT_EQ(twos[i].eps, i == 0 ? 0 : 1);
  }
  auto t32 = even_cf(EvPeriodicWord::parse("3(2)"), 6);
  EXPECT_EQ(t32[0].a, 2);
  for (size_t i = 1; i < t32.size(); ++i) EXPECT_EQ(t32[i].a, 1);
  auto t31 = even_cf(EvPeriodicWord::parse("(31)"), 6);
  for (size_t i = 0; i < t31.size(); ++i) {
    EXPECT_EQ(t31[i].a, 2);
    EXPECT_EQ(t31[i].eps, i == 0 ? 0 : -1);
  }
  EXPECT_THROW(even_cf(EvPeriodicWord::parse("12(3)")), Error);
}

// the fraction converges to sqrt2 [P] + 1
TEST(EvenCf, MatchesValue) {
  std::vector<EvPeriodicWord> words{EvPeriodicWord::parse("(2)"), EvPeriodicWord::parse("3(2)"),
                                    EvPeriodicWord::parse("(31)")};
  for (int i = 0; i < 30; ++i) {
    EvPeriodicWord w = h4test::rand_ev_word(4, 4);
    // runs of 1s converge slowly; keep cycles with a 2
    if (w.cycle().str().find('2') != std::string::npos) words.push_back(w);
  }
  for (auto& w : words) {
    QuadExt t = QuadExt(1) + QuadExt(QSqrt2::sqrt2()) * eval(w).value();
    Rat v = even_cf_value(even_cf(w, 60));
    DyadicInterval te = enclose(t, 128);
    EXPECT_LT(abs_rat(v - te.mid()), Rat(1, 1000000000)) << w.to_string();
  }
}
