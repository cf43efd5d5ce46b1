#include <gtest/gtest.h>

#include "h4spec/decimal.hpp"
#include "h4spec/hallray.hpp"
#include "support.hpp"

using namespace h4spec;

namespace {

QuadExt val(const char* w) { return eval(EvPeriodicWord::parse(w)).value(); }
QuadExt r7(const Rat& x, const Rat& y) { return QuadExt::make(QSqrt2(0, x), y, 7); }  // x sqrt2 + y sqrt7

template <class F>
void walk(const DissectionInterval& i, size_t depth, F&& f) {
  f(i, depth);
  if (depth == 0) return;
  Dissection d = dissect(i);
  walk(d.first, depth - 1, f);
  walk(d.second, depth - 1, f);
}

}  // namespace

TEST(CantorSet, EightConstants) {
  EXPECT_EQ(val("(332112)"), r7(1, 1));
  EXPECT_EQ(val("(112332)"), r7(Rat(-1, 5), Rat(1, 5)));
  EXPECT_EQ(val("1(332112)"), r7(Rat(4, 5), Rat(-1, 5)));
  EXPECT_EQ(val("3(112332)"), r7(Rat(4, 5), Rat(1, 5)));
  EXPECT_EQ(val("2(332112)"), r7(Rat(1, 5), Rat(1, 5)));
  EXPECT_EQ(val("2(112332)"), r7(-1, 1));
  EXPECT_EQ(val("12(332112)"), QuadExt::sqrt(7) / QuadExt(7));
  EXPECT_EQ(val("32(112332)"), QuadExt::sqrt(7));
  // [S^vee] = [1,1,2,S] and the two endpoints of F0
  EXPECT_EQ(EvPeriodicWord::parse("112(332112)"), EvPeriodicWord::parse("(112332)"));
  DissectionInterval f0 = DissectionInterval::f0();
  EXPECT_EQ(f0.lo(), r7(Rat(-1, 5), Rat(1, 5)));
  EXPECT_EQ(f0.hi(), r7(-1, 1));
  EXPECT_TRUE(in_f(f0.lo_word()));
  EXPECT_TRUE(in_f(f0.hi_word()));
  EXPECT_FALSE(in_f(EvPeriodicWord::parse("3(12)")));
  EXPECT_FALSE(in_f(EvPeriodicWord::parse("2(1121)")));
}

TEST(Dissect, F0) {
  Dissection d = dissect(DissectionInterval::f0());
  std::set<DType> types{d.first.type(), d.second.type()};
  EXPECT_EQ(types, (std::set<DType>{DType::I, DType::II}));
  EXPECT_EQ(d.left().lo(), DissectionInterval::f0().lo());
  EXPECT_EQ(d.right().hi(), DissectionInterval::f0().hi());
  EXPECT_TRUE(d.gap.contains(enclose(d.gap_lo, 64).mid()) || d.gap.lo <= enclose(d.gap_lo, 64).hi);
  // III splits into two V pieces of positive width
  Dissection t = dissect(DissectionInterval(DType::III, FiniteWord("21")));
  EXPECT_EQ(t.first.type(), DType::V);
  EXPECT_EQ(t.second.type(), DType::V);
  EXPECT_GT(sign(t.first.width()), 0);
  EXPECT_GT(sign(t.second.width()), 0);
}

TEST(Dissect, SideConditions) {
  EXPECT_THROW(DissectionInterval(DType::I, FiniteWord("21")), Error);
  EXPECT_THROW(DissectionInterval(DType::III, FiniteWord("23")), Error);
  EXPECT_THROW(DissectionInterval(DType::IV, FiniteWord("1")), Error);
  EXPECT_THROW(DissectionInterval(DType::V, FiniteWord("1")), Error);
  EXPECT_THROW(DissectionInterval(DType::VI, FiniteWord("11")), Error);
  EXPECT_NO_THROW(DissectionInterval(DType::II, FiniteWord("1")));
}

TEST(Dissect, ChildTypeTable) {
  std::map<DType, std::multiset<DType>> seen;
  walk(DissectionInterval::f0(), 6, [&](const DissectionInterval& i, size_t depth) {
    if (depth == 0) return;
    Dissection d = dissect(i);
    seen[i.type()] = {d.first.type(), d.second.type()};
  });
  using T = DType;
  std::map<T, std::multiset<T>> want{{T::I, {T::III, T::VI}},  {T::II, {T::III, T::V}}, {T::III, {T::V, T::V}},
                                     {T::IV, {T::II, T::III}}, {T::V, {T::I, T::II}},  {T::VI, {T::II, T::IV}}};
  EXPECT_EQ(seen, want);
}

// every interval reached from F0 has endpoints matching its type's pattern,
// recovered from the words alone, and both endpoints lie in F
TEST(Dissect, ClosureToDepth12) {
  size_t count = 0;
  walk(DissectionInterval::f0(), 12, [&](const DissectionInterval& i, size_t) {
    ++count;
    auto c = classify(i.end(0), i.end(1));
    ASSERT_TRUE(c.has_value()) << i.to_string();
    EXPECT_EQ(c->type(), i.type()) << i.to_string();
    EXPECT_TRUE(in_f(i.end(0)) && in_f(i.end(1))) << i.to_string();
  });
  EXPECT_EQ(count, (1u << 13) - 1);
}

TEST(GapRatio, WorstCaseConstants) {
  const char* want[6][2] = {{"0.5025", "0.5893"}, {"0.5893", "0.4354"}, {"0.9354", "0.4354"},
                            {"0.5893", "0.5760"}, {"0.7403", "0.5893"}, {"0.8292", "0.9354"}};
  for (int t = 1; t <= 6; ++t) {
    auto [a, b] = ratio_bounds(static_cast<DType>(t));
    // truncated, as the constants are quoted
    EXPECT_EQ(to_decimal(a, 8).substr(0, 6), want[t - 1][0]) << t;
    EXPECT_EQ(to_decimal(b, 8).substr(0, 6), want[t - 1][1]) << t;
  }
}

TEST(GapRatio, BelowOneToDepth10) {
  size_t count = 0;
  // type IV, second piece, with the bound d/c <= 1/(2 sqrt2) that holds for
  // every stem followed by 11
  auto at = [](const char* w) { return val(w); };
  QuadExt T2 = at("2(332112)"), T3v = at("3(112332)"), T2v = at("2(112332)");
  QuadExt q = QuadExt(QSqrt2(0, Rat(1, 4)));
  QuadExt iv_bound = (T2 + q) / (T3v + q) * (T3v - T2v) / (T2v - T2);
  double worst_iv = 0;
  walk(DissectionInterval::f0(), 10, [&](const DissectionInterval& i, size_t) {
    GapRatios g = gap_ratio_check(i);
    EXPECT_LT(g.r1.hi, 1) << i.to_string();
    EXPECT_LT(g.r2.hi, 1) << i.to_string();
    auto [b1, b2] = ratio_bounds(i.type());
    if (i.type() == DType::IV) {
      worst_iv = std::max(worst_iv, to_double(g.exact2));
      b2 = iv_bound;
    }
    EXPECT_LE(sign(g.exact1 - b1), 0) << i.to_string();
    EXPECT_LE(sign(g.exact2 - b2), 0) << i.to_string();
    ++count;
  });
  EXPECT_EQ(count, (1u << 11) - 1);
  // the quoted 0.5760 for type IV assumes d/c <= sqrt2/5; stems ending in 3
  // reach d/c near 1/(2 sqrt2) and the second ratio climbs past it
  EXPECT_GT(worst_iv, 0.5800);
  EXPECT_LT(to_double(iv_bound), 0.5920);
}

TEST(FSum, Range) {
  auto [lo, hi] = f_sum_range();
  EXPECT_EQ(lo, r7(Rat(-2, 5), Rat(2, 5)));
  EXPECT_EQ(hi, r7(-2, 2));
  EXPECT_EQ(to_decimal(lo, 4), "0.4926");
  EXPECT_EQ(to_decimal(hi, 4), "2.4631");
  EXPECT_GT(sign(hi - lo - QuadExt(QSqrt2::sqrt2())), 0);
}

TEST(SumDecompose, Targets) {
  Rat eps(1, 1000000000);
  SumDecomposition d = sum_decompose(Real(QuadExt(2)), eps);
  EXPECT_LE(sign(d.first.width() + d.second.width() - QuadExt(eps)), 0);
  EXPECT_LE(Real(d.first.lo() + d.second.lo()), Real(QuadExt(2)));
  EXPECT_GE(Real(d.first.hi() + d.second.hi()), Real(QuadExt(2)));
  EXPECT_LE(to_double(abs(d.value - QuadExt(2))), 1e-9);
  EXPECT_TRUE(in_f(d.p1) && in_f(d.p2));
  QuadExt again = eval(d.p1).value() + eval(d.p2).value();
  EXPECT_EQ(again, d.value);

  auto [lo, hi] = f_sum_range();
  SumDecomposition l = sum_decompose(Real(lo), Rat(1, 1000000));
  EXPECT_EQ(l.p1, EvPeriodicWord::parse("(112332)"));
  EXPECT_EQ(l.p2, EvPeriodicWord::parse("(112332)"));
  EXPECT_EQ(l.value, lo);
  SumDecomposition h = sum_decompose(Real(hi), Rat(1, 1000000));
  EXPECT_EQ(h.p1, EvPeriodicWord::parse("2112(332112)"));
  EXPECT_EQ(h.p2, EvPeriodicWord::parse("2112(332112)"));
  EXPECT_EQ(h.value, hi);
  EXPECT_THROW(sum_decompose(Real(QuadExt(3)), eps), Error);
  EXPECT_THROW(sum_decompose(Real(QuadExt(Rat(1, 3))), eps), Error);
}

TEST(SumDecompose, RandomTargetsAndIrrationals) {
  for (int i = 0; i < 20; ++i) {
    Rat t(h4test::rand_int(50, 246), 100);
    SumDecomposition d = sum_decompose(Real(QuadExt(t)), Rat(1, 1000000));
    EXPECT_LE(to_double(abs(d.value - QuadExt(t))), 1e-6) << t;
  }
  Real t(QuadExt::sqrt(3));
  SumDecomposition d = sum_decompose(t, Rat(1, 100000));
  EXPECT_LE(abs(Real(d.value) - t), Real(QuadExt(Rat(1, 100000))));
}

TEST(Hall, Six) {
  Rat eps(1, 1000000000);
  HallResult h = hall_construct(Real(QuadExt(6)), eps);
  EXPECT_EQ(h.n, 3);
  EXPECT_NE(h.word.middle.str().find("333"), std::string::npos);
  EXPECT_LE(abs(h.markoff.upper - Real(QuadExt(6))), Real(QuadExt(eps)));
  ASSERT_TRUE(h.markoff.exact.has_value());
  // the value is attained at the 3-block: sqrt2 n + [P1] + [P2]
  EXPECT_EQ(*h.markoff.exact, QuadExt(QSqrt2(0, 3)) + h.parts.value);
  // outside the block the word stays in F
  std::string mid = h.word.middle.str();
  size_t at = mid.find("333");
  std::string rest = mid.substr(0, at) + "|" + mid.substr(at + 3);
  EXPECT_EQ(rest.find("333"), std::string::npos);
  EXPECT_EQ(rest.find("111"), std::string::npos);
}

TEST(Hall, ThresholdAndIrrationals) {
  Rat eps(1, 1000000);
  Real just_above = hall_threshold() + Real(QuadExt(Rat(1, 1000)));
  HallResult h = hall_construct(just_above, eps);
  EXPECT_EQ(h.n, 3);
  EXPECT_LE(abs(h.markoff.upper - just_above), Real(QuadExt(eps)));
  EXPECT_THROW(hall_construct(hall_threshold(), eps), Error);
  EXPECT_THROW(hall_construct(Real(QuadExt(5)), eps), Error);
  Real pi_ish(QuadExt(Rat(314159, 10000)));
  HallResult big = hall_construct(pi_ish, eps);
  EXPECT_LE(abs(big.markoff.upper - pi_ish), Real(QuadExt(eps)));
  Real s50(QuadExt::sqrt(50) + QuadExt(Rat(1, 7)));
  HallResult r = hall_construct(s50, eps);
  EXPECT_LE(abs(r.markoff.lower - s50), Real(QuadExt(eps)));
}

TEST(HallLagrange, Blocks) {
  HallLagrange l = hall_lagrange_construct(Real(QuadExt(6)), 3);
  ASSERT_EQ(l.blocks.size(), 3u);
  EXPECT_EQ(l.enclosures.size(), 3u);
  for (size_t j = 0; j < 3; ++j) {
    const DyadicInterval& e = l.enclosures[j];
    EXPECT_LT(abs_rat(e.lo - 6), Rat(1, 1000));
    EXPECT_LT(abs_rat(e.hi - 6), Rat(1, 1000));
    if (j) { EXPECT_TRUE(l.enclosures[j - 1].contains(e)); }
    EXPECT_TRUE(e.contains(to_interval(l.base.markoff.lower, Rat(1, pow10(60)))));
    EXPECT_EQ(l.blocks[j][0], l.left_digit);
    EXPECT_EQ(l.blocks[j].back(), l.right_digit);
    if (j) { EXPECT_GT(l.blocks[j].size(), l.blocks[j - 1].size()); }
  }
  // concatenating ... B2 B1 B1 B2 ... only adds the designated 3-runs
  std::string all;
  for (size_t j = 3; j-- > 0;) all += reverse(l.blocks[j]).str();
  for (auto& b : l.blocks) all += b.str();
  EXPECT_EQ(all.find("111"), std::string::npos);
  std::string three(static_cast<size_t>(l.base.n), '3');
  size_t runs = 0;
  for (size_t p = all.find("333"); p != std::string::npos; p = all.find("333", p + three.size())) {
    EXPECT_EQ(all.compare(p, three.size(), three), 0);
    EXPECT_NE(all[p + three.size()], '3');
    ++runs;
  }
  EXPECT_EQ(runs, 6u);
}

TEST(HallLagrange, FirstBlockHoldsTheSeed) {
  Rat eps(1, 1000000);
  HallLagrange l = hall_lagrange_construct(Real(QuadExt(7)), 1, eps);
  HallResult h = hall_construct(Real(QuadExt(7)), eps);
  ASSERT_EQ(l.blocks.size(), 1u);
  EXPECT_EQ(l.base.word.to_string(), h.word.to_string());
  const std::string& b = l.blocks[0].str();
  size_t at = b.find(h.word.middle.str());
  ASSERT_NE(at, std::string::npos);
  EXPECT_EQ(at + h.word.middle.size() - h.parts.p2.prefix().size(), l.left_cuts[0] + static_cast<size_t>(h.n));
  EXPECT_THROW(hall_lagrange_construct(Real(QuadExt(5)), 2), Error);
}
