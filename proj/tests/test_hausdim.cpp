#include <gtest/gtest.h>

#include "h4spec/decimal.hpp"
#include "h4spec/hausdim.hpp"

using namespace h4spec;

namespace {
const Real two_r2(QuadExt(QSqrt2(0, 2)));
}

TEST(ChooseM, Minimality) {
  EXPECT_EQ(eval(EvPeriodicWord::parse("3(2)")).value(), QuadExt(QSqrt2(1, 1)));
  EXPECT_EQ(eval(EvPeriodicWord::parse("1(2)")).value(), QuadExt(QSqrt2(-1, 1)));
  EXPECT_EQ(choose_m(Rat(10)), 0u);
  EXPECT_LE(choose_m(Rat(1)), 1u);
  for (Rat eps : {Rat(1), Rat(1, 2), Rat(1, 10), Rat(1, 100), Rat(1, 10000)}) {
    unsigned m = choose_m(eps);
    Real bound = two_r2 + Real(QuadExt(eps));
    EXPECT_LT(ebound_value(m), bound);
    if (m > 0) { EXPECT_GE(ebound_value(m - 1), bound); }
  }
  // the defining quantity decreases toward 2 sqrt2 from above
  for (unsigned m = 0; m < 5; ++m) {
    EXPECT_GT(ebound_value(m), two_r2);
    EXPECT_GT(ebound_value(m), ebound_value(m + 1));
  }
  EXPECT_THROW(choose_m(Rat(0)), Error);
}

TEST(Ifs, ClosedForms) {
  EXPECT_EQ(word_matrix(FiniteWord("31")), (Mobius{3, QSqrt2::sqrt2(), QSqrt2::sqrt2(), 1}));
  EXPECT_EQ(closed_form_n3_n2k_n1(2).a, QSqrt2(17));
  for (unsigned m = 0; m <= 5; ++m) {
    EXPECT_EQ(word_matrix(word_a(m)), closed_form_n3_n2k_n1(2 * m + 2)) << m;
    EXPECT_EQ(word_matrix(word_b(m)), closed_form_n3_n2k_n1(2 * m)) << m;
  }
}

TEST(Ifs, WellFormed) {
  for (unsigned m = 0; m <= 3; ++m) {
    IfsSpec f = ifs_build(m);
    EXPECT_LT(Real(f.alpha), Real(f.beta));
    for (size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(f.maps[i].det(), QSqrt2(1));
      EXPECT_GT(sign(f.c[i]), 0);
      EXPECT_LT(sign(f.c[i] - QuadExt(1)), 0);
      // c_i is the derivative at beta and the derivative at alpha is larger
      QuadExt da = QuadExt(f.maps[i].c) * f.alpha + QuadExt(f.maps[i].d);
      EXPECT_GE(Real((da * da).inverse()), Real(f.c[i]));
      for (const QuadExt* x : {&f.alpha, &f.beta}) {
        Real y(f.maps[i].apply(ProjValue(*x)).value());
        EXPECT_GE(y, Real(f.alpha));
        EXPECT_LE(y, Real(f.beta));
      }
    }
    // E-words sit between alpha and beta
    for (const char* p : {"BA", "BBA", "BAA", "BBAA", "BABBAA"}) {
      Real v(eval(EvPeriodicWord(FiniteWord(), expand_ab(p, m))).value());
      EXPECT_GE(v, Real(f.alpha)) << p;
      EXPECT_LE(v, Real(f.beta)) << p;
    }
  }
}

// x -> N_A^3 x has derivative bounded away from 0 and infinity on [alpha, beta]
TEST(Ifs, A3BiLipschitz) {
  IfsSpec f = ifs_build(0);
  Mobius a3 = f.na * f.na * f.na;
  EXPECT_EQ(a3.det(), QSqrt2(1));
  for (const QuadExt* x : {&f.alpha, &f.beta}) {
    QuadExt den = QuadExt(a3.c) * *x + QuadExt(a3.d);
    EXPECT_GT(sign(den), 0);
  }
}

// [A^n Q] > [A^m R] for n > m and Q, R in B^+ A^+ B^+ A^+ ...
TEST(Ifs, APowersOrder) {
  unsigned m = 0;
  FiniteWord a = word_a(m);
  std::vector<std::string> tails{"BA", "BBA", "BAA", "BBAA", "BAAA", "BBBA", "BABBA"};
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned k = 0; k < n; ++k)
      for (auto& q : tails)
        for (auto& r : tails) {
          Real lhs(eval(EvPeriodicWord(a.repeat(n), expand_ab(q, m))).value());
          Real rhs(eval(EvPeriodicWord(a.repeat(k), expand_ab(r, m))).value());
          EXPECT_GT(lhs, rhs) << n << " " << k << " " << q << " " << r;
        }
}

TEST(DimBound, PositiveAndSolvesEquation) {
  DimBound d = dim_lower_bound(Rat(1, 2), Rat(1, 1000000));
  EXPECT_GT(d.s.lo, 0);
  EXPECT_LT(d.s.hi, 1);
  EXPECT_LE(d.s.width(), Rat(1, 1000000));
  EXPECT_LT(abs_rat(d.residual.lo), Rat(1, 100000));
  EXPECT_LT(abs_rat(d.residual.hi), Rat(1, 100000));
  EXPECT_EQ(to_decimal(d.s.mid(), 4), "0.1124");
}

TEST(DimBound, MonotoneInEps) {
  DimBound a = dim_lower_bound(Rat(1), Rat(1, 1000000));
  DimBound b = dim_lower_bound(Rat(1, 10), Rat(1, 1000000));
  DimBound c = dim_lower_bound(Rat(1, 100), Rat(1, 1000000));
  EXPECT_LE(b.s.hi, a.s.hi);
  EXPECT_LE(b.s.lo, a.s.lo);
  // a larger m shrinks every contraction constant and the dimension
  ASSERT_GT(c.ifs.m, b.ifs.m);
  for (size_t i = 0; i < 4; ++i) EXPECT_LT(Real(c.ifs.c[i]), Real(b.ifs.c[i]));
  EXPECT_LT(c.s.hi, b.s.lo);
  EXPECT_GT(c.s.lo, 0);
}

TEST(TpCheck, ContainsTargetAndRefines) {
  TpCheck t4 = t_p_check("BA", 4);
  EXPECT_TRUE(t4.contains);
  TpCheck t6 = t_p_check("BA", 6);
  EXPECT_TRUE(t6.contains);
  EXPECT_TRUE(t4.section.contains(t6.section));
  EXPECT_LT(t6.section.width(), t4.section.width());
  unsigned m = choose_m(Rat(1, 2));
  EXPECT_LT(t_p_check("BA", 2, m).target, two_r2 + Real(QuadExt(Rat(1, 2))));
  EXPECT_TRUE(t_p_check("BBAA", 3).contains);
  EXPECT_TRUE(t_p_check("BABBAA", 5).contains);
  EXPECT_THROW(t_p_check("AB", 2), Error);
  EXPECT_THROW(t_p_check("BBBA", 2), Error);
  EXPECT_THROW(t_p_check("BAB", 2), Error);
  EXPECT_THROW(t_p_check("BXA", 2), Error);
}
