#pragma once
// shared generators for the property tests

#include <random>

#include "h4spec/h4spec.hpp"

namespace h4test {

using namespace h4spec;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat rand_rat(long span = 20) {
  long d = rand_int(1, span);
  return make_rat(rand_int(-span, span), d);
}

inline QSqrt2 rand_qsqrt2(long span = 20) { return {rand_rat(span), rand_rat(span)}; }

inline QSqrt2 rand_nonzero_qsqrt2(long span = 20) {
  for (;;) {
    QSqrt2 v = rand_qsqrt2(span);
    if (!v.is_zero()) return v;
  }
}

inline FiniteWord rand_word(size_t lo, size_t hi) {
  std::string s;
  size_t n = static_cast<size_t>(rand_int(static_cast<long>(lo), static_cast<long>(hi)));
  for (size_t i = 0; i < n; ++i) s += static_cast<char>('0' + rand_int(1, 3));
  return FiniteWord(s);
}

// a cycle that is neither all 1s nor all 3s
inline FiniteWord rand_cycle(size_t lo, size_t hi) {
  for (;;) {
    FiniteWord w = rand_word(lo, hi);
    if (!w.all(Digit::one) && !w.all(Digit::three)) return w;
  }
}

inline EvPeriodicWord rand_ev_word(size_t max_prefix = 4, size_t max_cycle = 4) {
  return {rand_word(0, max_prefix), rand_cycle(1, max_cycle)};
}

}  // namespace h4test
