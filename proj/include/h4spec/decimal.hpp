#pragma once
// Correctly rounded decimal strings.

#include <cstdlib>

#include "real.hpp"

namespace h4spec {

inline unsigned default_digits() {
  if (const char* e = std::getenv("H4SPEC_DIGITS")) {
    int d = std::atoi(e);
    if (d > 0 && d <= 10000) return static_cast<unsigned>(d);
  }
  return 20;
}

// round-half-away-from-zero of r to `digits` places, as a string
inline std::string rat_to_decimal(const Rat& r, unsigned digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rat a = abs_rat(r) * scale;
  Int n = floor_div(a + Rat(1, 2));
  std::string s = n.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits) s.insert(s.size() - digits, ".");
  if (r < 0 && n != 0) s.insert(0, "-");
  return s;
}

template <class T>
std::string to_decimal(const T& v, unsigned digits = default_digits()) {
  for (unsigned long bits = 64 + 4 * digits; bits < (1ul << 22); bits *= 2) {
    DyadicInterval e = enclose(v, bits);
    std::string lo = rat_to_decimal(e.lo, digits), hi = rat_to_decimal(e.hi, digits);
    if (lo == hi) return lo;
    if (e.lo == e.hi) return lo;
  }
  throw Error("decimal rendering did not settle");
}

inline std::string to_decimal(const Rat& v, unsigned digits = default_digits()) { return rat_to_decimal(v, digits); }

}  // namespace h4spec
