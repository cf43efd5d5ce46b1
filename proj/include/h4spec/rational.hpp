#pragma once
// Integer / rational helpers on top of gmpxx.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace h4spec {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// raised when an exact decision needs something the current representation can't give
struct Undecidable : Error {
  using Error::Error;
};

inline Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw Error("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Int floor_div(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_div(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int floor_sqrt(const Int& n) {
  if (n < 0) throw Error("square root of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return floor_sqrt(n);
}

inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto n = exact_isqrt(q.get_num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(q.get_den());
  if (!d) return std::nullopt;
  return make_rat(*n, *d);
}

// largest s with s*s | n (n > 0).  Trial division to a fixed bound, then a
// perfect-square test on what's left; good enough for the sizes we meet.
inline Int square_part_root(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return 0;
  Int s = 1;
  for (unsigned long p = 2; p < 20000; p += (p == 2 ? 1 : 2)) {
    Int pp = p;
    pp *= p;
    if (pp > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      s *= p;
    }
    if (mpz_divisible_p(n.get_mpz_t(), Int(p).get_mpz_t())) n /= p;
  }
  if (auto r = exact_isqrt(n)) s *= *r;
  return s;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int pow2(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline Int pow10(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// "3", "-7/4"; no decimals (exactness is the whole point)
inline Rat parse_rat(std::string_view s) {
  Rat r;
  std::string str(s);
  if (str.empty() || r.set_str(str, 10) != 0) throw Error("not a rational: " + str);
  if (r.get_den() == 0) throw Error("zero denominator: " + str);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace h4spec
