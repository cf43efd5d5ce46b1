#pragma once
// x + y*sqrt(D) with x, y, D in Q(sqrt2), D > 0.  D is kept in a normal form
// (integral components, 2-free and square-free-ish content) and collapses to 1
// whenever it is a square in Q(sqrt2).

#include <vector>

#include "qsqrt2.hpp"

namespace h4spec {

struct FieldMismatch : Error {
  using Error::Error;
};

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(QSqrt2 x) : x_(std::move(x)) {}
  QuadExt(const Rat& x) : x_(x) {}
  QuadExt(long x) : x_(x) {}
  QuadExt(int x) : x_(x) {}

  // x + y*sqrt(delta); delta must be positive
  static QuadExt make(QSqrt2 x, QSqrt2 y, QSqrt2 delta) {
    QuadExt r;
    r.x_ = std::move(x);
    r.y_ = std::move(y);
    r.delta_ = std::move(delta);
    r.normalize();
    return r;
  }
  static QuadExt sqrt(const QSqrt2& delta) { return make(0, 1, delta); }

  const QSqrt2& x() const { return x_; }
  const QSqrt2& y() const { return y_; }
  const QSqrt2& delta() const { return delta_; }

  bool in_base() const { return y_.is_zero(); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  std::optional<QSqrt2> base_value() const {
    if (in_base()) return x_;
    return std::nullopt;
  }

  // the Q(sqrt2)-automorphism of the extension: sqrt(D) -> -sqrt(D)
  QuadExt tau() const { return with(x_, -y_); }

  QuadExt operator-() const { return with(-x_, -y_); }

  QuadExt& operator+=(const QuadExt& o) { return *this = add(*this, o, 1); }
  QuadExt& operator-=(const QuadExt& o) { return *this = add(*this, o, -1); }
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) { return add(a, b, 1); }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return add(a, b, -1); }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  QuadExt inverse() const;

  // re-express in the field of `target` if sqrt(D) is a Q(sqrt2)-multiple of sqrt(D')
  std::optional<QuadExt> coerced_to(const QSqrt2& target_delta) const;

  friend bool same_field(const QuadExt& a, const QuadExt& b) {
    return a.in_base() || b.in_base() || a.delta_ == b.delta_;
  }

 private:
  QuadExt with(QSqrt2 x, QSqrt2 y) const {
    QuadExt r;
    r.x_ = std::move(x);
    r.y_ = std::move(y);
    r.delta_ = delta_;
    if (r.y_.is_zero()) r.delta_ = 1;
    return r;
  }
  static std::pair<QuadExt, QuadExt> unify(const QuadExt& a, const QuadExt& b);
  static QuadExt add(const QuadExt& a, const QuadExt& b, int s);
  void normalize();

  QSqrt2 x_;
  QSqrt2 y_;
  QSqrt2 delta_ = 1;
};

inline void QuadExt::normalize() {
  if (y_.is_zero()) {
    delta_ = 1;
    return;
  }
  if (sign(delta_) <= 0) throw Error("radicand must be positive");
  if (auto s = sqrt_exact(delta_)) {
    x_ += y_ * *s;
    y_ = 0;
    delta_ = 1;
    return;
  }
  // integral components
  Int l = lcm(delta_.a().get_den(), delta_.b().get_den());
  Int A = delta_.a().get_num() * (l / delta_.a().get_den());
  Int B = delta_.b().get_num() * (l / delta_.b().get_den());
  // sqrt(D) = sqrt(D l^2) / l
  A *= l;
  B *= l;
  y_ /= QSqrt2(Rat(l));
  // pull out powers of 2: sqrt(2E) = sqrt2 * sqrt(E)
  Int g = gcd(A, B);
  while (g != 0 && mpz_even_p(g.get_mpz_t())) {
    A /= 2;
    B /= 2;
    g /= 2;
    y_ *= QSqrt2::sqrt2();
  }
  Int s = square_part_root(g);
  if (s > 1) {
    Int s2 = s * s;
    A /= s2;
    B /= s2;
    y_ *= QSqrt2(Rat(s));
  }
  delta_ = QSqrt2(Rat(A), Rat(B));
  if (auto r = sqrt_exact(delta_)) {
    x_ += y_ * *r;
    y_ = 0;
    delta_ = 1;
  }
}

inline std::optional<QuadExt> QuadExt::coerced_to(const QSqrt2& target) const {
  if (in_base()) return *this;
  if (delta_ == target) return *this;
  auto r = sqrt_exact(delta_ / target);
  if (!r) return std::nullopt;
  QuadExt out;
  out.x_ = x_;
  out.y_ = y_ * *r;
  out.delta_ = target;
  return out;
}

inline std::pair<QuadExt, QuadExt> QuadExt::unify(const QuadExt& a, const QuadExt& b) {
  if (same_field(a, b)) return {a, b};
  if (auto c = a.coerced_to(b.delta_)) return {*c, b};
  throw FieldMismatch("operands live in different quadratic extensions");
}

inline QuadExt QuadExt::add(const QuadExt& a0, const QuadExt& b0, int s) {
  auto [a, b] = unify(a0, b0);
  QuadExt r;
  r.delta_ = a.in_base() ? b.delta_ : a.delta_;
  if (s > 0) {
    r.x_ = a.x_ + b.x_;
    r.y_ = a.y_ + b.y_;
  } else {
    r.x_ = a.x_ - b.x_;
    r.y_ = a.y_ - b.y_;
  }
  if (r.y_.is_zero()) r.delta_ = 1;
  return r;
}

inline QuadExt& QuadExt::operator*=(const QuadExt& o0) {
  auto [a, o] = unify(*this, o0);
  QSqrt2 d = a.in_base() ? o.delta_ : a.delta_;
  QSqrt2 nx = a.x_ * o.x_ + a.y_ * o.y_ * d;
  QSqrt2 ny = a.x_ * o.y_ + a.y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  delta_ = y_.is_zero() ? QSqrt2(1) : d;
  return *this;
}

inline QuadExt QuadExt::inverse() const {
  if (in_base()) return QuadExt(x_.inverse());
  // 1/(x + y r) = (x - y r)/(x^2 - y^2 D)
  QSqrt2 n = x_ * x_ - y_ * y_ * delta_;
  if (n.is_zero()) throw Error("division by zero in quadratic extension");
  QSqrt2 ni = n.inverse();
  return with(x_ * ni, -y_ * ni);
}

inline QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.in_base()) {
    QSqrt2 inv = o.x_.inverse();
    x_ *= inv;
    y_ *= inv;
    return *this;
  }
  return *this *= o.inverse();
}

inline bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.in_base() != b.in_base()) return false;
  if (a.in_base()) return a.x() == b.x();
  auto c = a.coerced_to(b.delta());
  return c && c->x() == b.x() && c->y() == b.y();
}
inline bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

// sign of a single-field element
inline int sign(const QuadExt& v) {
  int sx = sign(v.x()), sy = sign(v.y());
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // opposite signs: which of |x|, |y| sqrt(D) is bigger
  QSqrt2 d = v.x() * v.x() - v.y() * v.y() * v.delta();
  return sign(d) > 0 ? sx : sy;
}

inline QuadExt abs(const QuadExt& v) { return sign(v) < 0 ? -v : v; }

// Minimal polynomial over Q, monic, coefficients from the constant term up.
inline std::vector<Rat> minimal_polynomial(const QuadExt& v) {
  using Poly = std::vector<QSqrt2>;  // low to high, coefficients in Q(sqrt2)
  auto mul = [](const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  auto rational = [](const Poly& p) -> std::optional<std::vector<Rat>> {
    std::vector<Rat> out;
    for (auto& c : p) {
      if (!c.is_rational()) return std::nullopt;
      out.push_back(c.a());
    }
    return out;
  };
  Poly p;
  if (v.in_base())
    p = {-v.x(), 1};
  else
    p = {v.x() * v.x() - v.y() * v.y() * v.delta(), -2 * v.x(), 1};
  if (auto r = rational(p)) return *r;
  Poly pc;
  for (auto& c : p) pc.push_back(c.conj());
  Poly full = mul(p, pc);
  auto r = *rational(full);
  // the product may be a square (v and its sqrt2-conjugate coincide up to tau)
  if (r.size() == 5) {
    // try q = X^2 + c1 X + c0 with q^2 = full
    Rat c1 = r[3] / 2;
    Rat c0 = (r[2] - c1 * c1) / 2;
    std::vector<Rat> q = {c0, c1, 1};
    std::vector<Rat> sq(5, Rat(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sq[i + j] += q[i] * q[j];
    if (sq == r) return q;
  }
  return r;
}

inline std::string to_string(const QuadExt& v) {
  if (v.in_base()) return to_string(v.x());
  std::string ys = to_string(v.y());
  std::string out = v.x().is_zero() ? "" : to_string(v.x()) + "+";
  return out + "(" + ys + ")*sqrt(" + to_string(v.delta()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << to_string(v); }

}  // namespace h4spec
