#pragma once
// Real: a finite sum  base + sum_i y_i sqrt(D_i)  of surds from pairwise
// different quadratic extensions of Q(sqrt2).  Section values L = [P] + [Q]
// land here when the two sides have unrelated radicands.

#include "interval.hpp"

namespace h4spec {

class Real {
 public:
  Real() = default;
  Real(const QuadExt& v) : base_(v.x()) {
    if (!v.in_base()) terms_.push_back(QuadExt::make(0, v.y(), v.delta()));
  }
  Real(const QSqrt2& v) : base_(v) {}
  Real(const Rat& v) : base_(v) {}
  Real(long v) : base_(v) {}
  Real(int v) : base_(v) {}

  const QSqrt2& base() const { return base_; }
  const std::vector<QuadExt>& surds() const { return terms_; }

  // one field: representable as a single QuadExt
  bool single_field() const { return terms_.size() <= 1; }
  QuadExt exact() const {
    if (terms_.size() > 1) throw FieldMismatch("sum of surds from several fields");
    if (terms_.empty()) return QuadExt(base_);
    return QuadExt::make(base_, terms_[0].y(), terms_[0].delta());
  }
  std::optional<QuadExt> as_quad() const {
    if (!single_field()) return std::nullopt;
    return exact();
  }

  Real operator-() const {
    Real r;
    r.base_ = -base_;
    for (auto& t : terms_) r.terms_.push_back(-t);
    return r;
  }
  Real& operator+=(const Real& o) {
    base_ += o.base_;
    for (auto& t : o.terms_) add_surd(t);
    return *this;
  }
  Real& operator-=(const Real& o) { return *this += -o; }
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }

  Real& operator*=(const QSqrt2& s) {
    base_ *= s;
    if (s.is_zero()) terms_.clear();
    for (auto& t : terms_) t = t * QuadExt(s);
    return *this;
  }
  friend Real operator*(Real a, const QSqrt2& s) { return a *= s; }

  // products/quotients are only closed inside one field
  friend Real operator*(const Real& a, const Real& b) {
    if (a.terms_.empty()) return b * a.base_;
    if (b.terms_.empty()) return a * b.base_;
    return Real(a.exact() * b.exact());
  }
  friend Real operator/(const Real& a, const Real& b) {
    if (b.terms_.empty()) return a * b.base_.inverse();
    return Real(a.exact() / b.exact());
  }

  DyadicInterval enclose(unsigned long bits) const {
    DyadicInterval r = h4spec::enclose(base_, bits);
    for (auto& t : terms_) r = r + h4spec::enclose(t, bits);
    return r;
  }

 private:
  void add_surd(const QuadExt& t) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (auto c = t.coerced_to(it->delta())) {
        *it += *c;
        if (it->is_zero()) terms_.erase(it);
        return;
      }
    }
    terms_.push_back(t);
  }

  QSqrt2 base_;
  std::vector<QuadExt> terms_;  // each with zero rational part
};

inline DyadicInterval enclose(const Real& v, unsigned long bits) { return v.enclose(bits); }

// Exact for one or two fields: sign(u + w) with w = c sqrt(D2) is
// sign(u) when both agree, else sign(u) * sign(u^2 - c^2 D2), and u^2 - c^2 D2
// is back in u's field.  Three or more fields fall back to refinement.
inline int sign(const Real& v) {
  const auto& t = v.surds();
  if (t.size() <= 1) return sign(v.exact());
  if (t.size() == 2) {
    QuadExt u = QuadExt(v.base()) + t[0];
    QuadExt w = t[1];
    int su = sign(u), sw = sign(w);
    if (su == 0) return sw;
    if (su == sw) return su;
    QuadExt d = u * u - QuadExt(w.y() * w.y() * w.delta());
    return su * sign(d);
  }
  for (unsigned long bits = 64; bits <= (1ul << 16); bits *= 2) {
    DyadicInterval r = v.enclose(bits);
    if (r.lo > 0) return 1;
    if (r.hi < 0) return -1;
  }
  throw Undecidable("cannot separate a sum of surds from 0");
}

inline int compare(const Real& a, const Real& b) { return sign(a - b); }
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }

inline Real abs(const Real& v) { return sign(v) < 0 ? -v : v; }
inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

inline std::string to_string(const Real& v) {
  if (v.single_field()) return to_string(v.exact());
  std::string out = to_string(v.base());
  for (auto& t : v.surds()) out += "+(" + to_string(t.y()) + ")*sqrt(" + to_string(t.delta()) + ")";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Real& v) { return os << to_string(v); }

}  // namespace h4spec
