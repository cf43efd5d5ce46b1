#pragma once
// Integer solutions of 2x^2 + y1^2 + y2^2 = 4 x y1 y2 and the discrete part of
// the spectrum below 2 sqrt2 they parametrize.

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "real.hpp"

namespace h4spec {

struct VSTriple {
  Int x, y1, y2;

  VSTriple(Int x_, Int y1_, Int y2_) : x(std::move(x_)), y1(std::move(y1_)), y2(std::move(y2_)) {
    if (x <= 0 || y1 <= 0 || y2 <= 0) throw Error("triple entries must be positive");
    if (2 * x * x + y1 * y1 + y2 * y2 != 4 * x * y1 * y2) throw Error("not on the surface 2x^2+y1^2+y2^2=4xy1y2");
    if (y2 < y1) std::swap(y1, y2);
  }
  friend bool operator<(const VSTriple& a, const VSTriple& b) {
    return std::tie(a.x, a.y1, a.y2) < std::tie(b.x, b.y1, b.y2);
  }
  friend bool operator==(const VSTriple& a, const VSTriple& b) { return a.x == b.x && a.y1 == b.y1 && a.y2 == b.y2; }
};

// Vieta moves in x, y1, y2 (the other root of the quadratic in that variable).
// A move whose result is not positive is the parent direction and is reported empty.
inline std::array<std::optional<VSTriple>, 3> neighbors(const VSTriple& t) {
  auto make = [](const Int& x, const Int& a, const Int& b) -> std::optional<VSTriple> {
    if (x <= 0 || a <= 0 || b <= 0) return std::nullopt;
    return VSTriple(x, a, b);
  };
  return {make(2 * t.y1 * t.y2 - t.x, t.y1, t.y2), make(t.x, 4 * t.x * t.y2 - t.y1, t.y2),
          make(t.x, t.y1, 4 * t.x * t.y1 - t.y2)};
}

inline std::set<VSTriple> enumerate_triples(const Int& bound) {
  if (bound < 1) throw Error("bound must be >= 1");
  std::set<VSTriple> seen;
  std::deque<VSTriple> queue;
  VSTriple root(1, 1, 1);
  seen.insert(root);
  queue.push_back(root);
  while (!queue.empty()) {
    VSTriple t = queue.front();
    queue.pop_front();
    for (auto& n : neighbors(t)) {
      if (!n || n->x > bound || n->y2 > bound) continue;
      if (seen.insert(*n).second) queue.push_back(*n);
    }
  }
  return seen;
}

struct TripleSets {
  std::vector<Int> xs, ys;
};

inline TripleSets n2_m2_sets(const Int& bound) {
  std::set<Int> xs, ys;
  for (auto& t : enumerate_triples(bound)) {
    xs.insert(t.x);
    ys.insert(t.y1);
    ys.insert(t.y2);
  }
  return {{xs.begin(), xs.end()}, {ys.begin(), ys.end()}};
}

struct SpectrumPoint {
  QuadExt value;
  char source;  // 'x' : sqrt(8 - 2/x^2), 'y' : sqrt(8 - 4/y^2)
  Int parameter;
};

inline QuadExt spectrum_from_x(const Int& x) { return QuadExt::sqrt(QSqrt2(8 - make_rat(2, x * x))); }
inline QuadExt spectrum_from_y(const Int& y) { return QuadExt::sqrt(QSqrt2(8 - make_rat(4, y * y))); }

// all values in increasing order (squares are rational, so ordering is exact)
inline std::vector<SpectrumPoint> discrete_spectrum(const Int& bound) {
  TripleSets s = n2_m2_sets(bound);
  std::vector<std::pair<Rat, SpectrumPoint>> v;
  for (auto& x : s.xs) v.push_back({8 - make_rat(2, x * x), {spectrum_from_x(x), 'x', x}});
  for (auto& y : s.ys) v.push_back({8 - make_rat(4, y * y), {spectrum_from_y(y), 'y', y}});
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<SpectrumPoint> out;
  for (auto& p : v) out.push_back(p.second);
  return out;
}

}  // namespace h4spec
