#pragma once
// Bounded certification of the gaps (sqrt238/5, sqrt10) and (sqrt10, m0):
// every canonical cycle up to a length is either pruned by a forbidden block
// or evaluated exactly and checked to fall outside the open interval.

#include <thread>

#include "spectra.hpp"

namespace h4spec {

inline const FiniteWord& gap_S() {
  static const FiniteWord s("31321312");
  return s;
}

// m0 = (2124 sqrt2 + 48 sqrt238) / 1177, the sup over S* 23232 S
inline QuadExt gap_m0() {
  return (QuadExt(QSqrt2(0, 2124)) + QuadExt(48) * QuadExt::sqrt(238)) / QuadExt(1177);
}

inline SplicedBiWord gap_witness_word() { return {reverse(gap_S()), FiniteWord("23232"), gap_S()}; }

// U_k = S* 23232 S_k 3232 S with S_k = S^k 3132
inline SplicedBiWord limit_family_word(size_t k) {
  return {reverse(gap_S()), FiniteWord("23232") + gap_S().repeat(k) + FiniteWord("31323232"), gap_S()};
}

// checked in this order, on the word, its reversal, its swap and both
inline const std::vector<std::pair<std::vector<std::string>, QuadExt>>& prune_rules() {
  static const std::vector<std::pair<std::vector<std::string>, QuadExt>> rules = {
      {{"333"}, QuadExt(QSqrt2(0, 3))},
      {{"233"}, QuadExt(QSqrt2(0, Rat(5, 2)))},
      {{"1331"}, QuadExt::make(QSqrt2(0, Rat(8, 5)), Rat(2, 5), 7)},
      {{"1232", "3212"}, QuadExt(QSqrt2(0, Rat(9, 4)))},
  };
  return rules;
}

inline std::optional<QuadExt> prune_bound(const PeriodicBiWord& t) {
  const FiniteWord& w = t.cycle();
  size_t reps = 4 / w.size() + 2;
  std::vector<std::string> variants;
  for (const FiniteWord& v : {w, reverse(w), vee(w), reverse(vee(w))}) variants.push_back(v.repeat(reps).str());
  for (auto& [blocks, bound] : prune_rules())
    for (auto& b : blocks)
      for (auto& v : variants)
        if (v.find(b) != std::string::npos) return bound;
  return std::nullopt;
}

// canonical primitive cycles of length exactly n (Lyndon words filtered by the
// reversal / swap symmetry)
inline std::vector<FiniteWord> canonical_cycles(size_t n) {
  std::vector<FiniteWord> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (w.size() == n) {
      std::string s;
      for (int d : w) s += static_cast<char>('1' + d);
      FiniteWord f(s);
      if (PeriodicBiWord::canonical(f) == f) out.push_back(f);
    }
    size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 2) w.pop_back();
  }
  return out;
}

struct GapViolation {
  std::string word;
  QuadExt value;
};

struct GapReport {
  Real lo, hi;
  size_t max_len = 0;
  size_t words_scanned = 0, pruned = 0, evaluated = 0;
  std::vector<size_t> per_length;  // words scanned at each length 1..max_len
  std::vector<GapViolation> violations;
  std::vector<std::string> lo_witnesses, hi_witnesses;
  bool passed() const { return violations.empty(); }
};

inline GapReport gap_certify(const Real& lo, const Real& hi, size_t max_len, unsigned jobs = 1) {
  if (!(lo < hi)) throw Error("gap endpoints must satisfy lo < hi");
  if (max_len < 1) throw Error("max_len must be >= 1");
  GapReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.max_len = max_len;
  std::vector<FiniteWord> words;
  for (size_t n = 1; n <= max_len; ++n) {
    auto c = canonical_cycles(n);
    rep.per_length.push_back(c.size());
    words.insert(words.end(), c.begin(), c.end());
  }
  rep.words_scanned = words.size();
  jobs = std::max(1u, jobs);
  std::vector<GapReport> part(jobs);
  auto work = [&](unsigned j) {
    GapReport& r = part[j];
    for (size_t i = j; i < words.size(); i += jobs) {
      PeriodicBiWord t(words[i]);
      if (auto b = prune_bound(t); b && Real(*b) >= hi) {
        ++r.pruned;
        continue;
      }
      ++r.evaluated;
      ProjValue m = markoff_periodic(t);
      if (m.is_infinite()) continue;
      Real v(m.value());
      int cl = compare(v, lo), ch = compare(v, hi);
      if (cl > 0 && ch < 0) r.violations.push_back({t.to_string(), m.value()});
      if (cl == 0) r.lo_witnesses.push_back(t.to_string());
      if (ch == 0) r.hi_witnesses.push_back(t.to_string());
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> th;
    for (unsigned j = 0; j < jobs; ++j) th.emplace_back(work, j);
    for (auto& t : th) t.join();
  }
  for (auto& r : part) {
    rep.pruned += r.pruned;
    rep.evaluated += r.evaluated;
    rep.violations.insert(rep.violations.end(), r.violations.begin(), r.violations.end());
    rep.lo_witnesses.insert(rep.lo_witnesses.end(), r.lo_witnesses.begin(), r.lo_witnesses.end());
    rep.hi_witnesses.insert(rep.hi_witnesses.end(), r.hi_witnesses.begin(), r.hi_witnesses.end());
  }
  auto by_word = [](auto& a, auto& b) { return a.word < b.word; };
  std::sort(rep.violations.begin(), rep.violations.end(), by_word);
  std::sort(rep.lo_witnesses.begin(), rep.lo_witnesses.end());
  std::sort(rep.hi_witnesses.begin(), rep.hi_witnesses.end());
  return rep;
}

struct LimitPoint {
  size_t k;
  MarkoffBound value;
};

inline std::vector<LimitPoint> limit_point_family(size_t k_max, const Rat& tol = Rat(1, pow10(40))) {
  if (k_max < 1) throw Error("k_max must be >= 1");
  std::vector<LimitPoint> out;
  for (size_t k = 1; k <= k_max; ++k) out.push_back({k, markoff_spliced(limit_family_word(k), tol)});
  return out;
}

}  // namespace h4spec
