#pragma once
// The h4spec command line: argument parsing (CLI11) and dispatch to the
// library, producing a Report. Needs vendor/ on the include path.

#include <CLI11.hpp>
#include <iostream>

#include "acceptance.hpp"
#include "expr.hpp"

namespace h4spec {

struct UsageError : Error {
  using Error::Error;
};

namespace cli {

struct Args {
  std::string command;
  std::string format = "json";
  unsigned precision = default_digits();
  // shared options, read by the commands that declare them
  std::string word, section, value, lo, hi, alpha, eps, tol, triple, lattice = "sum";
  long bound = 60, qmax = 1000, qmin = 1, count = 20;
  size_t max_len = 8, depth = 3;
  unsigned jobs = 1;
  bool lagrange = false;
  std::map<std::string, std::string> given;  // option name -> raw text, for the report
};

inline json rat_entry(const Rat& r, unsigned digits) {
  return {{"exact", r.get_str()}, {"decimal", to_decimal(r, digits)}};
}

inline json minpoly(const QuadExt& v) {
  json out = json::array();
  for (auto& c : minimal_polynomial(v)) out.push_back(c.get_str());
  return out;
}

inline json markoff_bound_entry(const MarkoffBound& b, unsigned digits) {
  json j = {{"certified_exact", b.exact.has_value()}, {"enclosure", interval_entry(b.enclosure, digits)},
            {"lower", value_entry(b.lower, digits)}, {"upper", value_entry(b.upper, digits)}, {"depth", b.depth}};
  if (b.exact) {
    j["value"] = value_entry(*b.exact, digits);
    j["minimal_polynomial"] = minpoly(*b.exact);
  }
  return j;
}

// "(32)" is periodic; "(L)M(R)" with two cycles is spliced
inline bool is_spliced(const std::string& w) {
  return std::count(w.begin(), w.end(), '(') == 2;
}

inline Report dispatch(const Args& a) {
  Report r;
  r.command = a.command;
  for (auto& [k, v] : a.given) r.inputs[k] = v;
  const unsigned D = a.precision;
  json& out = r.results;
  const std::string& c = a.command;

  if (c == "eval") {
    EvPeriodicWord w = EvPeriodicWord::parse(a.word);
    out["word"] = w.to_string();
    out["value"] = value_entry(eval(w), D);
  } else if (c == "expand") {
    QuadExt v = parse_quad(a.value);
    Expansion e = expand(ProjValue(v), static_cast<size_t>(a.count));
    out["value"] = value_entry(v, D);
    out["digits"] = e.digits.str();
    out["terminated"] = e.terminated;
    out["remainder"] = value_entry(e.remainder, D);
    try {
      out["word"] = to_word(ProjValue(v)).to_string();
    } catch (const Error&) {
      out["word"] = nullptr;  // not eventually periodic within the search limit
    }
  } else if (c == "markoff") {
    out["word"] = a.word;
    if (is_spliced(a.word)) {
      Rat tol = a.tol.empty() ? Rat(1, pow10(12)) : parse_rational(a.tol);
      MarkoffBound b = markoff_spliced(SplicedBiWord::parse(a.word), tol);
      out["spliced"] = markoff_bound_entry(b, D);
      if (b.exact) {
        out["exact"] = encode(*b.exact);
        out["decimal"] = to_decimal(*b.exact, D);
        out["minimal_polynomial"] = minpoly(*b.exact);
      }
    } else {
      PeriodicBiWord t = PeriodicBiWord::parse(a.word);
      ProjValue m = markoff_periodic(t);
      out["canonical"] = t.to_string();
      out["value"] = value_entry(m, D);
      if (!m.is_infinite()) {
        out["exact"] = encode(m.value());
        out["decimal"] = to_decimal(m.value(), D);
        out["minimal_polynomial"] = minpoly(m.value());
      }
    }
  } else if (c == "lagrange") {
    EvPeriodicWord w = EvPeriodicWord::parse(a.word);
    ProjValue l = lagrange_ev_periodic(w);
    out["word"] = w.to_string();
    out["value"] = value_entry(l, D);
    if (!l.is_infinite()) {
      out["exact"] = encode(l.value());
      out["decimal"] = to_decimal(l.value(), D);
      out["minimal_polynomial"] = minpoly(l.value());
    }
  } else if (c == "section") {
    BiSection s = BiSection::parse(a.section);
    SectionValue v = section_value(s);
    out["section"] = s.to_string();
    out["left"] = value_entry(eval(s.left), D);
    out["right"] = value_entry(eval(s.right), D);
    if (v.infinite) out["value"] = "inf";
    else out["value"] = value_entry(v.value, D);
  } else if (c == "triples") {
    json rows = json::array();
    for (auto& t : enumerate_triples(Int(a.bound)))
      rows.push_back({{"x", t.x.get_str()}, {"y1", t.y1.get_str()}, {"y2", t.y2.get_str()}});
    TripleSets s = n2_m2_sets(Int(a.bound));
    json xs = json::array(), ys = json::array();
    for (auto& x : s.xs) xs.push_back(x.get_str());
    for (auto& y : s.ys) ys.push_back(y.get_str());
    out["N2"] = xs;
    out["M2"] = ys;
    out["rows"] = rows;
  } else if (c == "discrete-spectrum") {
    json rows = json::array();
    for (auto& p : discrete_spectrum(Int(a.bound)))
      rows.push_back({{"value_exact", to_string(p.value)},
                      {"value_decimal", to_decimal(p.value, D)},
                      {"source", std::string(1, p.source)},
                      {"parameter", p.parameter.get_str()},
                      {"exact", encode(p.value)}});
    out["rows"] = rows;
  } else if (c == "gap-check") {
    Real lo = parse_expr(a.lo), hi = parse_expr(a.hi);
    GapReport g = gap_certify(lo, hi, a.max_len, a.jobs);
    out["lo"] = value_entry(lo, D);
    out["hi"] = value_entry(hi, D);
    out["max_len"] = g.max_len;
    out["words_scanned"] = g.words_scanned;
    out["pruned"] = g.pruned;
    out["evaluated"] = g.evaluated;
    out["per_length"] = g.per_length;
    out["lo_witnesses"] = g.lo_witnesses;
    out["hi_witnesses"] = g.hi_witnesses;
    json v = json::array();
    for (auto& x : g.violations) v.push_back({{"word", x.word}, {"value", value_entry(x.value, D)}});
    out["violations"] = v;
    r.verdicts.push_back({"gap", g.passed(), std::to_string(g.violations.size()) + " spectrum values inside", 0});
  } else if (c == "hall" || c == "hall-lagrange") {
    Real alpha = parse_expr(a.alpha);
    Rat eps = a.eps.empty() ? Rat(1, pow10(9)) : parse_rational(a.eps);
    HallResult h = hall_construct(alpha, eps);
    out["alpha"] = value_entry(alpha, D);
    out["n"] = h.n;
    out["P1"] = h.parts.p1.to_string();
    out["P2"] = h.parts.p2.to_string();
    out["word"] = h.word.to_string();
    out["markoff"] = markoff_bound_entry(h.markoff, D);
    DyadicInterval dev = to_interval(abs(h.markoff.upper - alpha), eps / 16) ;
    DyadicInterval dev2 = to_interval(abs(h.markoff.lower - alpha), eps / 16);
    bool close = dev.hi <= eps && dev2.hi <= eps;
    r.verdicts.push_back({"hall", close, "|M(T) - alpha| <= eps", 0});
    if (c == "hall-lagrange" || a.lagrange) {
      HallLagrange hl = hall_lagrange_construct(alpha, a.depth, eps);
      json blocks = json::array();
      bool nested = true;
      for (size_t j = 0; j < hl.blocks.size(); ++j) {
        blocks.push_back({{"block", hl.blocks[j].str()},
                          {"left_cut", hl.left_cuts[j]},
                          {"right_cut", hl.right_cuts[j]},
                          {"enclosure", interval_entry(hl.enclosures[j], D)}});
        if (j) nested &= hl.enclosures[j - 1].contains(hl.enclosures[j]);
      }
      out["lagrange"] = {{"left_digit", std::string(1, to_char(hl.left_digit))},
                         {"right_digit", std::string(1, to_char(hl.right_digit))},
                         {"blocks", blocks}};
      r.verdicts.push_back({"hall-lagrange", nested, "block enclosures nested", 0});
    }
  } else if (c == "dim-bound") {
    Rat eps = parse_rational(a.eps.empty() ? "1/2" : a.eps), tol = parse_rational(a.tol.empty() ? "1/1000000" : a.tol);
    DimBound d = dim_lower_bound(eps, tol);
    out["m"] = d.ifs.m;
    json cs = json::array();
    for (auto& ci : d.ifs.c) cs.push_back(value_entry(ci, D));
    out["c"] = cs;
    out["alpha"] = value_entry(d.ifs.alpha, D);
    out["beta"] = value_entry(d.ifs.beta, D);
    out["s_lo"] = rat_entry(d.s.lo, D);
    out["s_hi"] = rat_entry(d.s.hi, D);
    out["residual"] = interval_entry(d.residual, D);
    r.verdicts.push_back({"dim", d.s.lo > 0, "s_lo > 0", 0});
  } else if (c == "circle-orbit") {
    CirclePointQ p = parse_triple(a.triple);
    json rows = json::array();
    auto orbit = circle_orbit(p);
    for (auto& s : orbit)
      rows.push_back({{"a", s.point.a.get_str()}, {"b", s.point.b.get_str()}, {"c", s.point.c.get_str()},
                      {"digit", std::string(1, to_char(s.digit))}});
    out["triple"] = p.to_string();
    out["digits"] = orbit_digits(orbit).str();
    out["projection"] = value_entry(mod_proj(p), D);
    out["rows"] = rows;
  } else if (c == "pythagoras-tree") {
    json rows = json::array();
    for (auto& t : pythagoras_tree(Int(a.bound)))
      rows.push_back({{"a", t.a.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()}});
    out["count"] = rows.size();
    out["rows"] = rows;
  } else if (c == "lagrange-est") {
    QuadExt v = parse_quad(a.value);
    Sublattice l = a.lattice == "sum" ? Sublattice::sum_even : a.lattice == "num" ? Sublattice::num_even : Sublattice::den_even;
    LagrangeEstimate e = lagrange_estimate(v, a.qmax, l, a.qmin);
    out["value"] = value_entry(v, D);
    out["unbounded"] = e.unbounded;
    if (!e.unbounded) {
      out["lower_bound"] = rat_entry(e.value, D);
      out["best"] = e.p.get_str() + "/" + e.q.get_str();
      LagrangeEstimate ce = circle_lagrange_estimate(v, Int(a.qmax) * Int(a.qmax), Int(a.qmin) * Int(a.qmin));
      out["circle_lower_bound"] = rat_entry(ce.value, D);
      out["twice_circle"] = rat_entry(2 * ce.value, D);
    }
  } else if (c == "verify-paper") {
    AcceptanceOptions opt;
    opt.gap_len = a.max_len;
    opt.jobs = a.jobs;
    r.verdicts = run_acceptance(opt);
    json rows = json::array();
    for (auto& v : r.verdicts) rows.push_back({{"id", v.id}, {"result", v.pass ? "PASS" : "FAIL"}, {"detail", v.detail}});
    out["rows"] = rows;
  } else {
    throw UsageError("unknown subcommand: " + c);
  }
  return r;
}

// builds the parser; `a` receives the parsed values
inline std::unique_ptr<CLI::App> make_app(Args& a) {
  auto app = std::make_unique<CLI::App>("Exact spectra of the Hecke group H4: Markoff/Lagrange values, gaps, Hall's ray");
  app->require_subcommand(1);
  app->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--precision", a.precision, "decimal places (default from H4SPEC_DIGITS, else 20)")
      ->check(CLI::Range(0u, 10000u));
  app->fallthrough();

  auto sub = [&](const char* name, const char* help) { return app->add_subcommand(name, help); };
  CLI::App* s;
  s = sub("eval", "value [P] of a word prefix(cycle)");
  s->add_option("--word", a.word)->required();
  s = sub("expand", "digit expansion of a value");
  s->add_option("--value", a.value, "EXPR")->required();
  s->add_option("--count", a.count, "digits to produce")->check(CLI::Range(1L, 100000L));
  s = sub("markoff", "Markoff value of (cycle) or (L)M(R)");
  s->add_option("--word", a.word)->required();
  s->add_option("--tol", a.tol, "enclosure width for spliced words (EXPR, rational)");
  s = sub("lagrange", "Lagrange value of prefix(cycle)");
  s->add_option("--word", a.word)->required();
  s = sub("section", "value of a section (cycle)prefix|prefix(cycle)");
  s->add_option("--section", a.section)->required();
  s = sub("triples", "Vulakh-Schmidt triples with entries <= bound");
  s->add_option("--bound", a.bound)->check(CLI::Range(1L, 1000000000L));
  s = sub("discrete-spectrum", "spectrum values below 2sqrt2 from triples <= bound");
  s->add_option("--bound", a.bound)->check(CLI::Range(1L, 1000000000L));
  s = sub("gap-check", "bounded certification that (lo, hi) misses the spectrum");
  s->add_option("--lo", a.lo, "EXPR")->required();
  s->add_option("--hi", a.hi, "EXPR")->required();
  s->add_option("--max-len", a.max_len)->check(CLI::Range(size_t(1), size_t(20)));
  s->add_option("--jobs", a.jobs)->check(CLI::Range(1u, 256u));
  for (const char* name : {"hall", "hall-lagrange"}) {
    s = sub(name, name == std::string("hall") ? "word with Markoff value alpha > 4sqrt2"
                                              : "word with Lagrange value alpha, block by block");
    s->add_option("--alpha", a.alpha, "EXPR")->required();
    s->add_option("--eps", a.eps, "EXPR, rational");
    s->add_option("--depth", a.depth, "blocks")->check(CLI::Range(size_t(1), size_t(64)));
    if (name == std::string("hall")) s->add_flag("--lagrange", a.lagrange);
  }
  s = sub("dim-bound", "Hausdorff dimension lower bound near 2sqrt2");
  s->add_option("--eps", a.eps, "EXPR, rational");
  s->add_option("--tol", a.tol, "EXPR, rational");
  s = sub("circle-orbit", "Romik orbit of a Pythagorean triple");
  s->add_option("--triple", a.triple, "a,b,c")->required();
  s = sub("pythagoras-tree", "primitive triples with c <= cmax");
  s->add_option("--cmax", a.bound)->required()->check(CLI::Range(1L, 100000000L));
  s = sub("lagrange-est", "empirical Lagrange number of a surd (lower bound)");
  s->add_option("--value", a.value, "EXPR")->required();
  s->add_option("--qmax", a.qmax)->check(CLI::Range(1L, 100000000L));
  s->add_option("--qmin", a.qmin)->check(CLI::Range(1L, 100000000L));
  s->add_option("--lattice", a.lattice, "sum (p+q even), num (p even), den (q even)")
      ->check(CLI::IsMember({"sum", "num", "den"}));
  s = sub("verify-paper", "run every acceptance criterion");
  s->add_option("--max-len", a.max_len, "gap certification length")->check(CLI::Range(size_t(1), size_t(20)));
  s->add_option("--jobs", a.jobs)->check(CLI::Range(1u, 256u));
  return app;
}

inline void collect(const CLI::App& app, Args& a) {
  for (auto* s : app.get_subcommands()) {
    a.command = s->get_name();
    for (auto* o : s->get_options())
      if (o->count() > 0 && o->get_name() != "--help") a.given[o->get_name().substr(2)] = o->as<std::string>();
  }
  if (a.command == "verify-paper" && !a.given.count("max-len")) a.max_len = 12;
}

inline Report timed(const Args& a) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    r = dispatch(a);
  } catch (const ExprError&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    r = Report();
    r.command = a.command;
    for (auto& [k, v] : a.given) r.inputs[k] = v;
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cli

// argv[0] is the program name. Parse failures and malformed EXPR throw
// UsageError; failures inside a command come back in Report::error.
inline Report run(const std::vector<std::string>& argv) {
  cli::Args a;
  auto app = cli::make_app(a);
  std::vector<std::string> rev(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
  try {
    app->parse(rev);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cli::collect(*app, a);
  try {
    return cli::timed(a);
  } catch (const ExprError& e) {
    throw UsageError(e.what());
  }
}

// exit status: 0 ok, 1 failed verdict or command error, 2 usage error
inline int cli_main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  cli::Args a;
  auto app = cli::make_app(a);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app->exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cli::collect(*app, a);
  Report r;
  try {
    r = cli::timed(a);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (a.format == "csv") out << to_csv(r);
  else out << to_json(r).dump(2) << "\n";
  if (!r.error.empty()) err << "error: " << r.error << "\n";
  return r.ok() ? 0 : 1;
}

}  // namespace h4spec
