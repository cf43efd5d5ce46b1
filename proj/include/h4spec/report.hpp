#pragma once
// Reports: JSON (schema h4spec-report/1) with exact values stored
// structurally, so a report read back compares equal to the one written.

#include <json.hpp>  // nlohmann, vendored

#include "decimal.hpp"

namespace h4spec {

using json = nlohmann::ordered_json;  // keys keep insertion order

inline constexpr const char* report_schema = "h4spec-report/1";

// ---- exact encodings

inline json encode(const Rat& r) { return r.get_str(); }
inline json encode(const QSqrt2& v) { return {{"a", encode(v.a())}, {"b", encode(v.b())}}; }
inline json encode(const QuadExt& v) {
  return {{"x", encode(v.x())}, {"y", encode(v.y())}, {"delta", encode(v.delta())}};
}
inline json encode(const Real& v) {
  json s = json::array();
  for (auto& t : v.surds()) s.push_back(encode(t));
  return {{"base", encode(v.base())}, {"surds", s}};
}
inline json encode(const ProjValue& v) { return v.is_infinite() ? json("inf") : encode(v.value()); }
inline json encode(const DyadicInterval& v) { return {{"lo", encode(v.lo)}, {"hi", encode(v.hi)}}; }

inline Rat decode_rat(const json& j) {
  Rat r;
  if (!j.is_string() || r.set_str(j.get<std::string>(), 10) != 0) throw Error("bad rational in report: " + j.dump());
  r.canonicalize();
  return r;
}
inline QSqrt2 decode_qsqrt2(const json& j) { return {decode_rat(j.at("a")), decode_rat(j.at("b"))}; }
inline QuadExt decode_quad(const json& j) {
  return QuadExt::make(decode_qsqrt2(j.at("x")), decode_qsqrt2(j.at("y")), decode_qsqrt2(j.at("delta")));
}
inline Real decode_real(const json& j) {
  Real r(decode_qsqrt2(j.at("base")));
  for (auto& s : j.at("surds")) r += Real(decode_quad(s));
  return r;
}
inline ProjValue decode_proj(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ProjValue::infinity();
  return ProjValue(decode_quad(j));
}
inline DyadicInterval decode_interval(const json& j) { return {decode_rat(j.at("lo")), decode_rat(j.at("hi"))}; }

// a value for output: exact form, readable form, correctly rounded decimal
// (single-field values as {x, y, delta}; sums over several fields as {base, surds})
inline json value_entry(const QuadExt& v, unsigned digits = default_digits()) {
  return {{"exact", encode(v)}, {"text", to_string(v)}, {"decimal", to_decimal(v, digits)}};
}
inline json value_entry(const Real& v, unsigned digits = default_digits()) {
  if (auto q = v.as_quad()) return value_entry(*q, digits);
  return {{"exact", encode(v)}, {"text", to_string(v)}, {"decimal", to_decimal(v, digits)}};
}
inline Real decode_value(const json& exact) {
  if (exact.contains("base")) return decode_real(exact);
  return Real(decode_quad(exact));
}
inline json value_entry(const ProjValue& v, unsigned digits = default_digits()) {
  if (v.is_infinite()) return {{"exact", "inf"}, {"text", "inf"}, {"decimal", "inf"}};
  return value_entry(v.value(), digits);
}
inline json interval_entry(const DyadicInterval& v, unsigned digits = default_digits()) {
  return {{"enclosure", encode(v)}, {"lo", to_decimal(v.lo, digits)}, {"hi", to_decimal(v.hi, digits)},
          {"width", to_decimal(v.width(), digits)}};
}

// ---- the report

struct Verdict {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Verdict> verdicts;
  double seconds = 0;
  std::string error;

  bool ok() const {
    if (!error.empty()) return false;
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
  }
  friend bool operator==(const Report&, const Report&) = default;
};

inline json to_json(const Report& r) {
  json v = json::array();
  for (auto& x : r.verdicts) v.push_back({{"id", x.id}, {"pass", x.pass}, {"detail", x.detail}, {"seconds", x.seconds}});
  json j = {{"schema", report_schema}, {"command", r.command}, {"inputs", r.inputs}, {"results", r.results},
            {"verdicts", v}, {"seconds", r.seconds}, {"ok", r.ok()}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline Report report_from_json(const json& j) {
  if (j.value("schema", "") != report_schema) throw Error("not an " + std::string(report_schema) + " document");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  for (auto& v : j.at("verdicts"))
    r.verdicts.push_back({v.at("id").get<std::string>(), v.at("pass").get<bool>(), v.at("detail").get<std::string>(),
                          v.at("seconds").get<double>()});
  r.seconds = j.at("seconds").get<double>();
  r.error = j.value("error", "");
  return r;
}

// CSV: a results["rows"] table prints as itself (columns from the first row,
// nested values as JSON); otherwise one row per leaf of the results keyed by
// JSON pointer, then the verdicts
inline std::string to_csv(const Report& r) {
  auto quote = [](std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  auto leaf = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (r.error.empty() && r.results.contains("rows") && r.results["rows"].is_array() && !r.results["rows"].empty() &&
      r.results["rows"][0].is_object()) {
    std::string out;
    std::vector<std::string> cols;
    for (auto& [k, v] : r.results["rows"][0].items()) cols.push_back(k);
    for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + quote(cols[i]);
    out += "\n";
    for (auto& row : r.results["rows"]) {
      for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + quote(row.contains(cols[i]) ? leaf(row[cols[i]]) : "");
      out += "\n";
    }
    return out;
  }
  std::string out = "key,value\n";
  out += "schema," + std::string(report_schema) + "\n";
  out += "command," + quote(r.command) + "\n";
  // flatten() of an empty object is null; items() must not outlive these
  const json in = r.inputs.empty() ? json::object() : r.inputs.flatten();
  const json res = r.results.empty() ? json::object() : r.results.flatten();
  for (auto& [k, v] : in.items()) out += quote("/inputs" + k) + "," + quote(leaf(v)) + "\n";
  for (auto& [k, v] : res.items()) out += quote("/results" + k) + "," + quote(leaf(v)) + "\n";
  for (auto& v : r.verdicts)
    out += quote("/verdicts/" + v.id) + "," + quote(std::string(v.pass ? "PASS" : "FAIL") + (v.detail.empty() ? "" : " " + v.detail)) + "\n";
  if (!r.error.empty()) out += "error," + quote(r.error) + "\n";
  out += std::string("ok,") + (r.ok() ? "true" : "false") + "\n";
  return out;
}

}  // namespace h4spec
