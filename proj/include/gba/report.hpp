#pragma once

// Scenario reports and their serializations (json, csv, dot).

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gba/action.hpp"
#include "gba/error.hpp"
#include "gba/group.hpp"

namespace gba {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "gba-report/1";

enum class status { pass, fail, unknown };

inline const char* status_name(status s) {
  switch (s) {
    case status::pass: return "pass";
    case status::fail: return "fail";
    case status::unknown: return "unknown";
  }
  return "unknown";
}

struct Params {
  std::optional<std::uint32_t> q;
  std::optional<std::string> group;
  std::optional<std::string> subgroup;
  std::uint64_t group_cap = default_group_cap;
  std::size_t omega_cap = default_omega_cap;
  std::size_t sweep_cap = 1200;
  SearchBudget budget{};

  DecideOptions decide() const {
    DecideOptions o;
    o.budget = budget;
    o.omega_cap = omega_cap;
    return o;
  }
  SweepOptions sweep(std::size_t max_order = 0) const {
    SweepOptions s;
    s.max_order = max_order;
    s.group_cap = sweep_cap;
    return s;
  }
  json to_json() const {
    json j = json::object();
    if (q) j["q"] = *q;
    if (group) j["group"] = *group;
    if (subgroup) j["subgroup"] = *subgroup;
    return j;
  }
};

struct Report {
  std::string id;
  json params = json::object();
  status result = status::pass;
  json measured = json::object();
  json expected = json::object();
  json witness = json::object();
  double seconds = 0;
  std::vector<std::string> failures;  // one line per discrepancy
  std::string dot;                    // graph-bearing scenarios only

  // Record a check; a false check turns the report into a failure.
  bool check(bool ok, const std::string& what) {
    if (!ok) {
      failures.push_back(what);
      if (result != status::unknown) result = status::fail;
    }
    return ok;
  }
  void mark_unknown(const std::string& why) {
    failures.push_back("unknown: " + why);
    if (result == status::pass) result = status::unknown;
  }
};

// ---------------------------------------------------------------------------
// Payloads

inline json elem_json(const GroupPtr& g, elem x) {
  json j;
  j["index"] = x;
  if (g->has_matrices()) j["matrix"] = format_matrix(g->matrix(x));
  return j;
}

inline json witness_json(const RelWitness& w) {
  json j;
  j["type"] = "tuples";
  j["I"] = w.I;
  j["J"] = w.J;
  j["related_level"] = w.related_level;
  j["failing_level"] = w.failing_level;
  return j;
}

inline json triple_json(const GroupPtr& g, const TiTriple& t) {
  json j;
  j["type"] = "conjugate-triple";
  j["conjugators"] = {t.g1, t.g2, t.g3};
  j["h1"] = elem_json(g, t.h1);
  j["h2"] = elem_json(g, t.h2);
  j["h3"] = elem_json(g, t.h3);
  return j;
}

inline json verdict_json(const GroupPtr& g, const BinaryVerdict& v) {
  json j;
  j["verdict"] = verdict_name(v.status);
  j["method"] = v.method;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (v.triple) j["witness"] = triple_json(g, *v.triple);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

inline json report_json(const Report& r) {
  json j;
  j["schema"] = report_schema;
  j["id"] = r.id;
  j["params"] = r.params;
  j["status"] = status_name(r.result);
  j["measured"] = r.measured;
  j["expected"] = r.expected;
  j["witness"] = r.witness;
  j["failures"] = r.failures;
  j["seconds"] = r.seconds;
  return j;
}

inline std::string csv_header_line() { return "id,params,status,seconds,failures"; }

inline std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string report_csv(const Report& r) {
  std::string fails;
  for (std::size_t i = 0; i < r.failures.size(); ++i) fails += (i ? "; " : "") + r.failures[i];
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
  return r.id + "," + csv_escape(r.params.dump()) + "," + status_name(r.result) + "," + secs + "," + csv_escape(fails);
}

enum class format { json, csv, dot };

inline format parse_format(const std::string& s) {
  if (s == "json") return format::json;
  if (s == "csv") return format::csv;
  if (s == "dot") return format::dot;
  throw error(errc::unsupported_format, "unsupported format '" + s + "'");
}

inline std::string render(const Report& r, format f) {
  switch (f) {
    case format::json: return report_json(r).dump(2) + "\n";
    case format::csv: return csv_header_line() + "\n" + report_csv(r) + "\n";
    case format::dot:
      if (r.dot.empty()) throw error(errc::unsupported_format, r.id + " carries no graph");
      return r.dot;
  }
  return {};
}

inline std::string report_stem(const Report& r) {
  std::string s = r.id;
  if (r.params.contains("q")) s += "-q" + std::to_string(r.params["q"].get<std::uint32_t>());
  if (r.params.contains("group")) {
    std::string g = r.params["group"].get<std::string>();
    for (char& c : g)
      if (c == '(' || c == ')') c = '_';
    s += "-" + g;
  }
  return s;
}

// Write via a temporary file and rename, so readers never see partial output.
inline std::filesystem::path emit(const Report& r, format f, const std::filesystem::path& dir) {
  static const char* ext[] = {".json", ".csv", ".dot"};
  std::filesystem::create_directories(dir);
  const auto target = dir / (report_stem(r) + ext[static_cast<int>(f)]);
  const auto tmp = std::filesystem::path(target.string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary);
    os << render(r, f);
    if (!os) throw error(errc::precondition_violated, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
  return target;
}

}  // namespace gba
