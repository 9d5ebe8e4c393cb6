#pragma once

// Shared plumbing for the scenario bodies.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gba/action.hpp"
#include "gba/families.hpp"
#include "gba/gamma.hpp"
#include "gba/report.hpp"

namespace gba::scenario {

inline std::vector<std::uint32_t> q_values(const Params& p, std::vector<std::uint32_t> defaults) {
  if (p.q) return {*p.q};
  return defaults;
}

inline std::string qkey(std::uint32_t q) { return "q=" + std::to_string(q); }

inline bool is_even_q(std::uint32_t q) { return q % 2 == 0; }

// "name" or "name:arg", e.g. "sylow:2", "cyclic:3", "PT1:5".
inline Subgroup subgroup_from_spec(const GroupPtr& g, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  SubgroupParams sp;
  if (colon != std::string::npos) {
    std::uint64_t arg = 0;
    try {
      arg = std::stoull(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad subgroup argument in '" + spec + "'");
    }
    sp.order = arg;
    sp.prime = static_cast<std::uint32_t>(arg);
  }
  if (name == "sylow" && sp.prime == 0) throw error(errc::parse_error, "sylow needs a prime, e.g. sylow:2");
  if (name == "sylow" && !is_prime(sp.prime)) throw error(errc::non_prime, std::to_string(sp.prime) + " is not prime");
  return named_subgroup(g, name, sp);
}

// H1, H2, H3 as conjugates of H through the elements they contain.
inline std::optional<TiTriple> triple_through(const Subgroup& h, elem h1, elem h2, elem h3) {
  auto c = conjugates_with_elements(h);
  auto find = [&](elem x) -> std::optional<elem> {
    for (std::size_t i = 0; i < c.subgroups.size(); ++i)
      if (c.subgroups[i].contains(x)) return c.by[i];
    return std::nullopt;
  };
  auto a = find(h1), b = find(h2), d = find(h3);
  if (!a || !b || !d) return std::nullopt;
  TiTriple t{*a, *b, *d, h1, h2, h3};
  if (!replay(h, t)) return std::nullopt;
  return t;
}

inline json subgroup_json(const Subgroup& h) {
  json j;
  j["order"] = h.order();
  if (!h.label.empty()) j["label"] = h.label;
  j["generators"] = h.gens;
  return j;
}

// Decide and replay the certificate; a certificate that does not replay is a
// failure of the decider, not of the statement under test.
struct Decided {
  BinaryVerdict verdict;
  bool replayed = true;
  std::size_t points = 0;
};

inline Decided decide_and_replay(const Subgroup& h, const Params& p, bool use_ti = true) {
  Decided d;
  DecideOptions opt = p.decide();
  opt.use_ti = use_ti;
  try {
    CosetAction a(h, p.omega_cap);
    d.points = a.size();
    d.verdict = decide_binary(a, opt);
    if (d.verdict.witness) {
      const auto& w = *d.verdict.witness;
      d.replayed = r_related(a, w.I, w.J, 2) && !tuples_related(a, w.I, w.J);
    }
  } catch (const error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    d.verdict.status = verdict::unknown;
    d.verdict.method = "none";
    d.verdict.notes = e.what();
  }
  if (d.verdict.triple) d.replayed = replay(h, *d.verdict.triple);
  return d;
}

inline bool sylow2_center_conjugate(const std::vector<Subgroup>& zs, const Subgroup& h) {
  return std::any_of(zs.begin(), zs.end(), [&](const Subgroup& z) { return z.members == h.members; });
}

}  // namespace gba::scenario
