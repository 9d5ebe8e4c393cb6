#pragma once

// Relational complexity, height and the inheritance lemmas on small actions.

#include "gba/scenarios/common.hpp"

namespace gba::scenario {

inline void group_orders(Report& r, const Params& p) {
  r.expected["source"] = "definitional";
  r.expected["orders"] = "q(q^2-1)/gcd(2,q-1), q^2(q^2+1)(q-1), q^3(q^2-1)(q^3+1)/gcd(3,q+1)";
  json rows = json::object();
  auto one = [&](const GroupPtr& g, std::uint64_t expect) {
    r.check(g->order() == expect, g->label() + ": order " + std::to_string(g->order()));
    rows[g->label()] = g->order();
  };
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 25u, 27u, 32u}) {
    one(build_sl2(q, p.group_cap), q * (static_cast<std::uint64_t>(q) * q - 1));
    one(build_psl2(q, p.group_cap), psl2_order(q));
  }
  one(build_sz(8, p.group_cap), sz_order(8));
  one(build_su3(3, p.group_cap), su3_order(3));
  auto u = build_psu3(4, p.group_cap);
  one(u, psu3_order(4));
  const std::uint64_t q = 4;
  json subs = json::object();
  const std::vector<std::pair<std::string, std::uint64_t>> expect = {
      {"P", q * q * q}, {"ZP", q}, {"T", (q * q - 1)}, {"L", q * (q * q - 1)}, {"Q", q * q}, {"R", q - 1}, {"B", q * q * q * (q * q - 1)}};
  for (const auto& [name, order] : expect) {
    auto s = named_subgroup(u, name);
    r.check(s.order() == order, "PSU3(4) " + name + ": order " + std::to_string(s.order()));
    subs[name] = s.order();
  }
  r.measured["groups"] = rows;
  r.measured["PSU3(4) subgroups"] = subs;
}

inline std::vector<Subgroup> small_actions(const GroupPtr& g, const Params& p, std::size_t max_points) {
  std::vector<Subgroup> out;
  for (auto& h : subgroups_up_to_conjugacy(g, p.sweep()))
    if (h.order() < g->order() && g->order() / h.order() <= max_points) out.push_back(std::move(h));
  return out;
}

// RC <= height + 1, height 2 for TI stabilizers, RC 2 iff binary.
inline void height_bounds(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["bounds"] = "RC <= H + 1; H = 2 for nontrivial non-normal TI stabilizers; witnesses 2-related, not related";
  const std::size_t max_points = 40;
  json rows = json::array();
  for (auto q : q_values(p, {4, 5, 7, 8})) {
    auto g = build_psl2(q, p.group_cap);
    for (const auto& h : small_actions(g, p, max_points)) {
      CosetAction a(h, p.omega_cap);
      const std::string where = g->label() + " |H|=" + std::to_string(h.order());
      std::size_t ht = 0;
      try {
        ht = height(a);
      } catch (const error& e) {
        if (e.code() != errc::cap_exceeded) throw;
        r.mark_unknown(where + ": height");
        continue;
      }
      auto rc = relational_complexity(a, p.budget);
      auto dec = decide_binary(a, p.decide());
      const bool ti = h.order() > 1 && !is_normal(h) && is_ti(h);
      json row = {{"group", g->label()}, {"order", h.order()}, {"points", a.size()}, {"height", ht}, {"ti", ti},
                  {"verdict", verdict_name(dec.status)}};
      if (!rc) {
        r.mark_unknown(where + ": relational complexity");
        rows.push_back(row);
        continue;
      }
      row["rc"] = *rc;
      r.check(*rc <= ht + 1, where + ": RC " + std::to_string(*rc) + " exceeds height + 1");
      if (ti) r.check(ht == 2, where + ": TI stabilizer with height " + std::to_string(ht));
      if (dec.status != verdict::unknown) r.check((*rc == 2) == (dec.status == verdict::binary), where + ": RC and verdict disagree");
      if (dec.witness) {
        const auto& w = *dec.witness;
        r.check(r_related(a, w.I, w.J, 2) && !tuples_related(a, w.I, w.J), where + ": witness does not replay");
      }
      rows.push_back(row);
    }
  }
  r.measured["actions"] = rows;
}

// RC(G, G:H) >= RC(H, Lambda) for each nontrivial suborbit Lambda.
inline void point_stabilizer_bound(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["bound"] = "RC of G at least RC of H on each nontrivial suborbit";
  const std::size_t max_points = 40;
  json rows = json::array();
  for (auto q : q_values(p, {4, 5, 7, 8})) {
    auto g = build_psl2(q, p.group_cap);
    for (const auto& h : small_actions(g, p, max_points)) {
      if (h.order() == 1) continue;
      CosetAction a(h, p.omega_cap);
      auto rc = relational_complexity(a, p.budget);
      const std::string where = g->label() + " |H|=" + std::to_string(h.order());
      if (!rc) {
        r.mark_unknown(where);
        continue;
      }
      auto hg = as_group(h, "H");
      json subs = json::array();
      for (std::uint32_t i = 0; i < a.suborbit_count(); ++i) {
        if (a.suborbit_size(i) < 2) continue;
        // H on the suborbit of x is H on the cosets of H cap H^x
        auto stab = intersect(h, conjugate(h, a.rep(a.suborbit_rep(i))));
        CosetAction sa(restrict_subgroup(hg, stab), p.omega_cap);
        auto src = relational_complexity(sa, p.budget);
        if (!src) {
          r.mark_unknown(where + ": suborbit");
          continue;
        }
        r.check(*src <= *rc, where + ": suborbit RC " + std::to_string(*src) + " exceeds " + std::to_string(*rc));
        subs.push_back({{"size", a.suborbit_size(i)}, {"rc", *src}});
      }
      rows.push_back({{"group", g->label()}, {"order", h.order()}, {"rc", *rc}, {"suborbits", subs}});
    }
  }
  r.measured["actions"] = rows;
}

// Binary on G:H implies binary on B:H for every H < B < G.
inline void intermediate_binary(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["inherited"] = "Binary";
  struct Case {
    std::string group, sub;
  };
  std::vector<Case> cases = {{"PSL2(4)", "sylow:2"}, {"PSL2(8)", "sylow:2"}, {"PSL2(8)", "cyclic:3"}, {"Sz(8)", "ZU2"}};
  if (p.group) cases = {{*p.group, p.subgroup.value_or("sylow:2")}};
  for (const auto& c : cases) {
    auto g = parse_group_label(c.group, p.group_cap);
    auto h = subgroup_from_spec(g, c.sub);
    const std::string key = c.group + " " + c.sub;
    auto top = decide_and_replay(h, p);
    json rows = json::array();
    if (!r.check(top.verdict.status == verdict::binary, key + ": action is not binary")) continue;
    const bool sz = g->info().fam == family::sz;
    auto overs = subgroups_up_to_conjugacy(g, sz ? p.sweep(64) : p.sweep());
    if (sz) overs.push_back(named_subgroup(g, "borel"));
    auto conj = conjugate_subgroups(h);
    for (const auto& b : overs) {
      if (b.order() <= h.order() || b.order() == g->order() || b.order() % h.order()) continue;
      auto bg = as_group(b, "B");
      std::size_t inside = 0;
      for (const auto& hc : conj) {
        if (!is_subset(hc, b)) continue;
        ++inside;
        auto d = decide_and_replay(restrict_subgroup(bg, hc), p);
        const std::string where = key + " in |B|=" + std::to_string(b.order());
        if (d.verdict.status == verdict::unknown)
          r.mark_unknown(where);
        else
          r.check(d.verdict.status == verdict::binary, where + ": not binary");
      }
      if (inside) rows.push_back({{"order", b.order()}, {"conjugates_inside", inside}});
    }
    r.measured[key] = rows;
  }
}

// Frobenius actions: complement order from the suborbit structure, and a
// complement larger than 2 rules out a binary action.
inline void frobenius_profile_scenario(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["complements"] = {{"Sz(8) Borel on its torus", 7}, {"PSL2(7) Borel on its torus", 3}, {"regular", nullptr}};
  auto one = [&](const std::string& key, const Subgroup& big, const Subgroup& t, std::optional<std::size_t> expect) {
    auto bg = as_group(big, "B");
    auto ts = restrict_subgroup(bg, t);
    CosetAction a(ts, p.omega_cap);
    auto prof = frobenius_profile(a);
    r.check(prof == expect, key + ": complement differs");
    auto d = decide_and_replay(ts, p);
    if (prof && *prof > 2) r.check(d.verdict.status == verdict::not_binary, key + ": Frobenius with complement > 2 is binary");
    json m = {{"points", a.size()}, {"verdict", verdict_name(d.verdict.status)}};
    m["complement"] = prof ? json(*prof) : json(nullptr);
    r.measured[key] = m;
  };
  auto sz = build_sz(8, p.group_cap);
  auto sb = named_subgroup(sz, "borel");
  one("Sz(8) Borel on its torus", sb, named_subgroup(sz, "torus"), 7);
  auto ps = build_psl2(7, p.group_cap);
  auto pb = named_subgroup(ps, "borel");
  one("PSL2(7) Borel on its torus", pb, named_subgroup(ps, "torus"), 3);
  one("PSL2(7) Borel regular", pb, trivial_subgroup(ps), std::nullopt);
}

}  // namespace gba::scenario
