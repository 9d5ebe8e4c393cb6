#pragma once

// PSU3(q): witness tuples for P.T1, the Lambda action, Witt transitivity and
// the semidirect-product inequality.

#include "gba/scenarios/common.hpp"
#include "gba/su3.hpp"

namespace gba::scenario {

inline void psu3_witness(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["tuples"] = "2-related, not 3-related";
  r.expected["verdict"] = "NotBinary for P and every P.T1 with T1 nontrivial";
  for (auto q : q_values(p, {4})) {
    if (!is_even_q(q)) throw error(errc::precondition_violated, "q must be even");
    auto g = build_psu3(q, p.group_cap);
    const std::uint32_t d = std::gcd(3u, q + 1);
    const std::uint64_t torus = (static_cast<std::uint64_t>(q) * q - 1) / d;
    json tuples = json::array(), verdicts = json::array(), wit = json::array();
    std::vector<std::uint64_t> witness_orders;
    if (d == 1) witness_orders.push_back(1);
    for (std::uint64_t m = 2; m <= (q + 1) / d; ++m)
      if (((q + 1) / d) % m == 0) witness_orders.push_back(m);
    for (auto m : witness_orders) {
      auto w = su3_witness_tuples(g, m);
      const std::string key = "|T1|=" + std::to_string(m);
      r.check(w.isotropic, key + ": vectors are not isotropic");
      r.check(w.related2, key + ": tuples are not 2-related");
      r.check(!w.related3, key + ": tuples are 3-related");
      tuples.push_back({{"t1_order", m}, {"points", w.points}, {"x", w.x}, {"y", w.y}, {"related2", w.related2},
                        {"related3", w.related3}});
      wit.push_back({{"t1_order", m}, {"type", "tuples"}, {"I", w.I}, {"J", w.J}, {"related_level", 2}, {"failing_level", 3}});
    }
    // every stabilizer P.T1 strictly above Z(P) in the Borel
    for (std::uint64_t m = 1; m <= torus; ++m) {
      if (torus % m) continue;
      auto h = named_subgroup(g, "PT1", {m, 0});
      auto dec = decide_and_replay(h, p);
      const std::string key = "|T1|=" + std::to_string(m);
      r.check(dec.replayed, key + ": certificate does not replay");
      if (dec.verdict.status == verdict::unknown)
        r.mark_unknown(key + ": " + dec.verdict.notes);
      else
        r.check(dec.verdict.status == verdict::not_binary, key + ": verdict " + std::string(verdict_name(dec.verdict.status)));
      verdicts.push_back({{"t1_order", m}, {"order", h.order()}, {"points", dec.points},
                          {"verdict", verdict_name(dec.verdict.status)}, {"method", dec.verdict.method}});
    }
    r.measured[qkey(q)] = {{"tuples", tuples}, {"actions", verdicts}};
    r.witness[qkey(q)] = wit;
  }
}

// Lambda = {Hx : x in Q} for H = L, and the overgroups of L.
inline void psu3_lambda(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["lambda"] = "size q, Q.R 2-transitive on it, R semiregular off H";
  r.expected["overgroups"] = "every overgroup of L normalizes L and |N(L):L| divides (q+1)/gcd(3,q+1)";
  for (auto q : q_values(p, {4})) {
    auto g = build_psu3(q, p.group_cap);
    auto l = su3_lambda_action(g, true);
    r.check(l.lambda_size == q, "|Lambda| differs from q");
    r.check(l.r_in_h && l.r_normalizes_q && l.invariant, "R or Q.R does not act on Lambda");
    r.check(l.two_transitive, "Q.R is not 2-transitive on Lambda");
    r.check(l.r_semiregular, "R fixes a point of Lambda other than H");
    r.check(l.overgroups_normalize, "an overgroup of L does not normalize L");
    r.check(l.index_divides, "|N(L):L| does not divide (q+1)/gcd(3,q+1)");
    json m = {{"lambda_size", l.lambda_size},     {"two_transitive", l.two_transitive},
              {"r_semiregular", l.r_semiregular}, {"normalizer_index", l.normalizer_index},
              {"overgroups_normalize", l.overgroups_normalize}};
    // setwise stabilizer of Lambda and the permutation group it induces
    auto L = named_subgroup(g, "L"), Q = named_subgroup(g, "Q");
    CosetAction a(L, p.omega_cap);
    std::vector<pt> lam;
    for (elem x : Q.members) lam.push_back(a.coset_of(x));
    std::sort(lam.begin(), lam.end());
    lam.erase(std::unique(lam.begin(), lam.end()), lam.end());
    std::set<std::vector<pt>> induced;
    for (elem x = 0; x < g->order(); ++x) {
      std::vector<pt> img;
      bool stays = true;
      for (pt w : lam) {
        const pt v = a.image(w, x);
        if (!std::binary_search(lam.begin(), lam.end(), v)) {
          stays = false;
          break;
        }
        img.push_back(v);
      }
      if (stays) induced.insert(img);
    }
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= lam.size(); ++i) fact *= i;
    m["induced_order"] = induced.size();
    m["symmetric_order"] = fact;
    // a 2-transitive section short of the symmetric group rules out binary actions
    for (const auto& [name, h] : {std::pair<std::string, Subgroup>{"L", L}, {"N(L)", normalizer(L)}}) {
      auto dec = decide_and_replay(h, p);
      r.check(dec.replayed, name + ": certificate does not replay");
      if (dec.verdict.status == verdict::unknown)
        r.mark_unknown(name + ": " + dec.verdict.notes);
      else
        r.check(dec.verdict.status == verdict::not_binary, name + ": action is binary");
      if (induced.size() != fact)
        r.check(dec.verdict.status != verdict::binary, name + ": binary with a non-symmetric 2-transitive section");
      m["verdict_" + name] = verdict_name(dec.verdict.status);
      if (dec.verdict.witness) r.witness[name] = witness_json(*dec.verdict.witness);
    }
    r.measured[qkey(q)] = m;
  }
}

inline void witt(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["transitive"] = "on isotropic pairs with <u, v> = c, for every c != 0";
  for (auto q : q_values(p, {4})) {
    auto g = build_psu3(q, p.group_cap);
    json rows = json::array();
    for (felem c = 1; c < g->field()->order(); ++c) {
      auto w = witt_transitivity(g, c);
      r.check(w.transitive, "c=" + std::to_string(c) + ": orbit " + std::to_string(w.orbit) + " of " + std::to_string(w.pairs));
      rows.push_back({{"c", c}, {"orbit", w.orbit}, {"pairs", w.pairs}});
    }
    r.measured[qkey(q)] = rows;
  }
}

// Hypotheses, verdict and inequality on a Borel subgroup N.T.
inline void pseudo_frobenius(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["implication"] = "hypotheses and binary imply T0 = T and |T| <= 1 + 2|K|";
  auto record = [&](const std::string& key, const PseudoFrobeniusReport& x, bool expect_hypotheses) {
    r.check(x.hypotheses == expect_hypotheses, key + ": hypotheses evaluate differently");
    r.check(x.action.status != verdict::unknown, key + ": verdict unknown");
    r.check(x.action.status != verdict::binary || x.conclusion_holds, key + ": binary but the conclusion fails");
    if (x.hypotheses && x.action.status == verdict::binary)
      r.check(x.inequality_holds, key + ": binary but the counting inequality fails");
    r.measured[key] = {{"semidirect", x.semidirect},
                       {"k_normal", x.k_normal},
                       {"t_free_outside_k", x.t_free_outside_k},
                       {"t0_kernel_on_k", x.t0_kernel_on_k},
                       {"nondegenerate", x.nondegenerate},
                       {"hypotheses", x.hypotheses},
                       {"verdict", verdict_name(x.action.status)},
                       {"inequality", {x.inequality_lhs, x.inequality_rhs}},
                       {"inequality_holds", x.inequality_holds},
                       {"notes", x.notes}};
  };
  {
    const std::uint32_t q = p.q.value_or(4);
    auto g = build_psu3(q, p.group_cap);
    auto B = named_subgroup(g, "B"), P = named_subgroup(g, "P"), Z = named_subgroup(g, "ZP"), T = named_subgroup(g, "T");
    const std::uint64_t t0 = std::gcd<std::uint64_t>(T.order(), (q + 1) / std::gcd(3u, q + 1));
    auto T0 = detail::cyclic_part(T, t0, "T0");
    record(g->label() + " B over T", check_pseudo_frobenius(B, P, Z, T, T0, p.decide()), true);
  }
  {
    // Frobenius case: K = 1 and T0 = 1
    auto g = build_psl2(7, p.group_cap);
    auto B = named_subgroup(g, "borel"), U = named_subgroup(g, "unipotent"), T = named_subgroup(g, "torus");
    auto one = trivial_subgroup(g);
    record(g->label() + " Borel over torus", check_pseudo_frobenius(B, U, one, T, one, p.decide()), false);
  }
}

}  // namespace gba::scenario
