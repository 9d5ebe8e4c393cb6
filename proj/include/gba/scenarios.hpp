#pragma once

// Scenario registry: ids, families, covered statements and entry points.

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "gba/report.hpp"
#include "gba/scenarios/actions.hpp"
#include "gba/scenarios/classification.hpp"
#include "gba/scenarios/graphs.hpp"
#include "gba/scenarios/psl2.hpp"
#include "gba/scenarios/unitary.hpp"

namespace gba {

struct Scenario {
  std::string id;
  std::string family;
  std::string summary;
  std::vector<std::string> covers;
  std::vector<std::uint32_t> default_qs;  // empty when --q is not a parameter
  std::function<void(Report&, const Params&)> body;
};

inline const std::vector<Scenario>& registry() {
  using namespace scenario;
  static const std::vector<Scenario> reg = {
      {"thm-main-psl2", "psl2-binary-classification", "PSL2(q) coset actions: binary exactly for 1, Sylow-2 (q even), C3 (q = 8)",
       {"psl2-classification", "relatedness-definitions", "two-related-not-three"}, {4, 5, 7, 8, 9, 11, 13}, psl2_classification},
      {"thm-suzuki", "suzuki-binary-classification", "Sz(q) coset actions: binary exactly for 1 and Z(Sylow-2)",
       {"suzuki-classification"}, {8}, suzuki_classification},
      {"ti-positive", "ti-positive", "no TI triple for the binary TI stabilizers", {"ti-positive"}, {}, ti_positive},
      {"suzuki-identity", "suzuki", "Sylow-2 product identity in Sz(8) and the printed order-4 triple",
       {"suzuki-sylow-product", "suzuki-order-four-triple"}, {8}, suzuki_identity},
      {"suzuki-counting", "suzuki", "class products x y = h in Sz(8) for odd-order h", {"suzuki-class-counting"}, {}, suzuki_counting},
      {"oracle-ti-equivalence", "oracle", "TI triple criterion agrees with exhaustive tuple search", {"ti-criterion"}, {},
       oracle_ti_equivalence},
      {"class-square", "psl2", "every class C of PSL2(q) satisfies C subset C^2", {"class-square"}, {3, 4, 5, 7, 8, 9, 11, 13},
       class_square},
      {"sl2-trace", "psl2", "trace-zero involution criterion in SL2(q), q even", {"sl2-trace"}, {4, 8}, sl2_trace_involution},
      {"order-three-trace", "psl2", "order-3 elements of PSL2(q) have trace -1", {"order-three-trace"}, {4, 7, 8, 11, 13},
       psl2_order3_trace},
      {"star-equation", "psl2", "C3 triple from the star equation, unsolvable for q = 2^odd", {"star-equation"},
       {4, 7, 8, 11, 13, 16}, star_equation},
      {"cyclic-ti", "psl2", "TI triples for cyclic subgroups of the tori", {"cyclic-ti-triples"}, {7, 8, 9, 11, 13}, cyclic_ti},
      {"psl2-sylow-witness", "psl2", "explicit triple through the Sylow p-subgroup, q odd", {"sylow-p-witness"}, {5, 7, 9, 11, 13},
       psl2_sylow_witness},
      {"borel-frobenius", "psl2", "U.T0 has a Frobenius suborbit with odd complement", {"borel-frobenius-suborbit"}, {7, 11, 13},
       borel_frobenius_suborbit},
      {"consecutive-squares", "fieldgraphs", "consecutive nonzero squares count and the square map",
       {"consecutive-squares", "square-map"}, {}, consecutive_squares_scenario},
      {"square-graph", "fieldgraphs", "squares graph on GF(q) and its exceptional case", {"square-graph"}, {7, 9, 11, 13, 17},
       square_graph_scenario},
      {"component-groups", "fieldgraphs", "component group of a p-element class is the Sylow p-subgroup",
       {"sylow-p-component"}, {7, 9, 11, 13, 17}, component_groups},
      {"lemma-cubes", "fieldgraphs", "cubes graph on GF(q^2) is connected and the cubes span", {"cube-graph"}, {8, 32},
       cubes_scenario},
      {"cube-class-graph", "fieldgraphs", "translation class of GF(64) by cubes matches the cubes graph", {"cube-class-graph"}, {8},
       cube_class_graph},
      {"dichotomy", "gamma", "involution graph connected or component stabilizer strongly embedded",
       {"involution-graph-dichotomy"}, {}, dichotomy},
      {"gamma-profile", "gamma", "commuting involution graph shape and component groups",
       {"component-groups-conjugate"}, {4, 5, 7, 8, 9}, gamma_profile},
      {"component-in-stabilizer", "gamma", "binary action with maximal p-fixity contains a component group",
       {"component-in-stabilizer"}, {}, component_in_stabilizer},
      {"even-stabilizer", "gamma", "binary even-order stabilizers contain the centre of a Sylow 2-subgroup",
       {"even-stabilizer-binary"}, {}, even_stabilizer},
      {"strongly-embedded", "gamma", "strongly embedded subgroups in the rank-one families", {"strongly-embedded-families"}, {},
       strongly_embedded_families},
      {"psu3-witness", "psu3", "isotropic witness tuples for P.T1 in PSU3(q)", {"isotropic-witness"}, {4}, psu3_witness},
      {"psu3-lambda", "psu3", "Lambda action of Q.R and the overgroups of L", {"lambda-two-transitive", "two-transitive-section"},
       {4}, psu3_lambda},
      {"witt", "psu3", "transitivity on isotropic pairs with fixed form value", {"witt-transitivity"}, {4}, witt},
      {"pseudo-frobenius", "actions", "semidirect stabilizers: hypotheses, verdict and counting inequality", {"pseudo-frobenius"},
       {}, pseudo_frobenius},
      {"group-orders", "matgroups", "group and named subgroup orders", {"unitary-subgroups"}, {}, group_orders},
      {"height-bounds", "actions", "RC at most height + 1, height 2 for TI stabilizers", {"rc-height-bound", "ti-height-two"},
       {4, 5, 7, 8}, height_bounds},
      {"point-stabilizer", "actions", "RC of G bounds RC of H on each suborbit", {"point-stabilizer-bound"}, {4, 5, 7, 8},
       point_stabilizer_bound},
      {"intermediate-binary", "actions", "binary actions restrict to binary actions of overgroups",
       {"intermediate-binary"}, {}, intermediate_binary},
      {"frobenius-profile", "actions", "Frobenius complement order read off the suborbits", {"frobenius-complement"}, {},
       frobenius_profile_scenario},
  };
  return reg;
}

inline const Scenario& find_scenario(const std::string& id) {
  for (const auto& s : registry())
    if (s.id == id) return s;
  throw error(errc::unknown_scenario, "unknown scenario: " + id);
}

inline Report run(const std::string& id, const Params& p = {}) {
  const auto& s = find_scenario(id);
  Report r;
  r.id = s.id;
  r.params = p.to_json();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    s.body(r, p);
  } catch (const error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    r.mark_unknown(e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// One report per q for every scenario in the family.
inline std::vector<Report> sweep(const std::string& family, const std::vector<std::uint32_t>& qs, Params base = {}) {
  std::vector<Report> out;
  bool known = false;
  for (const auto& s : registry()) {
    if (s.family != family) continue;
    known = true;
    const auto& list = qs.empty() ? s.default_qs : qs;
    if (list.empty()) {
      out.push_back(run(s.id, base));
      continue;
    }
    for (auto q : list) {
      Params p = base;
      p.q = q;
      out.push_back(run(s.id, p));
    }
  }
  if (!known) throw error(errc::unknown_scenario, "unknown family: " + family);
  return out;
}

// Acceptance criteria, in order, as scenario ids.
inline const std::vector<std::string>& acceptance_scenarios() {
  static const std::vector<std::string> ids = {
      "thm-main-psl2",       "thm-suzuki", "ti-positive", "suzuki-identity",  "lemma-cubes",          "consecutive-squares",
      "component-groups",    "class-square", "suzuki-counting", "dichotomy", "oracle-ti-equivalence", "psu3-witness"};
  return ids;
}

inline int exit_code(const std::vector<Report>& rs) {
  bool unknown = false;
  for (const auto& r : rs) {
    if (r.result == status::fail) return 1;
    if (r.result == status::unknown) unknown = true;
  }
  return unknown ? 2 : 0;
}

}  // namespace gba
