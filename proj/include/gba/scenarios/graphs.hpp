#pragma once

// Commuting graphs, strongly embedded subgroups and the field-side graphs.

#include "gba/fieldgraphs.hpp"
#include "gba/scenarios/common.hpp"

namespace gba::scenario {

inline std::vector<std::uint32_t> odd_prime_powers_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 3; q <= n; q += 2)
    if (prime_power(q)) out.push_back(q);
  return out;
}

inline void consecutive_squares_scenario(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["count"] = "(q-5)/4 if q = 1 mod 4, (q-3)/4 if q = 3 mod 4";
  r.expected["map"] = "((x - 1/x)/2)^2 is onto and 4-to-1";
  std::size_t checked = 0;
  json mismatches = json::array(), sample = json::object();
  for (auto q : q_values(p, odd_prime_powers_up_to(997))) {
    auto c = consecutive_squares(q);
    auto m = square_map_check(q);
    ++checked;
    if (q <= 31) sample[std::to_string(q)] = c.members.size();
    if (!c.matches || !m.onto || !m.four_to_one)
      mismatches.push_back({{"q", q}, {"count", c.members.size()}, {"formula", c.formula}, {"onto", m.onto}, {"four_to_one", m.four_to_one}});
    r.check(c.matches, "q=" + std::to_string(q) + ": counted " + std::to_string(c.members.size()) + ", formula " +
                           std::to_string(c.formula));
    r.check(m.onto && m.four_to_one, "q=" + std::to_string(q) + ": the square map is not onto and 4-to-1");
  }
  r.measured["checked"] = checked;
  r.measured["sample"] = sample;
  if (!mismatches.empty()) r.witness["mismatches"] = mismatches;
}

inline void square_graph_scenario(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["shape"] = "connected when q = 3 mod 4; (q-5)/4-regular with at most two components when q = 1 mod 4; "
                        "the component of 1 spans GF(q) except at q = 9";
  for (auto q : q_values(p, {7, 9, 11, 13, 17})) {
    auto s = square_graph_analysis(q);
    if (q % 4 == 3) r.check(s.connected, "q=" + std::to_string(q) + ": not connected");
    if (q % 4 == 1) {
      r.check(s.regular && s.degree == *s.expected_degree, "q=" + std::to_string(q) + ": not (q-5)/4-regular");
      r.check(s.at_most_two_components, "q=" + std::to_string(q) + ": more than two components");
    }
    r.check(s.exceptional == (q == 9), "q=" + std::to_string(q) + ": span of the component of 1 differs");
    r.measured[qkey(q)] = {{"vertices", s.vertices},     {"components", s.component_sizes}, {"regular", s.regular},
                           {"degree", s.degree},         {"component_span", s.component_span},
                           {"exceptional", s.exceptional}};
    r.dot = to_dot(s.graph, "squares-q" + std::to_string(q));
  }
}

// Component group of a p-element: the Sylow p-subgroup, except <g> at q = 9.
inline void component_groups(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["component_group"] = "Sylow p-subgroup containing g; <g> of order 3 when q = 9";
  for (auto q : q_values(p, {7, 9, 11, 13, 17})) {
    if (is_even_q(q)) throw error(errc::precondition_violated, "q must be odd");
    auto g = build_psl2(q, p.group_cap);
    auto u = named_subgroup(g, "unipotent");
    auto cls = conjugacy_classes(g);
    auto delta = square_graph_analysis(q).graph.graph;
    json rows = json::array();
    std::size_t pclasses = 0;
    for (const auto& c : cls) {
      elem x = 0;
      for (elem y : u.members)
        if (y != 0 && c.contains(y)) {
          x = y;
          break;
        }
      if (x == 0) continue;
      ++pclasses;
      auto gr = gamma_graph(g, c);
      auto cg = component_group(gr, x);
      auto expect = q == 9 ? generate(g, {x}) : u;
      std::vector<elem> cu;
      for (elem y : u.members)
        if (c.contains(y)) cu.push_back(y);
      auto sub = induced_subgraph(gr, cu);
      const bool iso = isomorphic(as_simple(sub), delta);
      const std::string where = g->label() + " class of size " + std::to_string(c.size());
      r.check(cg.members == expect.members, where + ": component group has order " + std::to_string(cg.order()));
      r.check(cu.size() == (q - 1) / 2, where + ": |C cap U| differs from (q-1)/2");
      r.check(iso, where + ": induced graph on C cap U is not the squares graph");
      rows.push_back({{"class_size", c.size()},
                      {"components", gr.parts.size()},
                      {"component_group_order", cg.order()},
                      {"c_cap_u", cu.size()},
                      {"squares_isomorphic", iso}});
      r.dot = to_dot(gr, "gamma-" + g->label());
    }
    r.check(pclasses == 2, g->label() + ": " + std::to_string(pclasses) + " classes of p-elements");
    r.measured[qkey(q)] = rows;
  }
}

inline void cubes_scenario(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["shape"] = "cubes graph connected; cubes span GF(q^2) additively";
  for (auto q : q_values(p, {8, 32})) {
    auto c = cube_graph_analysis(q);
    r.check(c.cubes == (static_cast<std::size_t>(q) * q - 1) / 3, "q=" + std::to_string(q) + ": cube count");
    r.check(c.connected, "q=" + std::to_string(q) + ": not connected");
    r.check(c.span_full, "q=" + std::to_string(q) + ": span is proper");
    r.check(c.subfield_neighbours_of_one, "q=" + std::to_string(q) + ": a subfield element is not adjacent to 1");
    r.measured[qkey(q)] = {{"cubes", c.cubes},
                           {"components", c.component_sizes},
                           {"span_dimension", c.span_dimension},
                           {"field_dimension", c.field_dimension},
                           {"subfield_neighbours_of_one", c.subfield_neighbours_of_one}};
    r.dot = to_dot(c.graph, "cubes-q" + std::to_string(q));
  }
}

// GF(q^2) extended by its cubes acting by multiplication: the class of the
// translation by 1 carries the cubes graph, and its component group is the
// whole translation subgroup.
inline void cube_class_graph(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["component_group"] = "all translations";
  for (auto q : q_values(p, {8})) {
    const int a = suzuki_parameter(q);
    auto f = make_field(2, 2 * (2 * a + 1));
    const std::uint32_t n = f->order();
    std::vector<std::vector<point_t>> gens;
    std::vector<point_t> shift(n), scale(n);
    for (felem x = 0; x < n; ++x) {
      shift[x] = static_cast<point_t>(f->add(x, 1));
      scale[x] = static_cast<point_t>(f->mul(x, f->pow(f->generator(), 3)));
    }
    gens.push_back(shift);
    gens.push_back(scale);
    auto g = FiniteGroup::from_permutations(static_cast<int>(n), gens, "GF(" + std::to_string(n) + ").cubes", p.group_cap);
    // translation by c is the element sending 0 to c and x to x + c
    std::vector<elem> translation(n, FiniteGroup::npos);
    for (elem e = 0; e < g->order(); ++e) {
      const point_t* pm = g->perm(e);
      bool tr = true;
      for (felem x = 0; x < n && tr; ++x) tr = pm[x] == f->add(x, pm[0]);
      if (tr) translation[pm[0]] = e;
    }
    auto cls = conjugacy_classes(g);
    const auto& c = class_of(cls, translation[1]);
    auto gr = gamma_graph(g, c);
    auto cg = component_group(gr, translation[1]);
    auto cubes = cube_graph_analysis(q);
    const bool iso = isomorphic(as_simple(gr), cubes.graph.graph);
    r.check(g->order() == static_cast<std::size_t>(n) * ((n - 1) / 3), "group order differs");
    r.check(c.size() == cubes.cubes, "class size differs from the number of cubes");
    r.check(iso, "class graph is not the cubes graph");
    r.check(cg.order() == n, "component group has order " + std::to_string(cg.order()));
    r.measured[qkey(q)] = {{"group_order", g->order()}, {"class_size", c.size()}, {"isomorphic", iso},
                           {"component_group_order", cg.order()}};
    r.dot = to_dot(gr, "cube-class");
  }
}

inline std::vector<std::string> dichotomy_groups(const Params& p) {
  if (p.group) return {*p.group};
  if (p.q) return {"PSL2(" + std::to_string(*p.q) + ")"};
  return {"PSL2(4)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "Sz(8)"};
}

// Involution graph connected, or the stabilizer of a component strongly embedded.
inline void dichotomy(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["branches"] = "exactly one of: connected, component stabilizer strongly embedded";
  for (const auto& label : dichotomy_groups(p)) {
    auto g = parse_group_label(label, p.group_cap);
    auto d = check_aschbacher_dichotomy(g);
    r.check(d.exactly_one_branch, label + ": branches do not exclude each other");
    if (!d.connected) r.check(d.strongly_embedded, label + ": component stabilizer is not strongly embedded");
    r.measured[label] = {{"branch", d.branch},
                         {"components", d.components},
                         {"component_size", d.component_size},
                         {"stabilizer_order", d.normalizer_order},
                         {"component_group_normalizer_order", d.group_normalizer_order},
                         {"readings_agree", d.readings_agree},
                         {"strongly_embedded", d.strongly_embedded},
                         {"sylow2_normalizer_strongly_embedded", d.sylow2_normalizer_strongly_embedded}};
    if (dichotomy_groups(p).size() == 1) {
      auto cls = conjugacy_classes(g);
      r.dot = to_dot(gamma_graph(g, cls[involution_classes(cls)[0]]), "involutions-" + label);
    }
  }
}

// Shape of the involution graph and conjugacy of its component groups.
inline void gamma_profile(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["component_groups"] = "pairwise conjugate";
  for (auto q : q_values(p, {4, 5, 7, 8, 9})) {
    auto g = build_psl2(q, p.group_cap);
    auto cls = conjugacy_classes(g);
    auto inv = involution_classes(cls);
    json rows = json::array();
    for (auto ci : inv) {
      auto gr = gamma_graph(g, cls[ci]);
      auto e = edge_count_profile(gr);
      auto first = generate(g, gr.component_members(0));
      auto conj = conjugate_subgroups(first);
      bool all_conj = true;
      for (std::uint32_t k = 1; k < gr.parts.size(); ++k) {
        auto cg = generate(g, gr.component_members(k));
        all_conj = all_conj && std::any_of(conj.begin(), conj.end(), [&](const Subgroup& s) { return s == cg; });
      }
      r.check(all_conj, g->label() + ": component groups are not all conjugate");
      json hist = json::object();
      for (auto [deg, cnt] : e.degree_histogram) hist[std::to_string(deg)] = cnt;
      rows.push_back({{"vertices", e.vertices}, {"edges", e.edges}, {"degrees", hist}, {"components", e.component_sizes},
                      {"component_group_order", first.order()}, {"conjugate", all_conj}});
      r.dot = to_dot(gr, "involutions-" + g->label());
    }
    r.measured[qkey(q)] = rows;
  }
  if (!p.q) {
    // A5: five triangles, one per Sylow 2-subgroup
    const auto& a5 = r.measured[qkey(4)][0];
    r.check(a5["vertices"] == 15 && a5["edges"] == 15 && a5["components"].size() == 5, "PSL2(4): graph is not five triangles");
  }
}

// Binary action, p dividing |H|, class of maximal p-fixity: component groups lie in H.
inline void component_in_stabilizer(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["contained"] = true;
  struct Case {
    std::string group, sub;
    std::uint32_t prime;
  };
  std::vector<Case> cases = {{"PSL2(8)", "sylow:2", 2}, {"PSL2(8)", "cyclic:3", 3}, {"Sz(8)", "ZU2", 2}};
  if (p.group) {
    auto spec = p.subgroup.value_or("sylow:2");
    const auto colon = spec.find(':');
    const std::uint32_t prime = colon == std::string::npos ? 2 : static_cast<std::uint32_t>(std::stoul(spec.substr(colon + 1)));
    cases = {{*p.group, spec, prime_factors(prime).front()}};
  }
  for (const auto& c : cases) {
    auto g = parse_group_label(c.group, p.group_cap);
    auto h = subgroup_from_spec(g, c.sub);
    auto rep = check_component_in_stabilizer(h, c.prime, p.decide());
    const std::string key = c.group + " " + c.sub;
    r.check(rep.applicable, key + ": action not binary or p does not divide |H|");
    r.check(rep.contained, key + ": a component group leaves H");
    r.measured[key] = {{"verdict", verdict_name(rep.action)},
                       {"max_fixity", rep.max_fixity},
                       {"classes", rep.classes.size()},
                       {"checked", rep.checked},
                       {"component_group_orders", rep.component_group_orders}};
    if (rep.violation) r.witness[key] = elem_json(g, *rep.violation);
  }
}

// Binary actions with proper even-order stabilizers contain the centre of a
// Sylow 2-subgroup, and only occur in characteristic 2.
inline void even_stabilizer(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["even_binary"] = "only for q even; H contains Z(S) for a Sylow 2-subgroup S";
  std::vector<std::string> labels = {"PSL2(4)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "PSL2(13)", "Sz(8)"};
  if (p.group) labels = {*p.group};
  for (const auto& label : labels) {
    auto g = parse_group_label(label, p.group_cap);
    auto cls = conjugacy_classes(g);
    const bool one_class = involution_classes(cls).size() == 1;
    r.check(one_class, label + ": more than one class of involutions");
    auto s = sylow(g, 2);
    auto z = center(s);
    auto zs = conjugate_subgroups(z);
    // nontrivial elements of Z(S) are pairwise adjacent in the involution graph
    bool clique = true;
    for (elem x : z.members)
      for (elem y : z.members)
        if (x != 0 && y != 0 && x != y) clique = clique && g->element_order(g->mul(x, g->inv(y))) == 2;
    r.check(clique, label + ": Z(S) is not a clique");
    const bool sz = g->info().fam == family::sz;
    auto subs = subgroups_up_to_conjugacy(g, sz ? p.sweep(64) : p.sweep());
    json binary = json::array();
    for (const auto& h : subs) {
      if (h.order() % 2 || h.order() == g->order()) continue;
      auto d = decide_and_replay(h, p);
      if (d.verdict.status == verdict::unknown) {
        r.mark_unknown(label + " |H|=" + std::to_string(h.order()));
        continue;
      }
      if (d.verdict.status != verdict::binary) continue;
      binary.push_back(h.order());
      const bool contains = std::any_of(zs.begin(), zs.end(), [&](const Subgroup& zz) { return is_subset(zz, h); });
      r.check(contains, label + " |H|=" + std::to_string(h.order()) + ": binary without Z(S)");
      r.check(is_even_q(g->info().q), label + " |H|=" + std::to_string(h.order()) + ": binary in odd characteristic");
    }
    r.measured[label] = {{"one_involution_class", one_class}, {"z_order", z.order()}, {"binary_even_orders", binary}};
  }
}

// Strongly embedded subgroups exist exactly in the characteristic 2 families.
inline void strongly_embedded_families(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["strongly_embedded"] = "N(Sylow-2) for PSL2(2^a), Sz(q), PSU3(2^a); none for odd q";
  std::vector<std::string> labels = {"PSL2(4)", "PSL2(8)", "Sz(8)", "PSU3(4)", "PSL2(7)", "PSL2(9)", "PSL2(11)", "PSL2(13)"};
  if (p.group) labels = {*p.group};
  for (const auto& label : labels) {
    auto g = parse_group_label(label, p.group_cap);
    const bool even = is_even_q(g->info().q);
    json m;
    if (even) {
      auto n = normalizer(sylow(g, 2));
      const bool se = is_strongly_embedded(n);
      r.check(se, label + ": N(Sylow-2) is not strongly embedded");
      m = {{"normalizer_order", n.order()}, {"strongly_embedded", se}};
    } else {
      auto subs = subgroups_up_to_conjugacy(g, p.sweep());
      std::size_t even_classes = 0;
      json found = json::array();
      for (const auto& h : subs) {
        if (h.order() % 2 || h.order() == g->order()) continue;
        ++even_classes;
        if (is_strongly_embedded(h)) found.push_back(h.order());
      }
      r.check(found.empty(), label + ": a strongly embedded subgroup exists");
      m = {{"even_proper_classes", even_classes}, {"strongly_embedded_orders", found}};
    }
    r.measured[label] = m;
  }
}

}  // namespace gba::scenario
