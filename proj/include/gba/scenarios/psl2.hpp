#pragma once

// Matrix facts and lemmas about PSL2(q) and SL2(q).

#include "gba/fieldgraphs.hpp"
#include "gba/scenarios/common.hpp"

namespace gba::scenario {

// C^2 contains C for every class.
inline void class_square(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["count"] = "> 0 for every h in C";
  for (auto q : q_values(p, {3, 4, 5, 7, 8, 9, 11, 13})) {
    auto g = build_psl2(q, p.group_cap);
    auto cls = conjugacy_classes(g);
    json rows = json::array(), bad = json::array();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const auto& c = cls[i];
      std::uint64_t least = ~std::uint64_t{0};
      for (elem h : c.members) least = std::min(least, class_product_count(g, c, c, h));
      rows.push_back({{"order", c.element_order}, {"size", c.size()}, {"min_count", least}});
      if (least == 0) {
        bad.push_back({{"order", c.element_order}, {"size", c.size()}, {"representative", elem_json(g, c.representative)}});
        r.check(false, g->label() + ": class " + std::to_string(i) + " of order " + std::to_string(c.element_order) + ", size " +
                           std::to_string(c.size()) + " has C^2 missing C");
      }
    }
    r.measured[qkey(q)] = {{"classes", cls.size()}, {"per_class", rows}};
    if (!bad.empty()) r.witness[qkey(q)] = bad;
  }
}

// In SL2(q), q even: g^2 = 1 iff trace 0; upper times lower unipotent is an
// involution or 1 iff one factor is 1.
inline void sl2_trace_involution(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  for (auto q : q_values(p, {4, 8})) {
    if (!is_even_q(q)) throw error(errc::precondition_violated, "q must be even");
    auto g = build_sl2(q, p.group_cap);
    const Field& F = *g->field();
    std::size_t agree = 0;
    for (elem x = 0; x < g->order(); ++x)
      agree += (g->element_order(x) <= 2) == (mat_trace(F, g->matrix(x)) == 0);
    std::size_t products = 0, prod_agree = 0;
    const Matrix id = identity_matrix(2);
    for (felem a = 0; a < q; ++a)
      for (felem b = 0; b < q; ++b) {
        const Matrix up = matrix_from_codes(F, 2, {1, a, 0, 1}), lo = matrix_from_codes(F, 2, {1, 0, b, 1});
        const Matrix m = mat_mul(F, up, lo);
        const bool formula = m == matrix_from_codes(F, 2, {F.add(1, F.mul(a, b)), a, b, 1});
        ++products;
        prod_agree += formula && ((mat_mul(F, m, m) == id) == (a == 0 || b == 0));
      }
    r.check(agree == g->order(), g->label() + ": trace criterion fails");
    r.check(prod_agree == products, g->label() + ": unipotent product criterion fails");
    r.measured[qkey(q)] = {{"elements", g->order()}, {"trace_agree", agree}, {"products", products}, {"product_agree", prod_agree}};
  }
}

// Order 3 iff trace -1 in SL2(q); one class of elements of order 3 in PSL2(q).
inline void psl2_order3_trace(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["order3_classes"] = 1;
  for (auto q : q_values(p, {4, 7, 8, 11, 13})) {
    const auto pp = prime_power(q);
    if (!pp) throw error(errc::non_prime, std::to_string(q) + " is not a prime power");
    if (pp->first == 3) throw error(errc::not_applicable, "q is a power of 3");
    auto s = build_sl2(q, p.group_cap);
    const Field& F = *s->field();
    const felem m1 = F.neg(1);
    const elem g0 = s->find_or_throw(matrix_from_codes(F, 2, {m1, 1, m1, 0}));
    auto scls = conjugacy_classes(s);
    const auto& c0 = class_of(scls, g0);
    std::size_t agree = 0;
    for (elem x = 0; x < s->order(); ++x) {
      const bool o3 = s->element_order(x) == 3;
      const bool tr = mat_trace(F, s->matrix(x)) == m1;
      agree += o3 == tr && o3 == c0.contains(x);
    }
    auto g = build_psl2(q, p.group_cap);
    std::size_t o3_classes = 0, pm1 = 0, o3 = 0;
    for (const auto& c : conjugacy_classes(g)) o3_classes += c.element_order == 3;
    for (elem x = 0; x < g->order(); ++x) {
      const felem t = mat_trace(F, g->matrix(x));
      const bool is3 = g->element_order(x) == 3;
      o3 += is3;
      pm1 += is3 == (t == 1 || t == m1);
    }
    r.check(agree == s->order(), s->label() + ": order 3, trace -1 and conjugacy to g0 disagree");
    r.check(o3_classes == 1, g->label() + ": " + std::to_string(o3_classes) + " classes of order 3");
    r.check(pm1 == g->order(), g->label() + ": order 3 and trace +-1 disagree");
    r.measured[qkey(q)] = {{"sl2_agree", agree}, {"order3_elements", o3}, {"order3_classes", o3_classes}};
  }
}

// y^2 + (x+1)y + (x^2+x+1) = 0 and the resulting product of order-3 elements.
inline void star_equation(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["solvable"] = "unless q = 2^a with a odd; powers of 3 excluded";
  for (auto q : q_values(p, {4, 7, 8, 11, 13, 16})) {
    const auto pp = prime_power(q);
    if (!pp) throw error(errc::non_prime, std::to_string(q) + " is not a prime power");
    json m;
    if (pp->first == 3) {
      m["applicable"] = false;
      r.measured[qkey(q)] = m;
      continue;
    }
    const bool expect = !(pp->first == 2 && pp->second % 2 == 1);
    StarSolution s;
    try {
      s = solve_star_equation(q);
    } catch (const error& e) {
      if (e.code() != errc::no_solution_in_field) throw;
      s.solvable = false;
      s.route = "no solution";
    }
    m["route"] = s.route;
    m["solvable"] = s.solvable;
    r.check(s.solvable == expect, "q=" + std::to_string(q) + ": solvability differs");
    auto g = build_psl2(q, p.group_cap);
    const Field& F = *g->field();
    if (!s.solvable) {
      // every solution of the equation has x = 1, i.e. g2 = g1
      std::size_t other = 0;
      for (felem x = 0; x < q; ++x)
        for (felem y = 0; y < q; ++y) other += star_value(F, x, y) == 0 && x != 1;
      m["solutions_with_x_not_1"] = other;
      r.check(other == 0, "q=" + std::to_string(q) + ": a solution with x != 1 exists");
      auto h = named_subgroup(g, "cyclic", {3, 0});
      auto t = ti_triple_search(h);
      m["c3_triple"] = t.has_value();
      r.check(!t, "q=" + std::to_string(q) + ": a triple of order-3 subgroups exists");
      r.measured[qkey(q)] = m;
      continue;
    }
    m["x"] = s.x;
    m["y"] = s.y;
    m["z"] = s.z;
    m["t"] = s.t;
    if (s.lambda) m["lambda"] = *s.lambda;
    const Matrix m1 = matrix_from_codes(F, 2, {1, F.neg(1), 1, 0});
    const Matrix m2 = matrix_from_codes(F, 2, {s.x, s.y, s.z, s.t});
    const bool det1 = mat_det(F, m2) == 1;
    const elem g1 = g->find_or_throw(m1), g2 = g->find_or_throw(m2);
    const elem h = g->mul(g1, g2);
    const bool orders = g->element_order(g1) == 3 && g->element_order(g2) == 3 && g->element_order(h) == 3;
    const bool distinct = !generate(g, {g1}).contains(g2);
    auto H = generate(g, {h}, "<h>");
    auto t = triple_through(H, h, g1, g2);
    r.check(det1, "q=" + std::to_string(q) + ": g2 is not in SL2");
    r.check(orders, "q=" + std::to_string(q) + ": g1, g2, g1 g2 are not all of order 3");
    r.check(distinct, "q=" + std::to_string(q) + ": <g1> = <g2>");
    r.check(t.has_value(), "q=" + std::to_string(q) + ": no triple of distinct conjugates");
    m["orders_three"] = orders;
    m["distinct_subgroups"] = distinct;
    r.measured[qkey(q)] = m;
    if (t) r.witness[qkey(q)] = triple_json(g, *t);
  }
}

// Nontrivial cyclic H with |H| dividing q+-1: a conjugate triple exists
// unless q = 2^a, a odd and |H| = 3.
inline void cyclic_ti(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["triple"] = "exists unless q = 2^a with a odd and |H| = 3";
  for (auto q : q_values(p, {4, 7, 8, 9, 11, 13})) {
    auto g = build_psl2(q, p.group_cap);
    const auto pp = prime_power(q);
    const std::uint32_t d = std::gcd(2u, q - 1);
    std::vector<std::uint32_t> orders;
    for (std::uint32_t n : {(q - 1) / d, (q + 1) / d})
      for (std::uint32_t s = 2; s <= n; ++s)
        if (n % s == 0) orders.push_back(s);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    json rows = json::array(), wit = json::array();
    for (auto s : orders) {
      auto h = named_subgroup(g, "cyclic", {s, 0});
      const bool ti = is_ti(h);
      r.check(ti, g->label() + " C" + std::to_string(s) + " is not TI");
      if (!ti) continue;
      auto t = ti_triple_search(h);
      const bool expect_none = pp->first == 2 && pp->second % 2 == 1 && s == 3;
      r.check(t.has_value() != expect_none, g->label() + " C" + std::to_string(s) + ": triple existence differs");
      auto d2 = decide_and_replay(h, p);
      const bool binary = d2.verdict.status == verdict::binary;
      if (d2.verdict.status == verdict::unknown)
        r.mark_unknown(g->label() + " C" + std::to_string(s));
      else
        r.check(binary == expect_none, g->label() + " C" + std::to_string(s) + ": verdict differs");
      rows.push_back({{"s", s}, {"triple", t.has_value()}, {"verdict", verdict_name(d2.verdict.status)}});
      if (t) {
        json w = triple_json(g, *t);
        w["s"] = s;
        wit.push_back(w);
      }
    }
    r.measured[qkey(q)] = rows;
    r.witness[qkey(q)] = wit;
  }
}

// h1 = h2 h3 with h2 upper and h3 lower unipotent in three distinct Sylow p-subgroups.
inline void psl2_sylow_witness(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["triple"] = "[[-3,1],[-4,1]] = [[1,1],[0,1]] [[1,0],[-4,1]] in distinct Sylow p-subgroups";
  for (auto q : q_values(p, {5, 7, 9, 11, 13})) {
    if (is_even_q(q)) throw error(errc::precondition_violated, "q must be odd");
    auto g = build_psl2(q, p.group_cap);
    const Field& F = *g->field();
    const Matrix a = matrix_from_ints(F, 2, {-3, 1, -4, 1});
    const Matrix b = matrix_from_ints(F, 2, {1, 1, 0, 1});
    const Matrix c = matrix_from_ints(F, 2, {1, 0, -4, 1});
    const bool product = mat_mul(F, b, c) == a;
    const felem two = F.from_int(2);
    bool traces = true;
    for (const auto* m : {&a, &b, &c}) {
      const felem t = mat_trace(F, *m);
      traces = traces && (t == two || t == F.neg(two));
    }
    const elem h1 = g->find_or_throw(a), h2 = g->find_or_throw(b), h3 = g->find_or_throw(c);
    const auto pch = static_cast<std::uint32_t>(F.characteristic());
    const bool p_elements = g->element_order(h1) == pch && g->element_order(h2) == pch && g->element_order(h3) == pch;
    auto u = named_subgroup(g, "unipotent");
    auto t = triple_through(u, h1, h2, h3);
    r.check(product, g->label() + ": printed product differs");
    r.check(traces, g->label() + ": a trace is not +-2");
    r.check(p_elements, g->label() + ": not all p-elements");
    r.check(t.has_value(), g->label() + ": no triple of distinct Sylow p-subgroups");
    r.measured[qkey(q)] = {{"product", product}, {"traces", traces}, {"p_elements", p_elements}, {"distinct", t.has_value()}};
    if (t) r.witness[qkey(q)] = triple_json(g, *t);
  }
}

// H = U.T0 with T0 odd of order >= 3: a suborbit carries a Frobenius
// H-action with complement T0, and the action is not binary.
inline void borel_frobenius_suborbit(Report& r, const Params& p) {
  r.expected["source"] = "stated";
  r.expected["verdict"] = "NotBinary";
  for (auto q : q_values(p, {7, 11, 13})) {
    if (is_even_q(q)) throw error(errc::precondition_violated, "q must be odd");
    auto g = build_psl2(q, p.group_cap);
    auto u = named_subgroup(g, "unipotent"), torus = named_subgroup(g, "torus");
    json rows = json::array();
    for (std::uint32_t d = 3; d <= torus.order(); d += 2) {
      if (torus.order() % d) continue;
      auto t0 = detail::cyclic_part(torus, d, "T0");
      auto gens = u.gens;
      gens.insert(gens.end(), t0.gens.begin(), t0.gens.end());
      auto h = generate(g, gens, "U.T0");
      // H meets its conjugate by an element of N(T0) outside the torus in T0
      auto n = normalizer(t0);
      std::optional<elem> flip;
      for (elem x : n.members)
        if (!torus.contains(x)) {
          flip = x;
          break;
        }
      const bool meet = flip && intersect(h, conjugate(h, *flip)).members == t0.members;
      CosetAction a(h, p.omega_cap);
      bool frob = false;
      for (const auto& s : suborbit_actions(a)) frob = frob || (s.frobenius && s.complement_order == d);
      auto dec = decide_and_replay(h, p);
      r.check(meet, g->label() + " |T0|=" + std::to_string(d) + ": H meets no conjugate in T0");
      r.check(frob, g->label() + " |T0|=" + std::to_string(d) + ": no Frobenius suborbit");
      r.check(dec.replayed, g->label() + ": certificate does not replay");
      if (dec.verdict.status == verdict::unknown)
        r.mark_unknown(g->label() + " |T0|=" + std::to_string(d));
      else
        r.check(dec.verdict.status == verdict::not_binary, g->label() + " |T0|=" + std::to_string(d) + ": binary");
      rows.push_back({{"t0", d}, {"order", h.order()}, {"meets_in_t0", meet}, {"frobenius_suborbit", frob},
                      {"verdict", verdict_name(dec.verdict.status)}});
    }
    r.measured[qkey(q)] = rows;
  }
}

}  // namespace gba::scenario
