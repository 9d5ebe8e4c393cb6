#pragma once

// SL2/PSL2, SU3/PSU3 and the Suzuki groups as enumerated matrix groups, plus
// the named subgroups used throughout.

#include <regex>
#include <string>
#include <unordered_set>
#include <vector>

#include "gba/error.hpp"
#include "gba/ffield.hpp"
#include "gba/group.hpp"
#include "gba/matrix.hpp"

namespace gba {

namespace detail {

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Greedy subset of `mats` generating the same (small) group.
inline std::vector<Matrix> reduce_generators(const Field& f, const std::vector<Matrix>& mats) {
  std::vector<Matrix> chosen;
  std::unordered_set<Matrix, MatrixHash> span;
  if (mats.empty()) return chosen;
  span.insert(identity_matrix(mats.front().n));
  for (const auto& m : mats) {
    if (span.count(m)) continue;
    chosen.push_back(m);
    std::vector<Matrix> queue(span.begin(), span.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : chosen) {
        Matrix c = mat_mul(f, queue[i], g);
        if (span.insert(c).second) queue.push_back(c);
      }
  }
  return chosen;
}

inline std::uint64_t checked_order(std::uint64_t predicted, std::uint64_t cap, const std::string& label) {
  if (predicted > cap)
    throw error(errc::cap_exceeded, label + " has order " + std::to_string(predicted) + " above cap " + std::to_string(cap));
  return predicted;
}

inline void assert_order(const GroupPtr& g, std::uint64_t predicted) {
  if (g->order() != predicted)
    throw error(errc::not_closed, g->label() + " enumerated to order " + std::to_string(g->order()) +
                                      ", expected " + std::to_string(predicted));
}

inline std::pair<int, int> require_prime_power(std::uint32_t q) {
  auto pa = prime_power(q);
  if (!pa) throw error(errc::non_prime, std::to_string(q) + " is not a prime power");
  return *pa;
}

// Upper and lower transvections with entries running over an additive basis.
inline std::vector<Matrix> sl2_generators(const Field& f) {
  std::vector<Matrix> gens;
  felem x = 1;
  for (int i = 0; i < f.degree(); ++i, x *= static_cast<felem>(f.characteristic())) {
    gens.push_back(matrix_from_codes(f, 2, {1, x, 0, 1}));
    gens.push_back(matrix_from_codes(f, 2, {1, 0, x, 1}));
  }
  return gens;
}

}  // namespace detail

inline std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }
inline std::uint64_t sz_order(std::uint64_t q) { return q * q * (q * q + 1) * (q - 1); }
inline std::uint64_t su3_order(std::uint64_t q) { return q * q * q * (q * q - 1) * (q * q * q + 1); }
inline std::uint64_t psu3_order(std::uint64_t q) { return su3_order(q) / std::gcd<std::uint64_t>(3, q + 1); }

inline GroupPtr build_sl2(std::uint32_t q, std::uint64_t cap = default_group_cap) {
  auto [p, a] = detail::require_prime_power(q);
  const std::string label = "SL2(" + std::to_string(q) + ")";
  const auto predicted = detail::checked_order(static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1), cap, label);
  auto f = make_field(p, a);
  auto g = FiniteGroup::from_matrices(f, detail::sl2_generators(*f), {1}, label, {family::sl2, q}, cap);
  detail::assert_order(g, predicted);
  return g;
}

inline GroupPtr build_psl2(std::uint32_t q, std::uint64_t cap = default_group_cap) {
  auto [p, a] = detail::require_prime_power(q);
  const std::string label = "PSL2(" + std::to_string(q) + ")";
  const auto predicted = detail::checked_order(psl2_order(q), cap, label);
  auto f = make_field(p, a);
  std::vector<felem> scalars{1};
  if (p != 2) scalars.push_back(f->neg(1));
  auto g = FiniteGroup::from_matrices(f, detail::sl2_generators(*f), scalars, label, {family::psl2, q}, cap);
  detail::assert_order(g, predicted);
  return g;
}

// Elements of the unipotent radical [[1,a1,a2],[0,1,-a1^q],[0,0,1]] with
// a2 + a2^q + a1^(q+1) = 0, as matrices over GF(q^2).
inline std::vector<Matrix> su3_unipotent(const Field& f, std::uint32_t q, bool a1_in_subfield = false) {
  std::vector<Matrix> out;
  for (felem a1 = 0; a1 < f.order(); ++a1) {
    const felem a1q = frobenius_q(f, a1, q);
    if (a1_in_subfield && a1q != a1) continue;
    const felem norm = f.mul(a1, a1q);
    for (felem a2 = 0; a2 < f.order(); ++a2) {
      if (f.add(f.add(a2, frobenius_q(f, a2, q)), norm) != 0) continue;
      out.push_back(matrix_from_codes(f, 3, {1, a1, a2, 0, 1, f.neg(a1q), 0, 0, 1}));
    }
  }
  return out;
}

inline Matrix su3_torus_element(const Field& f, std::uint32_t q, felem t) {
  return matrix_from_codes(f, 3, {t, 0, 0, 0, f.pow(t, static_cast<long long>(q) - 1), 0, 0, 0, f.pow(t, -static_cast<long long>(q))});
}

namespace detail {

inline GroupPtr build_unitary(std::uint32_t q, bool projective, std::uint64_t cap) {
  auto [p, a] = require_prime_power(q);
  const std::string label = std::string(projective ? "PSU3(" : "SU3(") + std::to_string(q) + ")";
  const auto predicted = checked_order(projective ? psu3_order(q) : su3_order(q), cap, label);
  auto f = make_field(p, 2 * a);
  std::vector<felem> scalars{1};
  if (projective)
    for (felem x = 2; x < f->order(); ++x)
      if (f->pow(x, 3) == 1 && f->pow(x, q + 1) == 1) scalars.push_back(x);
  auto radical = reduce_generators(*f, su3_unipotent(*f, q));
  std::vector<Matrix> gens = radical;
  for (const auto& m : radical) gens.push_back(mat_transpose(m));
  auto g = FiniteGroup::from_matrices(f, gens, scalars, label, {projective ? family::psu3 : family::su3, q}, cap);
  if (g->order() != predicted) {
    // the two radicals only generate a proper subgroup; add the torus
    gens.push_back(su3_torus_element(*f, q, f->generator()));
    g = FiniteGroup::from_matrices(f, gens, scalars, label, {projective ? family::psu3 : family::su3, q}, cap);
  }
  assert_order(g, predicted);
  return g;
}

}  // namespace detail

inline GroupPtr build_su3(std::uint32_t q, std::uint64_t cap = default_group_cap) {
  return detail::build_unitary(q, false, cap);
}
inline GroupPtr build_psu3(std::uint32_t q, std::uint64_t cap = default_group_cap) {
  return detail::build_unitary(q, true, cap);
}

// The Suzuki tower parameter a with q = 2^(2a+1).
inline int suzuki_parameter(std::uint32_t q) {
  auto pa = prime_power(q);
  if (!pa || pa->first != 2 || pa->second % 2 == 0 || pa->second < 3)
    throw error(errc::wrong_field_shape, std::to_string(q) + " is not 2^(2a+1) with a >= 1");
  return (pa->second - 1) / 2;
}

// Lower unitriangular Sylow 2-subgroup element with parameters (alpha, beta).
inline Matrix suzuki_u2(const Field& f, int a, felem alpha, felem beta) {
  const felem ta = suzuki_theta(f, alpha, a);
  const felem tb = suzuki_theta(f, beta, a);
  const felem r3c0 = f.add(f.mul(alpha, ta), beta);
  const felem r4c0 = f.add(f.add(f.mul(f.mul(alpha, alpha), ta), f.mul(alpha, beta)), tb);
  return matrix_from_codes(f, 4, {1, 0, 0, 0, alpha, 1, 0, 0, r3c0, ta, 1, 0, r4c0, beta, alpha, 1});
}

inline Matrix suzuki_tau(const Field& f) { return matrix_from_codes(f, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}); }

inline GroupPtr build_sz(std::uint32_t q, std::uint64_t cap = default_group_cap) {
  const int a = suzuki_parameter(q);
  const std::string label = "Sz(" + std::to_string(q) + ")";
  const auto predicted = detail::checked_order(sz_order(q), cap, label);
  auto f = make_field(2, 2 * a + 1);
  std::vector<Matrix> u2;
  for (felem al = 0; al < q; ++al)
    for (felem be = 0; be < q; ++be) u2.push_back(suzuki_u2(*f, a, al, be));
  auto gens = detail::reduce_generators(*f, u2);
  const Matrix tau = suzuki_tau(*f);
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i) gens.push_back(mat_mul(*f, mat_mul(*f, tau, gens[i]), tau));
  auto g = FiniteGroup::from_matrices(f, gens, {1}, label, {family::sz, q}, cap);
  detail::assert_order(g, predicted);
  return g;
}

// "PSL2(8)", "SL2(4)", "PSU3(4)", "SU3(2)", "Sz(8)"
inline GroupPtr parse_group_label(const std::string& label, std::uint64_t cap = default_group_cap) {
  static const std::regex re(R"(^\s*(PSL2|SL2|PSU3|SU3|Sz)\((\d+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(label, m, re)) throw error(errc::parse_error, "unrecognised group label '" + label + "'");
  const auto q = static_cast<std::uint32_t>(std::stoul(m[2].str()));
  const std::string fam = m[1].str();
  if (fam == "PSL2") return build_psl2(q, cap);
  if (fam == "SL2") return build_sl2(q, cap);
  if (fam == "PSU3") return build_psu3(q, cap);
  if (fam == "SU3") return build_su3(q, cap);
  return build_sz(q, cap);
}

// The alternating group on 5 points as permutations.
inline GroupPtr build_a5_permutation() {
  return FiniteGroup::from_permutations(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, "A5");
}

// ---------------------------------------------------------------------------
// Named subgroups

namespace detail {

inline Subgroup from_matrix_set(const GroupPtr& g, const std::vector<Matrix>& mats, const std::string& label) {
  std::vector<elem> m;
  for (const auto& x : mats) m.push_back(g->find_or_throw(x));
  return subgroup_from_members(g, std::move(m), label);
}

inline Subgroup matching(const GroupPtr& g, const std::string& label, auto pred) {
  std::vector<elem> m;
  for (elem x = 0; x < g->order(); ++x)
    if (pred(g->matrix(x))) m.push_back(x);
  return subgroup_from_members(g, std::move(m), label);
}

inline bool is_diagonal(const Matrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

inline bool is_upper(const Matrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool is_upper_unitriangular(const Matrix& m) {
  if (!is_upper(m)) return false;
  // up to the identified scalars the diagonal is constant
  for (int i = 1; i < m.n; ++i)
    if (m(i, i) != m(0, 0)) return false;
  return true;
}

// the unique subgroup of order d of a cyclic group
inline Subgroup cyclic_part(const Subgroup& c, std::uint64_t d, const std::string& label) {
  const auto& g = c.group;
  if (d == 0 || c.order() % d != 0)
    throw error(errc::not_a_subgroup, "no subgroup of order " + std::to_string(d) + " in a cyclic group of order " + std::to_string(c.order()));
  elem gen = 0;
  for (elem x : c.members)
    if (g->element_order(x) == c.order()) {
      gen = x;
      break;
    }
  if (g->element_order(gen) != c.order()) throw error(errc::not_a_subgroup, "subgroup is not cyclic");
  auto s = generate(g, {g->pow(gen, static_cast<long long>(c.order() / d))}, label);
  return s;
}

}  // namespace detail

struct SubgroupParams {
  std::uint64_t order = 0;  // for "cyclic", "T1", "PT1"
  std::uint32_t prime = 0;  // for "sylow"
};

// Names: trivial, whole, center, sylow (prime), cyclic (order), and per family
//   SL2/PSL2: borel, unipotent, torus
//   Sz:       U2, ZU2, borel, torus
//   SU3/PSU3: P, ZP, T, B, L, Q, R, T1 (order), PT1 (order)
inline Subgroup named_subgroup(const GroupPtr& g, const std::string& name, SubgroupParams params = {}) {
  if (name == "trivial" || name == "1") return trivial_subgroup(g);
  if (name == "whole" || name == "G") return whole_group(g);
  if (name == "center") return center(whole_group(g), "Z(G)");
  if (name == "sylow") return sylow(g, params.prime, "Sylow-" + std::to_string(params.prime));
  if (name == "cyclic") {
    for (elem x = 0; x < g->order(); ++x)
      if (g->element_order(x) == params.order) return generate(g, {x}, "C" + std::to_string(params.order));
    throw error(errc::not_a_subgroup, g->label() + " has no element of order " + std::to_string(params.order));
  }
  if (!g->has_matrices()) throw error(errc::unknown_name, "subgroup '" + name + "' needs a matrix group");
  const Field& f = *g->field();
  const auto fam = g->info().fam;
  const std::uint32_t q = g->info().q;

  if (fam == family::sl2 || fam == family::psl2) {
    if (name == "borel") return detail::matching(g, "B", detail::is_upper);
    if (name == "unipotent") return detail::matching(g, "U", detail::is_upper_unitriangular);
    if (name == "torus") return detail::matching(g, "T", detail::is_diagonal);
  }
  if (fam == family::sz) {
    const int a = suzuki_parameter(q);
    if (name == "U2" || name == "ZU2") {
      std::vector<Matrix> mats;
      for (felem al = 0; al < q; ++al) {
        if (name == "ZU2" && al != 0) continue;
        for (felem be = 0; be < q; ++be) mats.push_back(suzuki_u2(f, a, al, be));
      }
      return detail::from_matrix_set(g, mats, name == "U2" ? "U2" : "Z(U2)");
    }
    if (name == "borel") return normalizer(named_subgroup(g, "ZU2"), "N(Z(U2))");
    if (name == "torus") return detail::matching(g, "T", detail::is_diagonal);
  }
  if (fam == family::su3 || fam == family::psu3) {
    if (name == "P") return detail::from_matrix_set(g, su3_unipotent(f, q), "P");
    if (name == "Q") return detail::from_matrix_set(g, su3_unipotent(f, q, true), "Q");
    if (name == "ZP") {
      std::vector<Matrix> mats;
      for (const auto& m : su3_unipotent(f, q))
        if (m(0, 1) == 0) mats.push_back(m);
      return detail::from_matrix_set(g, mats, "Z(P)");
    }
    if (name == "T") {
      std::vector<Matrix> mats;
      for (felem t = 1; t < f.order(); ++t) mats.push_back(su3_torus_element(f, q, t));
      return detail::from_matrix_set(g, mats, "T");
    }
    if (name == "R") {
      std::vector<Matrix> mats;
      for (felem t = 1; t < f.order(); ++t)
        if (frobenius_q(f, t, q) == t) mats.push_back(su3_torus_element(f, q, t));
      return detail::from_matrix_set(g, mats, "R");
    }
    if (name == "L") {
      auto sub = subfield_elements(f, q);
      std::vector<Matrix> mats;
      for (felem a : sub)
        for (felem b : sub)
          for (felem c : sub)
            for (felem d : sub)
              if (f.sub(f.mul(a, d), f.mul(b, c)) == 1)
                mats.push_back(matrix_from_codes(f, 3, {a, 0, b, 0, 1, 0, c, 0, d}));
      return detail::from_matrix_set(g, mats, "L");
    }
    if (name == "B") {
      auto P = named_subgroup(g, "P"), T = named_subgroup(g, "T");
      auto gens = P.gens;
      gens.insert(gens.end(), T.gens.begin(), T.gens.end());
      return generate(g, gens, "B");
    }
    if (name == "T1") return detail::cyclic_part(named_subgroup(g, "T"), params.order, "T1");
    if (name == "PT1") {
      auto P = named_subgroup(g, "P");
      auto T1 = named_subgroup(g, "T1", params);
      auto gens = P.gens;
      gens.insert(gens.end(), T1.gens.begin(), T1.gens.end());
      auto s = generate(g, gens, "P.T1");
      s.gens = small_generating_set(g, s.members);
      return s;
    }
  }
  throw error(errc::unknown_name, "no subgroup named '" + name + "' in " + g->label());
}

}  // namespace gba
