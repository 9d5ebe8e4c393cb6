#pragma once

// Isotropic-vector models of the unitary coset actions: witness tuples for
// H = P.T1, Witt transitivity on isotropic pairs, and the q-point set
// Lambda = {Hx : x in Q} for H = L.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "gba/action.hpp"
#include "gba/error.hpp"
#include "gba/families.hpp"

namespace gba {

// <u, v> = u1 v3^q + u2 v2^q + u3 v1^q in the basis e1, w, f1.
inline felem hermitian(const Field& f, std::uint32_t q, const Vec& u, const Vec& v) {
  felem s = f.mul(u[0], frobenius_q(f, v[2], q));
  s = f.add(s, f.mul(u[1], frobenius_q(f, v[1], q)));
  return f.add(s, f.mul(u[2], frobenius_q(f, v[0], q)));
}

inline Vec vec3(felem a, felem b, felem c) {
  Vec v;
  v.n = 3;
  v[0] = a;
  v[1] = b;
  v[2] = c;
  return v;
}

// Column action g.v.
inline Vec apply_column(const Field& f, const Matrix& m, const Vec& v) {
  Vec r;
  r.n = v.n;
  for (int i = 0; i < v.n; ++i) {
    felem s = 0;
    for (int k = 0; k < v.n; ++k) s = f.add(s, f.mul(m(i, k), v[k]));
    r[i] = s;
  }
  return r;
}

namespace detail {

inline void require_unitary(const GroupPtr& g) {
  const auto fam = g->info().fam;
  if (fam != family::su3 && fam != family::psu3)
    throw error(errc::precondition_violated, g->label() + " is not a unitary group in dimension 3");
}

}  // namespace detail

// Points of (G : P.T1) as isotropic vectors modulo the order-|T1 preimage|
// subgroup T1' of GF(q^2)*.  Coset Hx corresponds to x^-1 [e1].
class IsotropicModel {
 public:
  IsotropicModel(const CosetAction& a, std::uint64_t t1_order) : a_(a) {
    const auto& g = a.group();
    detail::require_unitary(g);
    const Field& f = *g->field();
    q_ = g->info().q;
    const std::uint64_t m = t1_order * g->scalars().size();
    if ((f.order() - 1) % m != 0) throw error(errc::precondition_violated, "T1 order does not divide q^2-1");
    for (felem t = 1; t < f.order(); ++t)
      if (m % f.element_order(t) == 0) t1_.push_back(t);
    for (elem y = 0; y < g->order(); ++y) {
      const Matrix& mat = g->matrix(y);
      const Vec col = vec3(mat(0, 0), mat(1, 0), mat(2, 0));
      const pt w = a.coset_of(g->inv(y));
      auto [it, fresh] = point_.emplace(key(col), w);
      if (!fresh && it->second != w) throw error(errc::not_closed, "isotropic classes do not match the cosets");
    }
    if (point_.size() != a.size()) throw error(errc::not_closed, "isotropic classes do not match the cosets");
  }

  Vec key(const Vec& v) const {
    const Field& f = *a_.group()->field();
    Vec best = v;
    for (felem t : t1_) {
      Vec w = v;
      for (int i = 0; i < 3; ++i) w[i] = f.mul(t, v[i]);
      if (w < best) best = w;
    }
    return best;
  }

  std::optional<pt> point(const Vec& v) const {
    auto it = point_.find(key(v));
    if (it == point_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<felem>& t1_prime() const noexcept { return t1_; }

 private:
  const CosetAction& a_;
  std::uint32_t q_ = 0;
  std::vector<felem> t1_;
  std::map<Vec, pt> point_;
};

struct SU3Witness {
  std::uint64_t t1_order = 1;
  felem x = 0, y = 0;
  Vec e1, f1, v, v_prime;
  std::vector<pt> I, J;
  bool isotropic = false;
  bool related2 = false;
  bool related3 = false;
  std::size_t points = 0;
};

// Triples ([e1],[f1],[v]) and ([e1],[f1],[v']) in the action on (G : P.T1):
//   T1 nontrivial: x in T1' \ {1}, x + x^q = y^(q+1), v = (x,y,1), v' = (1,y,x)
//   T1 trivial:    x + x^q = 1, y != 1, y^(q+1) = 1, v = (x,y,1), v' = (x,1,1)
inline SU3Witness su3_witness_tuples(const GroupPtr& g, std::uint64_t t1_order, std::optional<felem> x_choice = {}) {
  detail::require_unitary(g);
  const Field& f = *g->field();
  const std::uint32_t q = g->info().q;
  if (f.characteristic() != 2) throw error(errc::precondition_violated, "q must be even");
  if ((q + 1) % t1_order != 0) throw error(errc::precondition_violated, "|T1| must divide q+1");
  auto H = named_subgroup(g, "PT1", {t1_order, 0});
  CosetAction a(H);
  IsotropicModel model(a, t1_order);
  SU3Witness w;
  w.t1_order = t1_order;
  w.points = a.size();
  auto tr = [&](felem z) { return f.add(z, frobenius_q(f, z, q)); };
  auto norm = [&](felem z) { return f.pow(z, q + 1); };
  const bool trivial = model.t1_prime().size() == 1;
  std::vector<felem> xs;
  if (x_choice) {
    if (*x_choice == 1) throw error(errc::precondition_violated, "x = 1 gives identical triples");
    xs.push_back(*x_choice);
  } else if (trivial) {
    for (felem z = 0; z < f.order(); ++z)
      if (tr(z) == 1) xs.push_back(z);
  } else {
    for (felem z : model.t1_prime())
      if (z != 1) xs.push_back(z);
  }
  bool found = false;
  for (felem x : xs) {
    if (!trivial && !std::binary_search(model.t1_prime().begin(), model.t1_prime().end(), x))
      throw error(errc::precondition_violated, "x must lie in T1'");
    if (trivial && tr(x) != 1) throw error(errc::precondition_violated, "x + x^q must equal 1");
    for (felem y = 0; y < f.order() && !found; ++y) {
      if (trivial ? (y == 1 || norm(y) != 1) : norm(y) != tr(x)) continue;
      w.x = x;
      w.y = y;
      found = true;
    }
    if (found) break;
  }
  if (!found) throw error(errc::no_solution_in_field, "no admissible (x, y) in " + f.label());
  w.e1 = vec3(1, 0, 0);
  w.f1 = vec3(0, 0, 1);
  w.v = vec3(w.x, w.y, 1);
  w.v_prime = trivial ? vec3(w.x, 1, 1) : vec3(1, w.y, w.x);
  w.isotropic = hermitian(f, q, w.v, w.v) == 0 && hermitian(f, q, w.v_prime, w.v_prime) == 0;
  auto pt_of = [&](const Vec& v) {
    auto p = model.point(v);
    if (!p) throw error(errc::precondition_violated, "vector is not isotropic");
    return *p;
  };
  w.I = {pt_of(w.e1), pt_of(w.f1), pt_of(w.v)};
  w.J = {pt_of(w.e1), pt_of(w.f1), pt_of(w.v_prime)};
  w.related2 = r_related(a, w.I, w.J, 2);
  w.related3 = r_related(a, w.I, w.J, 3);
  return w;
}

// G is transitive on ordered pairs of isotropic vectors with <u, v> = c:
// the orbit of (e1, c' f1) is compared with a direct count of such pairs.
struct WittReport {
  felem c = 0;
  std::size_t orbit = 0;
  std::size_t pairs = 0;
  bool transitive = false;
};

inline WittReport witt_transitivity(const GroupPtr& g, felem c) {
  detail::require_unitary(g);
  if (g->scalars().size() != 1) throw error(errc::not_applicable, "scalars act nontrivially on vectors");
  const Field& f = *g->field();
  const std::uint32_t q = g->info().q;
  if (c == 0) throw error(errc::precondition_violated, "c must be nonzero");
  WittReport r;
  r.c = c;
  std::vector<Vec> iso;
  for (felem a = 0; a < f.order(); ++a)
    for (felem b = 0; b < f.order(); ++b)
      for (felem d = 0; d < f.order(); ++d) {
        Vec v = vec3(a, b, d);
        if ((a | b | d) && hermitian(f, q, v, v) == 0) iso.push_back(v);
      }
  for (const auto& u : iso)
    for (const auto& v : iso) r.pairs += hermitian(f, q, u, v) == c;
  // <e1, s f1> = s^q
  const felem s = frobenius_q(f, c, q);
  const Vec u0 = vec3(1, 0, 0), v0 = vec3(0, 0, s);
  std::set<std::pair<Vec, Vec>> orbit;
  for (elem y = 0; y < g->order(); ++y) {
    const auto& m = g->matrix(y);
    orbit.emplace(apply_column(f, m, u0), apply_column(f, m, v0));
  }
  r.orbit = orbit.size();
  r.transitive = r.orbit == r.pairs;
  return r;
}

// Lambda = {Hx : x in Q} for H = L.  Q.R permutes Lambda; it is 2-transitive
// and R fixes no point of Lambda other than H.
struct LambdaReport {
  std::size_t lambda_size = 0;
  bool r_in_h = false;
  bool r_normalizes_q = false;
  bool invariant = false;
  bool two_transitive = false;
  bool r_semiregular = false;  // (Hx)r = Hx only for Hx = H or r = 1
  std::size_t normalizer_index = 0;       // |N(L) : L|
  bool overgroups_normalize = false;      // every x outside N(L) gives <L, x> = G
  bool index_divides = false;             // |N(L) : L| divides (q+1)/gcd(3,q+1)
};

inline LambdaReport su3_lambda_action(const GroupPtr& g, bool check_overgroups = true) {
  detail::require_unitary(g);
  const std::uint32_t q = g->info().q;
  auto L = named_subgroup(g, "L"), Q = named_subgroup(g, "Q"), R = named_subgroup(g, "R");
  CosetAction a(L);
  LambdaReport r;
  std::vector<pt> lam;
  for (elem x : Q.members) lam.push_back(a.coset_of(x));
  std::sort(lam.begin(), lam.end());
  lam.erase(std::unique(lam.begin(), lam.end()), lam.end());
  r.lambda_size = lam.size();
  r.r_in_h = is_subset(R, L);
  r.r_normalizes_q = true;
  for (elem t : R.gens)
    for (elem x : Q.gens) r.r_normalizes_q = r.r_normalizes_q && Q.contains(g->conj(x, t));
  auto QR = generate(g, [&] {
    auto v = Q.gens;
    v.insert(v.end(), R.gens.begin(), R.gens.end());
    return v;
  }());
  std::vector<char> in(a.size(), 0);
  for (auto p : lam) in[p] = 1;
  r.invariant = true;
  for (elem x : QR.gens)
    for (auto p : lam) r.invariant = r.invariant && in[a.image(p, x)];
  std::set<std::pair<pt, pt>> pairs;
  for (elem x : QR.members) {
    for (auto p : lam)
      if (p != lam[0]) pairs.emplace(a.image(lam[0], x), a.image(p, x));
  }
  r.two_transitive = r.invariant && pairs.size() == lam.size() * (lam.size() - 1);
  r.r_semiregular = true;
  for (elem t : R.members) {
    if (t == 0) continue;
    for (auto p : lam)
      if (p != 0 && a.image(p, t) == p) r.r_semiregular = false;
  }
  auto N = normalizer(L);
  r.normalizer_index = N.order() / L.order();
  r.index_divides = ((q + 1) / std::gcd<std::uint32_t>(3, q + 1)) % r.normalizer_index == 0;
  if (check_overgroups) {
    r.overgroups_normalize = true;
    std::vector<char> done(g->order(), 0);
    for (elem x : N.members) done[x] = 1;
    for (elem x = 0; x < g->order() && r.overgroups_normalize; ++x) {
      if (done[x]) continue;
      for (elem n : N.members) done[g->mul(n, x)] = 1;
      auto gens = L.gens;
      gens.push_back(x);
      // a proper subgroup has order at most |G|/2
      auto c = closure(g, gens, g->order() / 2);
      r.overgroups_normalize = !c.has_value();
    }
  }
  return r;
}

}  // namespace gba
