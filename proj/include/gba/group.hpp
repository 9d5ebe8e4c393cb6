#pragma once

// Fully enumerated finite groups.
//
// Elements are indices 0..|G|-1 (0 is the identity).  After enumeration each
// element gets a permutation of a small faithful point set; products are then
// resolved by the images of a base, so mul() costs a handful of lookups.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gba/error.hpp"
#include "gba/ffield.hpp"
#include "gba/matrix.hpp"

namespace gba {

using elem = std::uint32_t;
using point_t = std::uint16_t;

enum class family { none, sl2, psl2, su3, psu3, sz, perm };

struct GroupInfo {
  family fam = family::none;
  std::uint32_t q = 0;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

constexpr std::uint64_t default_group_cap = 1000000;

namespace detail {

struct PermHash {
  std::size_t operator()(const std::vector<point_t>& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct VecHash32 {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace detail

class FiniteGroup {
 public:
  static constexpr elem npos = 0xffffffffu;

  // Closure of matrix generators modulo the given scalar subgroup.
  static GroupPtr from_matrices(FieldPtr field, std::vector<Matrix> gens, std::vector<felem> scalars,
                                std::string label, GroupInfo info = {},
                                std::uint64_t cap = default_group_cap) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
    g->field_ = std::move(field);
    g->label_ = std::move(label);
    g->info_ = info;
    if (scalars.empty()) scalars.push_back(1);
    std::sort(scalars.begin(), scalars.end());
    g->scalars_ = std::move(scalars);
    const int n = gens.empty() ? 1 : gens.front().n;
    g->dim_ = n;
    for (auto& m : gens) {
      if (m.n != n) throw error(errc::spec_mismatch, "generators of different dimension");
      m = g->canonical(m);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const Matrix id = g->canonical(identity_matrix(n));
    gens.erase(std::remove(gens.begin(), gens.end(), id), gens.end());
    g->enumerate_matrices(id, gens, cap);
    g->build_matrix_points();
    g->finish();
    return g;
  }

  // Closure of permutations of {0..degree-1}.
  static GroupPtr from_permutations(int degree, std::vector<std::vector<point_t>> gens, std::string label,
                                    std::uint64_t cap = default_group_cap) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
    g->label_ = std::move(label);
    g->info_.fam = family::perm;
    g->degree_ = degree;
    std::vector<point_t> id(degree);
    std::iota(id.begin(), id.end(), point_t{0});
    for (auto& p : gens) {
      if (static_cast<int>(p.size()) != degree) throw error(errc::length_mismatch, "permutation degree mismatch");
      std::vector<char> seen(degree, 0);
      for (auto x : p) {
        if (x >= degree || seen[x]) throw error(errc::not_closed, "not a permutation");
        seen[x] = 1;
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove(gens.begin(), gens.end(), id), gens.end());

    std::unordered_map<std::vector<point_t>, elem, detail::PermHash> index;
    std::vector<std::vector<point_t>> elems{id};
    index.emplace(id, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& s : gens) {
        std::vector<point_t> c(degree);
        for (int x = 0; x < degree; ++x) c[x] = s[elems[i][x]];
        if (index.count(c)) continue;
        if (elems.size() >= cap) throw error(errc::cap_exceeded, "group order exceeds cap " + std::to_string(cap));
        index.emplace(c, static_cast<elem>(elems.size()));
        elems.push_back(std::move(c));
      }
    }
    g->order_ = elems.size();
    g->perms_.resize(g->order_ * degree);
    for (std::size_t i = 0; i < elems.size(); ++i)
      std::copy(elems[i].begin(), elems[i].end(), g->perms_.begin() + static_cast<std::ptrdiff_t>(i * degree));
    for (const auto& s : gens) g->gens_.push_back(index.at(s));
    g->finish();
    return g;
  }

  // The subgroup with the given sorted member list, re-indexed as a group of
  // its own.  parent_index() maps back.
  static GroupPtr restrict_to(const GroupPtr& parent, const std::vector<elem>& members,
                              const std::vector<elem>& parent_gens, std::string label) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
    g->label_ = std::move(label);
    g->info_ = parent->info_;
    g->field_ = parent->field_;
    g->dim_ = parent->dim_;
    g->scalars_ = parent->scalars_;
    g->degree_ = parent->degree_;
    g->order_ = members.size();
    g->parent_ = parent;
    g->parent_index_ = members;
    g->perms_.resize(g->order_ * g->degree_);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const point_t* p = parent->perm(members[i]);
      std::copy(p, p + g->degree_, g->perms_.begin() + static_cast<std::ptrdiff_t>(i * g->degree_));
    }
    if (parent->has_matrices()) {
      g->matrices_.reserve(members.size());
      for (elem x : members) {
        g->matrix_index_.emplace(parent->matrix(x), static_cast<elem>(g->matrices_.size()));
        g->matrices_.push_back(parent->matrix(x));
      }
    }
    for (elem x : parent_gens) {
      auto it = std::lower_bound(members.begin(), members.end(), x);
      if (it == members.end() || *it != x) throw error(errc::not_a_subgroup, "generator outside member list");
      g->gens_.push_back(static_cast<elem>(it - members.begin()));
    }
    if (members.empty() || members.front() != 0) throw error(errc::not_a_subgroup, "member list lacks identity");
    g->finish();
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  elem identity() const noexcept { return 0; }
  const std::string& label() const noexcept { return label_; }
  const GroupInfo& info() const noexcept { return info_; }
  const std::vector<elem>& generators() const noexcept { return gens_; }

  elem mul(elem a, elem b) const {
    const point_t* pa = perm(a);
    const point_t* pb = perm(b);
    std::uint64_t key = 0;
    for (point_t beta : base_) key = key * degree_ + pb[pa[beta]];
    return lookup(key);
  }
  elem inv(elem a) const { return inv_[a]; }
  elem pow(elem a, long long k) const {
    const long long o = order_of_[a];
    k %= o;
    if (k < 0) k += o;
    elem r = 0;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  // g^-1 x g
  elem conj(elem x, elem g) const { return mul(mul(inv_[g], x), g); }
  bool commute(elem a, elem b) const { return mul(a, b) == mul(b, a); }
  std::uint32_t element_order(elem a) const { return order_of_[a]; }

  int degree() const noexcept { return degree_; }
  const point_t* perm(elem a) const { return perms_.data() + static_cast<std::size_t>(a) * degree_; }
  const std::vector<point_t>& base() const noexcept { return base_; }

  // Element with the given images of the base points, if any.
  elem from_base_images(const std::vector<point_t>& imgs) const {
    std::uint64_t key = 0;
    for (auto x : imgs) key = key * degree_ + x;
    return lookup(key);
  }

  bool has_matrices() const noexcept { return !matrices_.empty(); }
  const Matrix& matrix(elem a) const { return matrices_.at(a); }
  const FieldPtr& field() const noexcept { return field_; }
  int dim() const noexcept { return dim_; }
  const std::vector<felem>& scalars() const noexcept { return scalars_; }

  // Representative of M modulo the identified scalars: the lexicographic
  // minimum of the codes of lambda*M.
  Matrix canonical(const Matrix& m) const {
    Matrix best = m;
    for (felem s : scalars_) {
      if (s == 1) continue;
      Matrix c = mat_scale(*field_, s, m);
      if (c.a < best.a) best = c;
    }
    return best;
  }

  std::optional<elem> find(const Matrix& m) const {
    if (!has_matrices() || m.n != dim_) return std::nullopt;
    auto it = matrix_index_.find(canonical(m));
    if (it == matrix_index_.end()) return std::nullopt;
    return it->second;
  }

  elem find_or_throw(const Matrix& m) const {
    auto e = find(m);
    if (!e) throw error(errc::not_a_subgroup, "matrix " + format_matrix(m) + " is not in " + label_);
    return *e;
  }

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<elem>& parent_index() const noexcept { return parent_index_; }

 private:
  FiniteGroup() = default;

  void enumerate_matrices(const Matrix& id, const std::vector<Matrix>& gens, std::uint64_t cap) {
    matrices_.push_back(id);
    matrix_index_.emplace(id, 0);
    bfs_parent_.push_back(npos);
    bfs_gen_.push_back(0);
    const Field& f = *field_;
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix c = canonical(mat_mul(f, matrices_[i], gens[k]));
        if (matrix_index_.count(c)) continue;
        if (matrices_.size() >= cap)
          throw error(errc::cap_exceeded, label_ + " order exceeds cap " + std::to_string(cap));
        matrix_index_.emplace(c, static_cast<elem>(matrices_.size()));
        matrices_.push_back(c);
        bfs_parent_.push_back(static_cast<elem>(i));
        bfs_gen_.push_back(static_cast<std::uint32_t>(k));
      }
    }
    order_ = matrices_.size();
    for (const auto& m : gens) gens_.push_back(matrix_index_.at(m));
  }

  // Normalized point: a vector up to the scalar group `mod` (a list of units).
  Vec normalize(const Vec& v, const std::vector<felem>& mod) const {
    Vec best = v;
    for (felem s : mod) {
      Vec c = v;
      for (int i = 0; i < v.n; ++i) c[i] = field_->mul(s, v[i]);
      if (c.v < best.v) best = c;
    }
    return best;
  }

  // Tries orbits of e1, e2, ... under projective scalars, then under the
  // identified scalars only; stops at the first faithful point set.
  void build_matrix_points() {
    const Field& f = *field_;
    std::vector<felem> all_units;
    for (felem x = 1; x < f.order(); ++x) all_units.push_back(x);
    std::vector<Matrix> gen_mats;
    for (elem g : gens_) gen_mats.push_back(matrices_[g]);

    for (int mode = 0; mode < 2; ++mode) {
      const std::vector<felem>& mod = mode == 0 ? all_units : scalars_;
      std::vector<Vec> points;
      std::unordered_map<Vec, point_t, VecHash> pidx;
      for (int seed = 0; seed < dim_; ++seed) {
        Vec s = normalize(unit_vector(dim_, seed), mod);
        if (pidx.count(s)) continue;
        // orbit of the seed
        std::size_t start = points.size();
        points.push_back(s);
        pidx.emplace(s, static_cast<point_t>(points.size() - 1));
        for (std::size_t i = start; i < points.size(); ++i)
          for (const auto& m : gen_mats) {
            Vec w = normalize(vec_mul(f, points[i], m), mod);
            if (pidx.count(w)) continue;
            if (points.size() >= 65535) throw error(errc::cap_exceeded, "permutation degree too large");
            pidx.emplace(w, static_cast<point_t>(points.size()));
            points.push_back(w);
          }
        if (order_ == 1) {
          degree_ = static_cast<int>(points.size());
          perms_.assign(points.size(), 0);
          std::iota(perms_.begin(), perms_.end(), point_t{0});
          return;
        }
        if (try_perms(points, pidx, mod)) return;
      }
    }
    throw error(errc::not_closed, "no faithful point action found for " + label_);
  }

  bool try_perms(const std::vector<Vec>& points, const std::unordered_map<Vec, point_t, VecHash>& pidx,
                 const std::vector<felem>& mod) {
    const Field& f = *field_;
    const int deg = static_cast<int>(points.size());
    std::vector<std::vector<point_t>> gp(gens_.size(), std::vector<point_t>(deg));
    for (std::size_t k = 0; k < gens_.size(); ++k)
      for (int x = 0; x < deg; ++x) gp[k][x] = pidx.at(normalize(vec_mul(f, points[x], matrices_[gens_[k]]), mod));
    std::vector<point_t> p(order_ * deg);
    for (int x = 0; x < deg; ++x) p[x] = static_cast<point_t>(x);
    for (std::size_t i = 1; i < order_; ++i) {
      const point_t* pp = p.data() + static_cast<std::size_t>(bfs_parent_[i]) * deg;
      const auto& g = gp[bfs_gen_[i]];
      point_t* pc = p.data() + i * deg;
      bool trivial = true;
      for (int x = 0; x < deg; ++x) {
        pc[x] = g[pp[x]];
        trivial = trivial && pc[x] == x;
      }
      if (trivial) return false;
    }
    degree_ = deg;
    perms_ = std::move(p);
    return true;
  }

  void choose_base() {
    base_.clear();
    std::vector<elem> cur(order_);
    std::iota(cur.begin(), cur.end(), elem{0});
    std::vector<std::uint32_t> stamp(degree_, 0);
    std::uint32_t tick = 0;
    while (cur.size() > 1) {
      int best = -1;
      std::size_t best_orbit = 1;
      for (int b = 0; b < degree_; ++b) {
        ++tick;
        std::size_t cnt = 0;
        for (elem x : cur) {
          point_t y = perm(x)[b];
          if (stamp[y] != tick) {
            stamp[y] = tick;
            ++cnt;
          }
        }
        if (cnt > best_orbit) {
          best_orbit = cnt;
          best = b;
        }
      }
      if (best < 0) throw error(errc::not_closed, "permutation action is not faithful");
      base_.push_back(static_cast<point_t>(best));
      std::vector<elem> next;
      for (elem x : cur)
        if (perm(x)[best] == best) next.push_back(x);
      cur.swap(next);
    }
  }

  elem lookup(std::uint64_t key) const {
    if (!dense_.empty()) return dense_[key];
    auto it = sparse_.find(key);
    return it == sparse_.end() ? npos : it->second;
  }

  std::uint64_t key_of(elem a) const {
    std::uint64_t key = 0;
    for (point_t beta : base_) key = key * degree_ + perm(a)[beta];
    return key;
  }

  void finish() {
    choose_base();
    std::uint64_t space = 1;
    bool dense = true;
    for (std::size_t i = 0; i < base_.size(); ++i) {
      space *= static_cast<std::uint64_t>(degree_);
      if (space > (1u << 24)) dense = false;
    }
    if (dense) {
      dense_.assign(space, npos);
      for (elem a = 0; a < order_; ++a) dense_[key_of(a)] = a;
    } else {
      sparse_.reserve(order_);
      for (elem a = 0; a < order_; ++a) sparse_.emplace(key_of(a), a);
    }
    inv_.resize(order_);
    order_of_.resize(order_);
    std::vector<point_t> ip(degree_);
    std::vector<char> seen(degree_);
    for (elem a = 0; a < order_; ++a) {
      const point_t* p = perm(a);
      std::uint64_t key = 0;
      for (int x = 0; x < degree_; ++x) ip[p[x]] = static_cast<point_t>(x);
      for (point_t beta : base_) key = key * degree_ + ip[beta];
      inv_[a] = lookup(key);
      std::fill(seen.begin(), seen.end(), 0);
      std::uint64_t o = 1;
      for (int x = 0; x < degree_; ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        for (int y = x; !seen[y]; y = p[y]) {
          seen[y] = 1;
          ++len;
        }
        o = detail::lcm64(o, len);
      }
      order_of_[a] = static_cast<std::uint32_t>(o);
    }
    bfs_parent_.clear();
    bfs_parent_.shrink_to_fit();
    bfs_gen_.clear();
    bfs_gen_.shrink_to_fit();
  }

  std::string label_;
  GroupInfo info_;
  std::size_t order_ = 0;
  std::vector<elem> gens_;

  FieldPtr field_;
  int dim_ = 0;
  std::vector<felem> scalars_{1};
  std::vector<Matrix> matrices_;
  std::unordered_map<Matrix, elem, MatrixHash> matrix_index_;
  std::vector<elem> bfs_parent_;
  std::vector<std::uint32_t> bfs_gen_;

  int degree_ = 0;
  std::vector<point_t> perms_;
  std::vector<point_t> base_;
  std::vector<elem> dense_;
  std::unordered_map<std::uint64_t, elem> sparse_;
  std::vector<elem> inv_;
  std::vector<std::uint32_t> order_of_;

  GroupPtr parent_;
  std::vector<elem> parent_index_;
};

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  GroupPtr group;
  std::vector<elem> members;  // sorted
  std::vector<elem> gens;
  std::string label;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(elem x) const { return std::binary_search(members.begin(), members.end(), x); }
  std::vector<char> mask() const {
    std::vector<char> m(group->order(), 0);
    for (elem x : members) m[x] = 1;
    return m;
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

// <gens>, or nullopt when the closure would exceed max_order (0 = no bound).
inline std::optional<Subgroup> closure(const GroupPtr& g, std::vector<elem> gens, std::size_t max_order = 0,
                                       std::string label = {}) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), elem{0}), gens.end());
  std::vector<elem> members{0};
  std::unordered_set<elem> seen{0};
  for (std::size_t i = 0; i < members.size(); ++i)
    for (elem s : gens) {
      elem y = g->mul(members[i], s);
      if (seen.insert(y).second) {
        members.push_back(y);
        if (max_order && members.size() > max_order) return std::nullopt;
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members), std::move(gens), std::move(label)};
}

inline Subgroup generate(const GroupPtr& g, std::vector<elem> gens, std::string label = {}) {
  return *closure(g, std::move(gens), 0, std::move(label));
}

inline Subgroup whole_group(const GroupPtr& g) {
  std::vector<elem> m(g->order());
  std::iota(m.begin(), m.end(), elem{0});
  return Subgroup{g, std::move(m), g->generators(), g->label()};
}

inline Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}, {}, "1"}; }

// A short generating set: elements of larger order are tried first.
inline std::vector<elem> small_generating_set(const GroupPtr& g, const std::vector<elem>& members) {
  std::vector<elem> cand(members);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](elem a, elem b) { return g->element_order(a) > g->element_order(b); });
  std::vector<elem> gens;
  std::vector<char> in(g->order(), 0);
  in[0] = 1;
  std::vector<elem> cur{0};
  for (elem x : cand) {
    if (in[x]) continue;
    gens.push_back(x);
    // extend the closure
    std::vector<elem> queue(cur);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (elem s : gens) {
        elem y = g->mul(queue[i], s);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    cur.swap(queue);
    if (cur.size() == members.size()) break;
  }
  return gens;
}

inline Subgroup subgroup_from_members(const GroupPtr& g, std::vector<elem> members, std::string label = {}) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw error(errc::not_a_subgroup, "identity missing");
  auto gens = small_generating_set(g, members);
  auto h = closure(g, gens, members.size());
  if (!h || h->members != members) throw error(errc::not_a_subgroup, "member set is not closed");
  return Subgroup{g, std::move(members), std::move(gens), std::move(label)};
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b, std::string label = {}) {
  std::vector<elem> m;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(m));
  auto gens = small_generating_set(a.group, m);
  return Subgroup{a.group, std::move(m), std::move(gens), std::move(label)};
}

inline bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

inline std::vector<elem> conjugate_members(const Subgroup& s, elem g) {
  std::vector<elem> m;
  m.reserve(s.members.size());
  for (elem x : s.members) m.push_back(s.group->conj(x, g));
  std::sort(m.begin(), m.end());
  return m;
}

// S^g = g^-1 S g
inline Subgroup conjugate(const Subgroup& s, elem g) {
  Subgroup r{s.group, conjugate_members(s, g), {}, s.label};
  for (elem x : s.gens) r.gens.push_back(s.group->conj(x, g));
  return r;
}

inline bool is_normal(const Subgroup& s) {
  const auto& g = s.group;
  for (elem t : g->generators())
    for (elem x : s.gens)
      if (!s.contains(g->conj(x, t))) return false;
  return true;
}

// All distinct conjugates of S, S itself first, then in discovery order.
inline std::vector<Subgroup> conjugate_subgroups(const Subgroup& s) {
  const auto& g = s.group;
  std::vector<Subgroup> out{s};
  std::unordered_set<std::vector<elem>, detail::VecHash32> seen{s.members};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (elem t : g->generators()) {
      Subgroup c = conjugate(out[i], t);
      if (seen.insert(c.members).second) out.push_back(std::move(c));
    }
  return out;
}

inline Subgroup normalizer(const Subgroup& s, std::string label = {}) {
  const auto& g = s.group;
  auto in = s.mask();
  std::vector<elem> m;
  for (elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (elem y : s.gens)
      if (!in[g->conj(y, x)]) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  auto gens = small_generating_set(g, m);
  return Subgroup{g, std::move(m), std::move(gens), std::move(label)};
}

inline Subgroup centralizer(const GroupPtr& g, elem x, std::string label = {}) {
  std::vector<elem> m;
  for (elem y = 0; y < g->order(); ++y)
    if (g->commute(x, y)) m.push_back(y);
  auto gens = small_generating_set(g, m);
  return Subgroup{g, std::move(m), std::move(gens), std::move(label)};
}

inline Subgroup center(const Subgroup& s, std::string label = {}) {
  const auto& g = s.group;
  std::vector<elem> m;
  for (elem x : s.members) {
    bool ok = true;
    for (elem y : s.gens)
      if (!g->commute(x, y)) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  auto gens = small_generating_set(g, m);
  return Subgroup{g, std::move(m), std::move(gens), std::move(label)};
}

// Largest normal subgroup of G inside S.
inline Subgroup core(const Subgroup& s) {
  std::vector<char> in = s.mask();
  for (const auto& c : conjugate_subgroups(s)) {
    std::vector<char> next(in.size(), 0);
    for (elem x : c.members) next[x] = in[x];
    in.swap(next);
  }
  std::vector<elem> m;
  for (elem x = 0; x < in.size(); ++x)
    if (in[x]) m.push_back(x);
  return subgroup_from_members(s.group, std::move(m));
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

// A Sylow p-subgroup built by repeatedly adjoining the smallest p-element of
// N(P) outside P.
inline Subgroup sylow(const GroupPtr& g, std::uint32_t p, std::string label = {}) {
  if (!is_prime(p)) throw error(errc::non_prime, std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g->order(), p);
  Subgroup P = trivial_subgroup(g);
  while (P.order() < target) {
    Subgroup N = normalizer(P);
    elem pick = FiniteGroup::npos;
    // prefer elements of largest p-power order to take big steps
    std::uint32_t best = 1;
    for (elem x : N.members) {
      const auto o = g->element_order(x);
      if (o > best && is_p_power(o, p) && !P.contains(x)) {
        best = o;
        pick = x;
      }
    }
    if (pick == FiniteGroup::npos) throw error(errc::not_closed, "Sylow construction stalled");
    auto gens = P.gens;
    gens.push_back(pick);
    P = generate(g, gens);
    P.gens = small_generating_set(g, P.members);
  }
  P.label = label.empty() ? "Sylow-" + std::to_string(p) : std::move(label);
  return P;
}

// S (a subgroup of g->parent()) re-expressed inside the restricted group g.
inline Subgroup restrict_subgroup(const GroupPtr& g, const Subgroup& s) {
  const auto& idx = g->parent_index();
  std::vector<elem> m;
  for (elem x : s.members) {
    auto it = std::lower_bound(idx.begin(), idx.end(), x);
    if (it == idx.end() || *it != x) throw error(errc::not_a_subgroup, "subgroup leaves the restricted group");
    m.push_back(static_cast<elem>(it - idx.begin()));
  }
  std::vector<elem> gens;
  for (elem x : s.gens) gens.push_back(static_cast<elem>(std::lower_bound(idx.begin(), idx.end(), x) - idx.begin()));
  return Subgroup{g, std::move(m), std::move(gens), s.label};
}

inline GroupPtr as_group(const Subgroup& s, std::string label = {}) {
  return FiniteGroup::restrict_to(s.group, s.members, s.gens, label.empty() ? s.label : std::move(label));
}

// ---------------------------------------------------------------------------
// Conjugacy classes

struct ConjClass {
  std::vector<elem> members;  // sorted
  elem representative = 0;    // smallest member
  std::uint32_t element_order = 1;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(elem x) const { return std::binary_search(members.begin(), members.end(), x); }
};

// Classes ordered by (element order, size, smallest member).
inline std::vector<ConjClass> conjugacy_classes(const GroupPtr& g) {
  std::vector<char> done(g->order(), 0);
  std::vector<ConjClass> out;
  for (elem x = 0; x < g->order(); ++x) {
    if (done[x]) continue;
    ConjClass c;
    c.members.push_back(x);
    done[x] = 1;
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (elem t : g->generators()) {
        elem y = g->conj(c.members[i], t);
        if (!done[y]) {
          done[y] = 1;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.element_order = g->element_order(x);
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return out;
}

// class index of every element
inline std::vector<std::uint32_t> class_index(const GroupPtr& g, const std::vector<ConjClass>& classes) {
  std::vector<std::uint32_t> id(g->order(), 0);
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    for (elem x : classes[c].members) id[x] = c;
  return id;
}

inline const ConjClass& class_of(const std::vector<ConjClass>& classes, elem x) {
  for (const auto& c : classes)
    if (c.contains(x)) return c;
  throw error(errc::not_a_subgroup, "element outside all classes");
}

// #{(x,y) in C1 x C2 : xy = h}
inline std::uint64_t class_product_count(const GroupPtr& g, const ConjClass& c1, const ConjClass& c2, elem h) {
  std::uint64_t n = 0;
  for (elem x : c1.members)
    if (c2.contains(g->mul(g->inv(x), h))) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Subgroups up to conjugacy

struct SweepOptions {
  std::size_t max_order = 0;        // 0: no bound
  std::size_t group_cap = 1200;     // full sweep only below this order
};

namespace detail {

// smallest generator of <x>, for every x
inline std::vector<elem> cyclic_ids(const GroupPtr& g) {
  std::vector<elem> id(g->order(), FiniteGroup::npos);
  for (elem x = 0; x < g->order(); ++x) {
    if (id[x] != FiniteGroup::npos) continue;
    const auto o = g->element_order(x);
    std::vector<elem> gens;
    elem y = x;
    for (std::uint32_t k = 1; k <= o; ++k) {
      if (std::gcd(k, o) == 1) gens.push_back(y);
      y = g->mul(y, x);
    }
    const elem m = *std::min_element(gens.begin(), gens.end());
    for (elem z : gens) id[z] = m;
  }
  return id;
}

}  // namespace detail

// One representative per conjugacy class of subgroups, sorted by order and
// then by member list.  Every subgroup is a join of a smaller one with a
// cyclic subgroup, so the lattice is closed up from the trivial group.
inline std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, SweepOptions opt = {}) {
  if (opt.max_order == 0 && g->order() > opt.group_cap)
    throw error(errc::cap_exceeded,
                "subgroup sweep of " + g->label() + " exceeds cap " + std::to_string(opt.group_cap));
  const std::size_t bound = opt.max_order ? opt.max_order : g->order();
  const auto cyc = detail::cyclic_ids(g);
  std::vector<elem> cyc_gens;
  for (elem x = 1; x < g->order(); ++x)
    if (cyc[x] == x) cyc_gens.push_back(x);

  std::unordered_set<std::vector<elem>, detail::VecHash32> known;
  std::vector<Subgroup> reps;
  auto add_class = [&](Subgroup s) {
    for (auto& c : conjugate_subgroups(s)) known.insert(std::move(c.members));
    reps.push_back(std::move(s));
  };
  add_class(trivial_subgroup(g));

  std::vector<char> in(g->order(), 0);
  std::vector<std::uint32_t> mark(g->order(), 0);
  std::uint32_t tick = 0;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Subgroup K = reps[r];
    Subgroup NK = normalizer(K);
    std::fill(in.begin(), in.end(), 0);
    for (elem x : K.members) in[x] = 1;
    ++tick;
    for (elem c : cyc_gens) {
      if (mark[c] == tick || in[c]) continue;
      // N(K)-orbit of the cyclic subgroup <c>; c is its smallest member
      std::vector<elem> orbit{c};
      mark[c] = tick;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (elem t : NK.gens) {
          elem d = cyc[g->conj(orbit[i], t)];
          if (mark[d] != tick) {
            mark[d] = tick;
            orbit.push_back(d);
          }
        }
      if (K.order() * 2 > bound) continue;
      auto gens = K.gens;
      gens.push_back(c);
      auto L = closure(g, gens, bound);
      if (!L) continue;
      if (known.count(L->members)) continue;
      L->gens = small_generating_set(g, L->members);
      add_class(std::move(*L));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return reps;
}

}  // namespace gba
