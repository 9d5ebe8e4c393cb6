#pragma once

// Right action of a group on the right cosets of a subgroup, and the
// relational-complexity tooling built on it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gba/error.hpp"
#include "gba/group.hpp"

namespace gba {

using pt = std::uint32_t;

constexpr std::size_t default_omega_cap = 100000;

class CosetAction {
 public:
  explicit CosetAction(Subgroup h, std::size_t cap = default_omega_cap) : g_(h.group), h_(std::move(h)) {
    if (g_->order() % h_.order() != 0 || !h_.contains(0))
      throw error(errc::not_a_subgroup, "point stabilizer is not a subgroup");
    const std::size_t n = g_->order() / h_.order();
    if (n > cap) throw error(errc::cap_exceeded, "index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    coset_of_.assign(g_->order(), npos);
    for (elem x = 0; x < g_->order(); ++x) {
      if (coset_of_[x] != npos) continue;
      const pt w = static_cast<pt>(rep_.size());
      rep_.push_back(x);
      for (elem y : h_.members) {
        elem z = g_->mul(y, x);
        if (coset_of_[z] != npos) throw error(errc::not_a_subgroup, "cosets overlap");
        coset_of_[z] = w;
      }
    }
    // suborbits: H-orbits, numbered by smallest point
    suborbit_of_.assign(rep_.size(), npos);
    for (pt x = 0; x < rep_.size(); ++x) {
      if (suborbit_of_[x] != npos) continue;
      const std::uint32_t id = static_cast<std::uint32_t>(suborbit_rep_.size());
      suborbit_rep_.push_back(x);
      suborbit_size_.push_back(0);
      for (elem y : h_.members) {
        pt z = image(x, y);
        if (suborbit_of_[z] == npos) {
          suborbit_of_[z] = id;
          ++suborbit_size_[id];
        }
      }
    }
  }

  static constexpr pt npos = 0xffffffffu;

  const GroupPtr& group() const noexcept { return g_; }
  const Subgroup& point_stabilizer() const noexcept { return h_; }
  std::size_t size() const noexcept { return rep_.size(); }

  pt image(pt w, elem g) const { return coset_of_[g_->mul(rep_[w], g)]; }
  elem rep(pt w) const { return rep_[w]; }
  pt coset_of(elem g) const { return coset_of_[g]; }

  std::vector<pt> perm(elem g) const {
    std::vector<pt> p(size());
    for (pt w = 0; w < size(); ++w) p[w] = image(w, g);
    return p;
  }

  std::uint32_t suborbit_of(pt x) const { return suborbit_of_[x]; }
  std::size_t suborbit_count() const noexcept { return suborbit_rep_.size(); }
  pt suborbit_rep(std::uint32_t i) const { return suborbit_rep_[i]; }
  std::size_t suborbit_size(std::uint32_t i) const { return suborbit_size_[i]; }

  // G-orbit of the pair (x, y), as the suborbit of y * rep(x)^-1.
  std::uint32_t orbital(pt x, pt y) const {
    return suborbit_of_[coset_of_[g_->mul(rep_[y], g_->inv(rep_[x]))]];
  }

  // {g : x.g = y} = rep(x)^-1 H rep(y)
  std::vector<elem> transporter(pt x, pt y) const {
    std::vector<elem> out;
    out.reserve(h_.order());
    const elem a = g_->inv(rep_[x]);
    for (elem h : h_.members) out.push_back(g_->mul(g_->mul(a, h), rep_[y]));
    return out;
  }

  // Stabilizer of x: rep(x)^-1 H rep(x).
  std::vector<elem> stabilizer(pt x) const {
    auto s = transporter(x, x);
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  GroupPtr g_;
  Subgroup h_;
  std::vector<elem> rep_;
  std::vector<pt> coset_of_;
  std::vector<std::uint32_t> suborbit_of_;
  std::vector<pt> suborbit_rep_;
  std::vector<std::size_t> suborbit_size_;
};

// ---------------------------------------------------------------------------
// Relatedness

// Some g maps I onto J entrywise.
inline bool tuples_related(const CosetAction& a, const std::vector<pt>& I, const std::vector<pt>& J) {
  if (I.size() != J.size()) throw error(errc::length_mismatch, "tuples of different length");
  if (I.empty()) return true;
  for (elem g : a.transporter(I[0], J[0])) {
    bool ok = true;
    for (std::size_t k = 1; k < I.size() && ok; ++k) ok = a.image(I[k], g) == J[k];
    if (ok) return true;
  }
  return false;
}

// I and J are r-related: every r-subtuple of I maps onto the matching subtuple of J.
inline bool r_related(const CosetAction& a, const std::vector<pt>& I, const std::vector<pt>& J, std::size_t r) {
  if (I.size() != J.size()) throw error(errc::length_mismatch, "tuples of different length");
  if (r == 0 || r > I.size()) throw error(errc::length_mismatch, "r must lie in 1..|I|");
  const std::size_t n = I.size();
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<pt> si, sj;
    for (auto i : idx) {
      si.push_back(I[i]);
      sj.push_back(J[i]);
    }
    if (!tuples_related(a, si, sj)) return false;
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

struct RelWitness {
  std::vector<pt> I, J;
  std::size_t related_level = 2;
  std::size_t failing_level = 3;
};

inline bool replay(const CosetAction& a, const RelWitness& w) {
  return r_related(a, w.I, w.J, w.related_level) && !r_related(a, w.I, w.J, w.failing_level);
}

// ---------------------------------------------------------------------------
// Witness search

struct SearchBudget {
  std::uint64_t max_nodes = 5000000;
  std::uint64_t max_work = 4000000000ull;  // image/orbital evaluations
};

enum class search_status { found, exhausted, budget };

struct SearchResult {
  search_status status = search_status::exhausted;
  std::optional<RelWitness> witness;
  std::uint64_t nodes = 0;
  std::uint64_t work = 0;
};

namespace detail {

// Tuples are built as prefixes P = (w0, p2, ...) where each p is an orbit
// representative of the pointwise stabilizer S of the previous prefix.  Every
// point gets a profile: its k-relatedness data against P.  P+x and P+y are
// k-related iff x, y share a profile, and related iff they share an S-orbit,
// so a witness exists iff some profile class meets two S-orbits.
class WitnessSearch {
 public:
  WitnessSearch(const CosetAction& a, std::size_t k, std::size_t max_len, SearchBudget b)
      : a_(a), g_(a.group()), k_(k), max_len_(max_len), budget_(b), n_(a.size()) {}

  SearchResult run() {
    std::vector<pt> prefix{0};
    std::vector<elem> S = a_.point_stabilizer().members;
    std::vector<std::uint32_t> profile(n_, 0);
    subsets_.clear();
    if (k_ == 2)
      for (pt x = 0; x < n_; ++x) profile[x] = a_.suborbit_of(x);
    result_.work += n_;
    node(prefix, S, profile);
    return result_;
  }

 private:
  bool over_budget() {
    if (result_.nodes > budget_.max_nodes || result_.work > budget_.max_work) {
      result_.status = search_status::budget;
      return true;
    }
    return false;
  }

  // pointwise stabilizer in G of the given points
  std::vector<elem> stabilizer_of(const std::vector<pt>& pts) {
    std::vector<elem> s = a_.stabilizer(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      std::vector<elem> next;
      for (elem x : s)
        if (a_.image(pts[i], x) == pts[i]) next.push_back(x);
      s.swap(next);
    }
    result_.work += s.size() * pts.size();
    return s;
  }

  // orbit ids (smallest point) of a subgroup given by its elements
  std::vector<pt> orbits_of(const std::vector<elem>& s) {
    std::vector<pt> id(n_, CosetAction::npos);
    for (pt x = 0; x < n_; ++x) {
      if (id[x] != CosetAction::npos) continue;
      for (elem g : s) id[a_.image(x, g)] = x;
    }
    result_.work += n_ + s.size() * n_;
    return id;
  }

  // profile refined by one more coordinate per point
  static std::vector<std::uint32_t> refine(const std::vector<std::uint32_t>& prof, const std::vector<std::uint32_t>& coord) {
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    ids.reserve(prof.size());
    std::vector<std::uint32_t> out(prof.size());
    for (std::size_t x = 0; x < prof.size(); ++x) {
      const std::uint64_t key = (static_cast<std::uint64_t>(prof[x]) << 32) | coord[x];
      auto it = ids.emplace(key, static_cast<std::uint32_t>(ids.size())).first;
      out[x] = it->second;
    }
    return out;
  }

  void node(const std::vector<pt>& prefix, const std::vector<elem>& S, const std::vector<std::uint32_t>& profile) {
    ++result_.nodes;
    if (over_budget()) return;
    // S-orbits
    std::vector<pt> orbit(n_, CosetAction::npos);
    std::vector<pt> reps;
    std::vector<std::size_t> sizes;
    for (pt x = 0; x < n_; ++x) {
      if (orbit[x] != CosetAction::npos) continue;
      std::size_t cnt = 0;
      for (elem g : S) {
        pt y = a_.image(x, g);
        if (orbit[y] == CosetAction::npos) {
          orbit[y] = x;
          ++cnt;
        }
      }
      reps.push_back(x);
      sizes.push_back(cnt);
    }
    result_.work += reps.size() * S.size();

    if (prefix.size() >= k_) {
      std::unordered_map<std::uint32_t, pt> first;
      for (pt x = 0; x < n_; ++x) {
        auto [it, fresh] = first.emplace(profile[x], x);
        if (!fresh && orbit[it->second] != orbit[x]) {
          RelWitness w;
          w.I = prefix;
          w.I.push_back(it->second);
          w.J = prefix;
          w.J.push_back(x);
          w.related_level = k_;
          w.failing_level = w.I.size();
          result_.status = search_status::found;
          result_.witness = std::move(w);
          return;
        }
      }
    }
    if (max_len_ && prefix.size() + 1 >= max_len_) return;

    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (sizes[r] < 2) continue;
      const pt p = reps[r];
      std::vector<elem> Sp;
      for (elem g : S)
        if (a_.image(p, g) == p) Sp.push_back(g);
      result_.work += S.size();
      std::vector<pt> child_prefix(prefix);
      child_prefix.push_back(p);
      std::vector<std::uint32_t> prof;
      if (k_ == 2) {
        std::vector<std::uint32_t> coord(n_);
        for (pt x = 0; x < n_; ++x) coord[x] = a_.orbital(p, x);
        result_.work += n_;
        prof = refine(profile, coord);
      } else {
        prof = profile;
        // new (k-1)-subsets of the prefix are those containing p
        const std::size_t m = k_ - 2;
        if (prefix.size() >= m) {
          std::vector<std::size_t> idx(m);
          for (std::size_t i = 0; i < m; ++i) idx[i] = i;
          while (true) {
            std::vector<pt> pts{p};
            for (auto i : idx) pts.push_back(prefix[i]);
            auto coord = orbits_of(stabilizer_of(pts));
            prof = refine(prof, coord);
            if (m == 0) break;
            int i = static_cast<int>(m) - 1;
            while (i >= 0 && idx[i] == prefix.size() - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
          }
        }
      }
      node(child_prefix, Sp, prof);
      if (result_.status != search_status::exhausted) return;
    }
  }

  const CosetAction& a_;
  GroupPtr g_;
  std::size_t k_;
  std::size_t max_len_;
  SearchBudget budget_;
  std::size_t n_;
  std::vector<std::vector<pt>> subsets_;
  SearchResult result_;
};

}  // namespace detail

// Tuples of length <= max_len (0: unbounded) that are k-related but not
// related.  Exhausting the unbounded search proves k-relatedness always
// implies relatedness.
inline SearchResult search_witness(const CosetAction& a, std::size_t k = 2, std::size_t max_len = 0,
                                   SearchBudget budget = {}) {
  if (k < 2) throw error(errc::precondition_violated, "relatedness level must be at least 2");
  return detail::WitnessSearch(a, k, max_len, budget).run();
}

// Exact relational complexity by exhaustive search (small actions only).
inline std::optional<std::size_t> relational_complexity(const CosetAction& a, SearchBudget budget = {}) {
  if (a.size() <= 2) return 2;
  for (std::size_t k = 2; k <= a.size(); ++k) {
    auto r = search_witness(a, k, 0, budget);
    if (r.status == search_status::budget) return std::nullopt;
    if (r.status == search_status::exhausted) return k;
  }
  return a.size();
}

// ---------------------------------------------------------------------------
// Height

namespace detail {

inline std::vector<elem> fixing(const CosetAction& a, const std::vector<elem>& s, const std::vector<pt>& pts) {
  std::vector<elem> out;
  for (elem g : s) {
    bool ok = true;
    for (pt x : pts)
      if (a.image(x, g) != x) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace detail

// Largest independent set: every proper subset has a strictly larger
// pointwise stabilizer.
inline std::size_t height(const CosetAction& a, std::uint64_t max_nodes = 2000000) {
  const auto& g = a.group();
  if (a.size() == 1) return 0;
  std::vector<elem> all(g->order());
  std::iota(all.begin(), all.end(), elem{0});
  std::size_t best = 1;
  std::uint64_t nodes = 0;
  std::function<void(std::vector<pt>&, const std::vector<elem>&)> grow = [&](std::vector<pt>& lam,
                                                                              const std::vector<elem>& S) {
    if (++nodes > max_nodes) throw error(errc::cap_exceeded, "height search exceeded node budget");
    best = std::max(best, lam.size());
    std::vector<char> seen(a.size(), 0);
    for (pt x = 0; x < a.size(); ++x) {
      if (seen[x]) continue;
      std::size_t orbit = 0;
      for (elem s : S) {
        pt y = a.image(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          ++orbit;
        }
      }
      if (orbit < 2) continue;  // fixed by G_lambda
      std::vector<elem> Sx;
      for (elem s : S)
        if (a.image(x, s) == x) Sx.push_back(s);
      // dropping any old point must enlarge the stabilizer
      bool independent = true;
      for (std::size_t i = 0; i < lam.size() && independent; ++i) {
        std::vector<pt> rest;
        for (std::size_t j = 0; j < lam.size(); ++j)
          if (j != i) rest.push_back(lam[j]);
        rest.push_back(x);
        independent = detail::fixing(a, all, rest).size() > Sx.size();
      }
      if (!independent) continue;
      lam.push_back(x);
      grow(lam, Sx);
      lam.pop_back();
    }
  };
  std::vector<pt> lam{0};
  grow(lam, a.point_stabilizer().members);
  return best;
}

// ---------------------------------------------------------------------------
// TI subgroups

struct Conjugates {
  std::vector<Subgroup> subgroups;
  std::vector<elem> by;  // subgroups[i] = H^by[i]
};

inline Conjugates conjugates_with_elements(const Subgroup& h) {
  const auto& g = h.group;
  Conjugates c;
  c.subgroups.push_back(h);
  c.by.push_back(0);
  std::unordered_set<std::vector<elem>, detail::VecHash32> seen{h.members};
  for (std::size_t i = 0; i < c.subgroups.size(); ++i)
    for (elem t : g->generators()) {
      Subgroup s = conjugate(c.subgroups[i], t);
      if (seen.insert(s.members).second) {
        c.subgroups.push_back(std::move(s));
        c.by.push_back(g->mul(c.by[i], t));
      }
    }
  return c;
}

inline bool is_ti(const Subgroup& h) {
  if (h.order() == 1) return true;
  for (const auto& c : conjugate_subgroups(h)) {
    std::size_t common = 0;
    for (elem x : c.members) common += h.contains(x);
    if (common != 1 && common != h.order()) return false;
  }
  return true;
}

// H1 = H^g1, H2 = H^g2, H3 = H^g3 distinct with h1 = h2 h3, h_i in H_i, h1 != 1.
struct TiTriple {
  elem g1 = 0, g2 = 0, g3 = 0;
  elem h1 = 0, h2 = 0, h3 = 0;
};

inline bool replay(const Subgroup& h, const TiTriple& t) {
  const auto& g = h.group;
  auto H1 = conjugate(h, t.g1), H2 = conjugate(h, t.g2), H3 = conjugate(h, t.g3);
  return H1.members != H2.members && H1.members != H3.members && H2.members != H3.members && t.h1 != 0 &&
         H1.contains(t.h1) && H2.contains(t.h2) && H3.contains(t.h3) && g->mul(t.h2, t.h3) == t.h1;
}

// Exhaustive search for distinct conjugates with H1 meeting H2.H3
// nontrivially.  H1 = H without loss of generality.
inline std::optional<TiTriple> ti_triple_search(const Subgroup& h) {
  const auto& g = h.group;
  if (h.order() == 1) throw error(errc::precondition_violated, "H is trivial");
  if (is_normal(h)) throw error(errc::precondition_violated, "H is normal");
  if (!is_ti(h)) throw error(errc::precondition_violated, "H is not a TI subgroup");
  auto c = conjugates_with_elements(h);
  std::vector<std::uint32_t> conj_id(g->order(), 0xffffffffu);
  for (std::uint32_t i = 0; i < c.subgroups.size(); ++i)
    for (elem x : c.subgroups[i].members)
      if (x != 0) conj_id[x] = i;
  for (std::uint32_t j = 1; j < c.subgroups.size(); ++j)
    for (elem hh : h.members) {
      if (hh == 0) continue;
      for (elem x : c.subgroups[j].members) {
        if (x == 0) continue;
        const elem z = g->mul(g->inv(x), hh);
        const auto k = conj_id[z];
        if (z != 0 && k != 0xffffffffu && k != 0 && k != j) return TiTriple{0, c.by[j], c.by[k], hh, x, z};
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class verdict { binary, not_binary, unknown };

inline const char* verdict_name(verdict v) {
  switch (v) {
    case verdict::binary: return "Binary";
    case verdict::not_binary: return "NotBinary";
    case verdict::unknown: return "Unknown";
  }
  return "Unknown";
}

struct BinaryVerdict {
  verdict status = verdict::unknown;
  std::string method;
  std::optional<RelWitness> witness;
  std::optional<TiTriple> triple;
  std::string notes;
  std::uint64_t nodes = 0;
};

struct DecideOptions {
  SearchBudget budget{};
  bool use_ti = true;
  std::size_t omega_cap = default_omega_cap;
};

inline BinaryVerdict decide_binary(const CosetAction& a, DecideOptions opt = {}) {
  BinaryVerdict v;
  const auto& h = a.point_stabilizer();
  if (a.size() <= 2) {
    v.status = verdict::binary;
    v.method = "at most two points";
    return v;
  }
  auto short_search = search_witness(a, 2, 3, opt.budget);
  v.nodes += short_search.nodes;
  if (short_search.status == search_status::found) {
    v.status = verdict::not_binary;
    v.method = "3-tuple search";
    v.witness = short_search.witness;
    return v;
  }
  if (opt.use_ti && h.order() > 1 && !is_normal(h) && is_ti(h)) {
    auto t = ti_triple_search(h);
    v.method = "TI criterion";
    if (t) {
      v.status = verdict::not_binary;
      v.triple = t;
    } else {
      v.status = verdict::binary;
      v.notes = "no distinct conjugates H1, H2, H3 with H1 meeting H2.H3";
    }
    return v;
  }
  auto full = search_witness(a, 2, 0, opt.budget);
  v.nodes += full.nodes;
  v.method = "exhaustive search";
  if (full.status == search_status::found) {
    v.status = verdict::not_binary;
    v.witness = full.witness;
  } else if (full.status == search_status::exhausted) {
    v.status = verdict::binary;
    v.notes = "every pair of 2-related tuples is related";
  } else {
    v.status = verdict::unknown;
    v.notes = "search budget exhausted after " + std::to_string(full.nodes) + " nodes";
  }
  return v;
}

inline BinaryVerdict decide_binary(const Subgroup& h, DecideOptions opt = {}) {
  try {
    CosetAction a(h, opt.omega_cap);
    return decide_binary(a, opt);
  } catch (const error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    BinaryVerdict v;
    v.status = verdict::unknown;
    v.method = "none";
    v.notes = e.what();
    return v;
  }
}

// ---------------------------------------------------------------------------
// Frobenius actions and suborbits

// Complement order when the action is Frobenius.
inline std::optional<std::size_t> frobenius_profile(const CosetAction& a) {
  const auto& h = a.point_stabilizer();
  if (h.order() == 1 || a.size() < 2) return std::nullopt;
  for (std::uint32_t i = 0; i < a.suborbit_count(); ++i) {
    if (a.suborbit_rep(i) == 0) continue;
    if (a.suborbit_size(i) != h.order()) return std::nullopt;
  }
  return h.order();
}

struct SuborbitInfo {
  pt rep = 0;
  std::vector<pt> points;
  std::size_t point_stabilizer_order = 0;  // |H_rep|
  std::size_t kernel_order = 0;            // elements of H fixing the suborbit pointwise
  bool frobenius = false;                  // H induces a Frobenius group on it
  std::size_t complement_order = 0;        // |H_rep / kernel| when frobenius
};

inline std::vector<SuborbitInfo> suborbit_actions(const CosetAction& a) {
  const auto& h = a.point_stabilizer();
  std::vector<SuborbitInfo> out(a.suborbit_count());
  for (pt x = 0; x < a.size(); ++x) out[a.suborbit_of(x)].points.push_back(x);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    auto& s = out[i];
    s.rep = a.suborbit_rep(i);
    std::vector<elem> stab;
    for (elem y : h.members)
      if (a.image(s.rep, y) == s.rep) stab.push_back(y);
    s.point_stabilizer_order = stab.size();
    std::size_t kernel = 0;
    for (elem y : stab) {
      bool fixes = true;
      for (pt z : s.points)
        if (a.image(z, y) != z) {
          fixes = false;
          break;
        }
      kernel += fixes;
    }
    s.kernel_order = kernel;
    const std::size_t comp = stab.size() / kernel;
    if (s.points.size() > 1 && comp > 1) {
      // semiregular on the rest of the suborbit
      bool semi = true;
      std::vector<char> seen(a.size(), 0);
      seen[s.rep] = 1;
      for (pt z : s.points) {
        if (seen[z]) continue;
        std::vector<char> local(a.size(), 0);
        std::size_t cnt = 0;
        for (elem y : stab) {
          pt w = a.image(z, y);
          seen[w] = 1;
          if (!local[w]) {
            local[w] = 1;
            ++cnt;
          }
        }
        if (cnt != comp) {
          semi = false;
          break;
        }
      }
      s.frobenius = semi;
      s.complement_order = semi ? comp : 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// A semidirect product N.T with a normal K inside N

struct PseudoFrobeniusReport {
  bool semidirect = false;
  bool k_normal = false;
  bool t_free_outside_k = false;
  bool t0_kernel_on_k = false;
  bool nondegenerate = false;
  bool hypotheses = false;
  BinaryVerdict action;
  bool conclusion_holds = true;  // T0 = T and |T| <= 1 + 2|K| whenever binary
  std::int64_t inequality_lhs = 0;
  std::int64_t inequality_rhs = 0;
  bool inequality_holds = false;
  std::string notes;
};

// All arguments are subgroups of one ambient group; G plays the semidirect
// product N.T.
inline PseudoFrobeniusReport check_pseudo_frobenius(const Subgroup& G, const Subgroup& N, const Subgroup& K,
                                                    const Subgroup& T, const Subgroup& T0, DecideOptions opt = {}) {
  PseudoFrobeniusReport r;
  const auto& g = G.group;
  auto normal_in = [&](const Subgroup& s, const Subgroup& in) {
    for (elem t : in.gens)
      for (elem x : s.gens)
        if (!s.contains(g->conj(x, t))) return false;
    return true;
  };
  const bool inside = is_subset(N, G) && is_subset(T, G) && is_subset(K, N) && is_subset(T0, T);
  r.semidirect = inside && normal_in(N, G) && intersect(N, T).order() == 1 && N.order() * T.order() == G.order();
  r.k_normal = inside && normal_in(K, G);
  bool free_a = true;
  for (elem t : T.members) {
    if (t == 0) continue;
    for (elem n : N.members)
      if (!K.contains(n) && g->conj(n, t) == n) {
        free_a = false;
        break;
      }
    if (!free_a) break;
  }
  r.t_free_outside_k = free_a;
  bool factors = true;
  for (elem t : T.members)
    for (elem k : K.members) {
      if (k == 0) continue;
      const bool fixed = g->conj(k, t) == k;
      if (fixed != T0.contains(t)) factors = false;
    }
  r.t0_kernel_on_k = factors;
  r.nondegenerate = N.order() > K.order() && T0.order() > 1;
  r.hypotheses = r.semidirect && r.k_normal && r.t_free_outside_k && r.t0_kernel_on_k && r.nondegenerate;

  const std::int64_t e = static_cast<std::int64_t>(N.order() / K.order());
  const std::int64_t s = e - 2;
  const std::int64_t t0 = static_cast<std::int64_t>(T0.order()), t = static_cast<std::int64_t>(T.order()),
                     k = static_cast<std::int64_t>(K.order()), n = static_cast<std::int64_t>(N.order());
  r.inequality_lhs = s * (t0 - 1 + k * (t - t0));
  r.inequality_rhs = n - k;
  r.inequality_holds = r.inequality_lhs <= r.inequality_rhs;

  auto sub = as_group(G, "N.T");
  r.action = decide_binary(restrict_subgroup(sub, T), opt);
  if (r.action.status == verdict::binary) {
    r.conclusion_holds = T0.order() == T.order() && (e <= 2 || t <= 1 + 2 * k);
    r.notes = r.hypotheses ? "binary: conclusion checked" : "binary, hypotheses fail";
  } else if (r.action.status == verdict::not_binary) {
    r.notes = "not binary: nothing to check";
  } else {
    r.notes = "verdict unknown";
  }
  return r;
}

}  // namespace gba
