#pragma once

// The graph on a conjugacy class of p-elements: x ~ y iff they commute and
// x y^-1 or y x^-1 lies in the class.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gba/action.hpp"
#include "gba/error.hpp"
#include "gba/graph.hpp"
#include "gba/group.hpp"

namespace gba {

struct CommGraph {
  GroupPtr group;
  std::vector<elem> vertices;  // sorted
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint32_t> component;            // component id per vertex
  std::vector<std::vector<std::uint32_t>> parts;   // vertex positions per component, ordered by least member

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& a : adj) e += a.size();
    return e / 2;
  }
  bool connected() const noexcept { return parts.size() <= 1; }
  std::optional<std::uint32_t> position(elem x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it == vertices.end() || *it != x) return std::nullopt;
    return static_cast<std::uint32_t>(it - vertices.begin());
  }
  std::vector<elem> component_members(std::uint32_t c) const {
    std::vector<elem> out;
    for (auto v : parts[c]) out.push_back(vertices[v]);
    return out;
  }
};

namespace detail {

inline void finish_components(CommGraph& g) {
  UnionFind uf(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v)
    for (auto w : g.adj[v]) uf.unite(v, w);
  std::map<std::size_t, std::uint32_t> ids;
  g.component.assign(g.size(), 0);
  g.parts.clear();
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    auto [it, fresh] = ids.emplace(uf.find(v), static_cast<std::uint32_t>(g.parts.size()));
    if (fresh) g.parts.emplace_back();
    g.component[v] = it->second;
    g.parts[it->second].push_back(v);
  }
}

}  // namespace detail

// Graph on any vertex set using the class-membership test of `cls`.
inline CommGraph gamma_graph_on(const GroupPtr& g, const ConjClass& cls, std::vector<elem> verts) {
  std::sort(verts.begin(), verts.end());
  CommGraph gr;
  gr.group = g;
  gr.vertices = std::move(verts);
  gr.adj.assign(gr.size(), {});
  for (std::uint32_t i = 0; i < gr.size(); ++i)
    for (std::uint32_t j = i + 1; j < gr.size(); ++j) {
      const elem x = gr.vertices[i], y = gr.vertices[j];
      if (!g->commute(x, y)) continue;
      if (cls.contains(g->mul(x, g->inv(y))) || cls.contains(g->mul(y, g->inv(x)))) {
        gr.adj[i].push_back(j);
        gr.adj[j].push_back(i);
      }
    }
  detail::finish_components(gr);
  return gr;
}

inline CommGraph gamma_graph(const GroupPtr& g, const ConjClass& cls) {
  if (cls.members.size() == 1 && cls.members[0] == 0)
    throw error(errc::precondition_violated, "the identity class carries no graph");
  return gamma_graph_on(g, cls, cls.members);
}

// Induced subgraph on the vertices lying in s.
inline CommGraph induced_subgraph(const CommGraph& gr, const std::vector<elem>& s) {
  std::vector<std::uint32_t> keep;
  for (elem x : s)
    if (auto p = gr.position(x)) keep.push_back(*p);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> renum(gr.size(), -1);
  CommGraph out;
  out.group = gr.group;
  for (std::uint32_t i = 0; i < keep.size(); ++i) {
    renum[keep[i]] = i;
    out.vertices.push_back(gr.vertices[keep[i]]);
  }
  out.adj.assign(keep.size(), {});
  for (std::uint32_t i = 0; i < keep.size(); ++i)
    for (auto w : gr.adj[keep[i]])
      if (renum[w] >= 0) out.adj[i].push_back(static_cast<std::uint32_t>(renum[w]));
  detail::finish_components(out);
  return out;
}

inline SimpleGraph as_simple(const CommGraph& gr) { return SimpleGraph{gr.adj}; }

inline Subgroup component_group(const CommGraph& gr, elem x) {
  auto p = gr.position(x);
  if (!p) throw error(errc::precondition_violated, "element is not a vertex of the graph");
  return generate(gr.group, gr.component_members(gr.component[*p]), "component group");
}

struct EdgeProfile {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<std::size_t> component_sizes;  // descending
};

inline EdgeProfile edge_count_profile(const CommGraph& gr) {
  EdgeProfile e;
  e.vertices = gr.size();
  e.edges = gr.edge_count();
  for (const auto& a : gr.adj) ++e.degree_histogram[a.size()];
  for (const auto& p : gr.parts) e.component_sizes.push_back(p.size());
  std::sort(e.component_sizes.rbegin(), e.component_sizes.rend());
  return e;
}

inline std::string to_dot(const CommGraph& gr, const std::string& name = "gamma") {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"};
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::uint32_t v = 0; v < gr.size(); ++v) {
    const elem x = gr.vertices[v];
    os << "  v" << x << " [label=\"" << x << " (o" << gr.group->element_order(x) << ")\", color="
       << palette[gr.component[v] % 8] << "];\n";
  }
  for (std::uint32_t v = 0; v < gr.size(); ++v)
    for (auto w : gr.adj[v])
      if (v < w) os << "  v" << gr.vertices[v] << " -- v" << gr.vertices[w] << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Strongly embedded subgroups

inline bool is_strongly_embedded(const Subgroup& n) {
  const auto& g = n.group;
  if (n.order() % 2 == 1) throw error(errc::precondition_violated, "N has odd order");
  if (n.order() == g->order()) throw error(errc::precondition_violated, "N is the whole group");
  // |N cap N^g| depends only on the coset Ng
  std::vector<char> done(g->order(), 0);
  for (elem x : n.members) done[x] = 1;
  for (elem t = 0; t < g->order(); ++t) {
    if (done[t]) continue;
    for (elem y : n.members) done[g->mul(y, t)] = 1;
    if (intersect(n, conjugate(n, t)).order() % 2 == 0) return false;
  }
  return true;
}

// Setwise stabilizer of a vertex set under conjugation.
inline Subgroup setwise_normalizer(const GroupPtr& g, std::vector<elem> set, std::string label = {}) {
  std::sort(set.begin(), set.end());
  std::vector<char> in(g->order(), 0);
  for (elem x : set) in[x] = 1;
  std::vector<elem> keep;
  for (elem t = 0; t < g->order(); ++t) {
    bool ok = true;
    for (elem x : set)
      if (!in[g->conj(x, t)]) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(t);
  }
  return subgroup_from_members(g, std::move(keep), std::move(label));
}

inline std::vector<std::size_t> involution_classes(const std::vector<ConjClass>& cls) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i].element_order == 2) out.push_back(i);
  return out;
}

struct DichotomyReport {
  bool connected = false;
  std::size_t components = 0;
  std::size_t component_size = 0;
  std::size_t normalizer_order = 0;           // setwise stabilizer of one component
  std::size_t group_normalizer_order = 0;     // normalizer of its component group
  bool readings_agree = true;
  bool strongly_embedded = false;
  bool sylow2_normalizer_strongly_embedded = false;
  bool exactly_one_branch = false;
  std::string branch;
};

// Either the involution graph is connected, or the normalizer of a component
// is strongly embedded.
inline DichotomyReport check_aschbacher_dichotomy(const GroupPtr& g) {
  auto cls = conjugacy_classes(g);
  auto inv = involution_classes(cls);
  if (inv.size() != 1)
    throw error(errc::multiple_involution_classes,
                std::to_string(inv.size()) + " classes of involutions in " + g->label());
  auto gr = gamma_graph(g, cls[inv[0]]);
  DichotomyReport r;
  r.connected = gr.connected();
  r.components = gr.parts.size();
  r.component_size = gr.parts[0].size();
  auto X = gr.component_members(0);
  auto N = setwise_normalizer(g, X, "N(X)");
  auto NX = normalizer(generate(g, X));
  r.normalizer_order = N.order();
  r.group_normalizer_order = NX.order();
  r.readings_agree = N.members == NX.members;
  if (!r.connected) r.strongly_embedded = is_strongly_embedded(N);
  auto S = sylow(g, 2);
  auto NS = normalizer(S);
  if (NS.order() < g->order()) r.sylow2_normalizer_strongly_embedded = is_strongly_embedded(NS);
  // a strongly embedded subgroup forces a disconnected involution graph
  r.exactly_one_branch = r.connected ? !r.sylow2_normalizer_strongly_embedded : r.strongly_embedded;
  r.branch = r.connected ? "connected" : "strongly embedded";
  return r;
}

// ---------------------------------------------------------------------------
// Component groups inside a point stabilizer

// Points of (G:H) fixed by x: |C_G(x)| |x^G cap H| / |H|.
inline std::size_t fixity(const Subgroup& h, const ConjClass& c) {
  const auto& g = h.group;
  std::size_t meet = 0;
  for (elem x : c.members) meet += h.contains(x);
  return (g->order() / c.size()) * meet / h.order();
}

struct ComponentReport {
  bool applicable = false;  // action binary and p divides |H|
  verdict action = verdict::unknown;
  std::vector<std::size_t> classes;  // classes of maximal p-fixity
  std::size_t max_fixity = 0;
  std::size_t checked = 0;
  bool contained = true;
  std::optional<elem> violation;
  std::vector<std::size_t> component_group_orders;
};

inline ComponentReport check_component_in_stabilizer(const Subgroup& h, std::uint32_t p, DecideOptions opt = {}) {
  const auto& g = h.group;
  ComponentReport r;
  r.action = decide_binary(h, opt).status;
  r.applicable = r.action == verdict::binary && h.order() % p == 0;
  if (!r.applicable) return r;
  auto cls = conjugacy_classes(g);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].element_order == 1 || !is_p_power(cls[i].element_order, p)) continue;
    const auto f = fixity(h, cls[i]);
    if (f > r.max_fixity) {
      r.max_fixity = f;
      r.classes.clear();
    }
    if (f == r.max_fixity) r.classes.push_back(i);
  }
  for (auto ci : r.classes) {
    auto gr = gamma_graph(g, cls[ci]);
    std::map<std::uint32_t, Subgroup> cache;
    for (elem x : cls[ci].members) {
      if (!h.contains(x)) continue;
      const auto comp = gr.component[*gr.position(x)];
      auto it = cache.find(comp);
      if (it == cache.end()) {
        it = cache.emplace(comp, generate(g, gr.component_members(comp))).first;
        r.component_group_orders.push_back(it->second.order());
      }
      ++r.checked;
      if (!is_subset(it->second, h)) {
        r.contained = false;
        if (!r.violation) r.violation = x;
      }
    }
  }
  return r;
}

}  // namespace gba
