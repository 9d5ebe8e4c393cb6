#pragma once

// Plain undirected graphs on 0..n-1.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gba {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // smaller index becomes the root
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct SimpleGraph {
  std::vector<std::vector<std::uint32_t>> adj;

  std::size_t size() const noexcept { return adj.size(); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& a : adj) e += a.size();
    return e / 2;
  }
  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  }
  void add_edge(std::uint32_t u, std::uint32_t v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
};

// Component id per vertex, numbered by least vertex.
inline std::vector<std::uint32_t> components(const SimpleGraph& g, std::size_t* count = nullptr) {
  UnionFind uf(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v)
    for (auto w : g.adj[v]) uf.unite(v, w);
  std::vector<std::uint32_t> id(g.size()), root_id(g.size(), 0xffffffffu);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    auto r = uf.find(v);
    if (root_id[r] == 0xffffffffu) root_id[r] = next++;
    id[v] = root_id[r];
  }
  if (count) *count = next;
  return id;
}

inline std::vector<std::size_t> component_sizes(const SimpleGraph& g) {
  std::size_t n = 0;
  auto id = components(g, &n);
  std::vector<std::size_t> sz(n, 0);
  for (auto c : id) ++sz[c];
  std::sort(sz.rbegin(), sz.rend());
  return sz;
}

// Backtracking isomorphism test; meant for graphs of a few dozen vertices.
inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const SimpleGraph& g) {
    std::vector<std::size_t> d;
    for (const auto& x : g.adj) d.push_back(x.size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  std::vector<std::vector<char>> mb(n, std::vector<char>(n, 0));
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto w : b.adj[v]) mb[v][w] = 1;
  std::vector<std::int64_t> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, std::uint32_t v) -> bool {
    if (v == n) return true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (used[c] || a.adj[v].size() != b.adj[c].size()) continue;
      bool ok = true;
      for (std::uint32_t u = 0; u < v && ok; ++u) {
        const bool ea = std::find(a.adj[v].begin(), a.adj[v].end(), u) != a.adj[v].end();
        ok = ea == static_cast<bool>(mb[c][map[u]]);
      }
      if (!ok) continue;
      map[v] = c;
      used[c] = 1;
      if (self(self, v + 1)) return true;
      used[c] = 0;
    }
    map[v] = -1;
    return false;
  };
  return extend(extend, 0);
}

}  // namespace gba
