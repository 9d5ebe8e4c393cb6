#pragma once

// Field-side graphs and equations: cubes of GF(q^2) for q = 2^(2a+1),
// nonzero squares of GF(q) for odd q, consecutive squares, and the
// order-3 product equation in SL2(q).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gba/error.hpp"
#include "gba/ffield.hpp"
#include "gba/graph.hpp"

namespace gba {

struct FieldGraph {
  FieldPtr field;
  std::vector<felem> vertices;  // sorted codes
  SimpleGraph graph;
};

inline std::string to_dot(const FieldGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (auto v : g.vertices) os << "  x" << v << " [label=\"" << v << "\"];\n";
  for (std::uint32_t i = 0; i < g.graph.size(); ++i)
    for (auto j : g.graph.adj[i])
      if (i < j) os << "  x" << g.vertices[i] << " -- x" << g.vertices[j] << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Cubes

struct CubeGraphReport {
  std::uint32_t q = 0;
  std::size_t cubes = 0;
  bool connected = false;
  std::vector<std::size_t> component_sizes;
  std::size_t span_dimension = 0;  // over GF(2)
  std::size_t field_dimension = 0;
  bool span_full = false;
  bool subfield_neighbours_of_one = false;  // every x in GF(q)* \ {1} is adjacent to 1
  FieldGraph graph;
};

namespace detail {

// Rank over GF(2) of element codes viewed as bit vectors.
inline std::size_t gf2_rank(std::vector<std::uint32_t> v) {
  std::size_t rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto piv = std::find_if(v.begin() + rank, v.end(), [&](std::uint32_t x) { return (x >> bit) & 1u; });
    if (piv == v.end()) continue;
    std::swap(*piv, v[rank]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != rank && ((v[i] >> bit) & 1u)) v[i] ^= v[rank];
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline CubeGraphReport cube_graph_analysis(std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp || pp->first != 2 || pp->second % 2 == 0)
    throw error(errc::wrong_field_shape, "q must be an odd power of 2, got " + std::to_string(q));
  if (static_cast<std::uint64_t>(q) * q > 4096) throw error(errc::cap_exceeded, "q^2 exceeds 4096");
  auto f = make_field(2, 2 * pp->second);
  CubeGraphReport r;
  r.q = q;
  auto cubes = power_residues(*f, 3);
  r.cubes = cubes.size();
  std::vector<char> is_cube(f->order(), 0);
  for (auto c : cubes) is_cube[c] = 1;
  FieldGraph g{f, cubes, SimpleGraph{}};
  g.graph.adj.assign(cubes.size(), {});
  for (std::uint32_t i = 0; i < cubes.size(); ++i)
    for (std::uint32_t j = i + 1; j < cubes.size(); ++j)
      if (is_cube[f->add(cubes[i], cubes[j])]) g.graph.add_edge(i, j);
  r.component_sizes = component_sizes(g.graph);
  r.connected = r.component_sizes.size() == 1;
  // characteristic 2: codes are coefficient bit vectors
  r.span_dimension = detail::gf2_rank(cubes);
  r.field_dimension = static_cast<std::size_t>(f->degree());
  r.span_full = r.span_dimension == r.field_dimension;
  r.subfield_neighbours_of_one = true;
  for (felem x : subfield_elements(*f, q)) {
    if (x == 0 || x == 1) continue;
    if (!is_cube[x] || !is_cube[f->add(x, 1)]) r.subfield_neighbours_of_one = false;
  }
  r.graph = std::move(g);
  return r;
}

// ---------------------------------------------------------------------------
// Squares

inline void require_odd(std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw error(errc::non_prime, std::to_string(q) + " is not a prime power");
  if (pp->first == 2) throw error(errc::even_q, "q must be odd");
}

inline std::vector<felem> nonzero_squares(const Field& f) { return power_residues(f, 2); }

inline std::size_t consecutive_squares_formula(std::uint32_t q) { return q % 4 == 1 ? (q - 5) / 4 : (q - 3) / 4; }

struct ConsecutiveSquares {
  std::uint32_t q = 0;
  std::vector<felem> members;  // x with x and x+1 nonzero squares
  std::size_t formula = 0;
  bool matches = false;
};

inline ConsecutiveSquares consecutive_squares(std::uint32_t q) {
  require_odd(q);
  auto f = make_field_of_order(q);
  ConsecutiveSquares r;
  r.q = q;
  for (felem x = 1; x < q; ++x) {
    const felem y = f->add(x, 1);
    if (y != 0 && f->is_square(x) && f->is_square(y)) r.members.push_back(x);
  }
  r.formula = consecutive_squares_formula(q);
  r.matches = r.members.size() == r.formula;
  return r;
}

inline std::size_t consecutive_squares_count(std::uint32_t q) {
  auto r = consecutive_squares(q);
  if (!r.matches)
    throw error(errc::spec_mismatch, "consecutive squares at q=" + std::to_string(q) + ": counted " +
                                         std::to_string(r.members.size()) + ", formula " + std::to_string(r.formula));
  return r.members.size();
}

// f(x) = ((x - 1/x)/2)^2 on GF(q) minus {0, +-1} and the square roots of -1.
struct SquareMapReport {
  std::size_t domain = 0;
  bool onto = false;
  bool four_to_one = false;
  std::map<std::size_t, std::size_t> fibre_sizes;  // fibre size -> number of targets
};

inline SquareMapReport square_map_check(std::uint32_t q) {
  require_odd(q);
  auto f = make_field_of_order(q);
  auto cs = consecutive_squares(q);
  std::vector<char> in_c(q, 0);
  for (auto x : cs.members) in_c[x] = 1;
  const felem half = f->inv(f->from_int(2));
  std::map<felem, std::size_t> fibres;
  SquareMapReport r;
  bool lands = true;
  for (felem x = 1; x < q; ++x) {
    const felem x2 = f->mul(x, x);
    if (x2 == 1 || x2 == f->neg(1)) continue;
    ++r.domain;
    const felem d = f->mul(f->sub(x, f->inv(x)), half);
    const felem img = f->mul(d, d);
    lands = lands && in_c[img];
    ++fibres[img];
  }
  for (auto& [k, v] : fibres) ++r.fibre_sizes[v];
  r.onto = lands && fibres.size() == cs.members.size();
  r.four_to_one = lands && r.fibre_sizes.size() == 1 && r.fibre_sizes.begin()->first == 4;
  if (cs.members.empty()) r.four_to_one = r.domain == 0;
  return r;
}

struct SquareGraphReport {
  std::uint32_t q = 0;
  std::size_t vertices = 0;
  std::vector<std::size_t> component_sizes;
  bool connected = false;
  bool regular = false;
  std::size_t degree = 0;
  std::optional<std::size_t> expected_degree;  // (q-5)/4 when q = 1 mod 4
  bool at_most_two_components = false;
  std::size_t component_span = 0;  // size of the additive group generated by the component of 1
  bool exceptional = false;        // that group is proper
  FieldGraph graph;
};

// Vertices are nonzero squares; x ~ y iff x - y or y - x is a nonzero square.
inline SquareGraphReport square_graph_analysis(std::uint32_t q) {
  require_odd(q);
  if (q > 4096) throw error(errc::cap_exceeded, "q exceeds 4096");
  auto f = make_field_of_order(q);
  auto sq = nonzero_squares(*f);
  SquareGraphReport r;
  r.q = q;
  r.vertices = sq.size();
  FieldGraph g{f, sq, SimpleGraph{}};
  g.graph.adj.assign(sq.size(), {});
  for (std::uint32_t i = 0; i < sq.size(); ++i)
    for (std::uint32_t j = i + 1; j < sq.size(); ++j) {
      const felem d = f->sub(sq[i], sq[j]);
      if (f->is_square(d) || f->is_square(f->neg(d))) g.graph.add_edge(i, j);
    }
  r.component_sizes = component_sizes(g.graph);
  r.connected = r.component_sizes.size() == 1;
  r.at_most_two_components = r.component_sizes.size() <= 2;
  r.degree = sq.empty() ? 0 : g.graph.adj[0].size();
  r.regular = std::all_of(g.graph.adj.begin(), g.graph.adj.end(), [&](const auto& a) { return a.size() == r.degree; });
  if (q % 4 == 1) r.expected_degree = (q - 5) / 4;
  // additive closure of the component containing 1 (sq[0] == 1)
  auto comp = components(g.graph);
  std::vector<char> in(q, 0);
  std::vector<felem> span{0};
  in[0] = 1;
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::uint32_t v = 0; v < sq.size(); ++v) {
      if (comp[v] != comp[0]) continue;
      const felem w = f->add(span[i], sq[v]);
      if (!in[w]) {
        in[w] = 1;
        span.push_back(w);
      }
    }
  r.component_span = span.size();
  r.exceptional = r.component_span < q;
  r.graph = std::move(g);
  return r;
}

// ---------------------------------------------------------------------------
// y^2 + (x+1) y + (x^2 + x + 1) = 0

struct StarSolution {
  std::uint32_t q = 0;
  bool characteristic_two = false;
  bool solvable = false;
  std::optional<felem> lambda;  // root of L^2 + L + 1, characteristic 2
  felem x = 0, y = 0, z = 0, t = 0;  // g2 = [[x,y],[z,t]] with t = -1-x, z = x+y+1
  std::string route;
  FieldPtr field;
};

inline felem star_value(const Field& f, felem x, felem y) {
  felem v = f.mul(y, y);
  v = f.add(v, f.mul(f.add(x, 1), y));
  return f.add(v, f.add(f.add(f.mul(x, x), x), 1));
}

inline StarSolution solve_star_equation(std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw error(errc::non_prime, std::to_string(q) + " is not a prime power");
  if (q < 3) throw error(errc::precondition_violated, "q must be at least 3");
  if (pp->first == 3) throw error(errc::not_applicable, "q is a power of 3");
  auto f = make_field_of_order(q);
  StarSolution s;
  s.q = q;
  s.field = f;
  auto fill = [&](felem x, felem y) {
    s.solvable = true;
    s.x = x;
    s.y = y;
    s.t = f->sub(f->neg(1), x);
    s.z = f->add(f->add(x, y), 1);
  };
  if (pp->first == 2) {
    s.characteristic_two = true;
    auto roots = solve_quadratic(*f, 1, 1);
    if (roots.empty()) {
      s.route = "no root of L^2+L+1";
      return s;
    }
    s.lambda = roots.front();
    // X = x+1 = 1, Y = y+1 = lambda
    fill(0, f->add(*s.lambda, 1));
    s.route = "L^2+L+1";
    return s;
  }
  auto roots = solve_quadratic(*f, 1, 1);
  if (!roots.empty()) {
    fill(0, roots.front());
    s.route = "x = 0";
    return s;
  }
  // nonzero zero of Q(X,Y,Z) = Y^2 + (X+Z)Y + X^2 + XZ + Z^2; Z = 0 is impossible here, so scale Z = 1
  for (felem x = 0; x < q && !s.solvable; ++x) {
    auto ys = solve_quadratic(*f, f->add(x, 1), f->add(f->add(f->mul(x, x), x), 1));
    if (!ys.empty()) fill(x, ys.front());
  }
  s.route = "quadratic form";
  if (!s.solvable) throw error(errc::no_solution_in_field, "no zero of Q with Z != 0");
  return s;
}

inline std::string csv_header() {
  return "q,cubes_connected,cubes_span_full,consecutive_squares,formula,square_graph_components,square_graph_degree,star_route";
}

// One row per q; fields that do not apply to q are left empty.
inline std::string csv_row(std::uint32_t q) {
  std::ostringstream os;
  os << q << ",";
  auto pp = prime_power(q);
  const bool cubes = pp && pp->first == 2 && pp->second % 2 == 1 && static_cast<std::uint64_t>(q) * q <= 4096;
  if (cubes) {
    auto c = cube_graph_analysis(q);
    os << (c.connected ? "true" : "false") << "," << (c.span_full ? "true" : "false") << ",";
  } else {
    os << ",,";
  }
  if (pp && pp->first != 2) {
    auto cs = consecutive_squares(q);
    auto sg = square_graph_analysis(q);
    os << cs.members.size() << "," << cs.formula << "," << sg.component_sizes.size() << "," << sg.degree << ",";
  } else {
    os << ",,,,";
  }
  if (pp && pp->first != 3 && q >= 3) os << solve_star_equation(q).route;
  return os.str();
}

}  // namespace gba
