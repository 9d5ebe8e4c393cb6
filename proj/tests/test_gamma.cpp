#include <gtest/gtest.h>

#include "gba/families.hpp"
#include "gba/gamma.hpp"

using namespace gba;

namespace {

CommGraph involution_graph(const GroupPtr& g) {
  auto cls = conjugacy_classes(g);
  return gamma_graph(g, cls[involution_classes(cls).at(0)]);
}

}  // namespace

TEST(Gamma, A5InvolutionGraph) {
  auto gr = involution_graph(build_psl2(4));
  auto e = edge_count_profile(gr);
  EXPECT_EQ(e.vertices, 15u);
  EXPECT_EQ(e.edges, 15u);
  EXPECT_EQ(e.component_sizes, (std::vector<std::size_t>{3, 3, 3, 3, 3}));
  EXPECT_EQ(component_group(gr, gr.vertices.front()).order(), 4u);
}

TEST(Gamma, EdgesAreCommutingPairs) {
  auto g = build_psl2(9);
  auto gr = involution_graph(g);
  for (std::uint32_t i = 0; i < gr.size(); ++i)
    for (std::uint32_t j = i + 1; j < gr.size(); ++j) {
      const bool edge = std::find(gr.adj[i].begin(), gr.adj[i].end(), j) != gr.adj[i].end();
      EXPECT_EQ(edge, g->commute(gr.vertices[i], gr.vertices[j]));
    }
}

TEST(Gamma, EvenQComponentsAreSylowSubgroups) {
  for (std::uint32_t q : {4u, 8u, 16u}) {
    auto g = build_psl2(q);
    auto gr = involution_graph(g);
    EXPECT_EQ(gr.parts.size(), q + 1u);
    for (const auto& part : gr.parts) EXPECT_EQ(part.size(), q - 1u);
    auto c = component_group(gr, gr.vertices.front());
    EXPECT_EQ(c.order(), q);
    EXPECT_TRUE(is_strongly_embedded(normalizer(c)));
  }
}

TEST(Gamma, StronglyEmbedded) {
  EXPECT_TRUE(is_strongly_embedded(normalizer(sylow(build_sz(8), 2))));
  EXPECT_FALSE(is_strongly_embedded(normalizer(sylow(build_psl2(7), 2))));
  EXPECT_THROW(is_strongly_embedded(whole_group(build_psl2(8))), error);
}

TEST(Gamma, Dichotomy) {
  for (std::uint32_t q : {4u, 7u, 8u, 9u, 11u}) {
    auto d = check_aschbacher_dichotomy(build_psl2(q));
    EXPECT_TRUE(d.exactly_one_branch) << q;
    EXPECT_EQ(d.connected, q % 2 == 1) << q;
    EXPECT_EQ(d.strongly_embedded, q % 2 == 0) << q;
    EXPECT_TRUE(d.readings_agree);
  }
  auto sz = check_aschbacher_dichotomy(build_sz(8));
  EXPECT_FALSE(sz.connected);
  EXPECT_TRUE(sz.strongly_embedded);
  EXPECT_EQ(sz.components, 65u);
}

TEST(Gamma, ComponentInStabilizer) {
  auto g = build_psl2(8);
  auto r = check_component_in_stabilizer(sylow(g, 2), 2);
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.action, verdict::binary);
  EXPECT_TRUE(r.contained);
  EXPECT_GE(r.checked, 1u);
}

TEST(Gamma, FixityCountsFixedPoints) {
  auto g = build_psl2(7);
  auto h = named_subgroup(g, "borel");
  auto cls = conjugacy_classes(g);
  CosetAction a(h);
  for (const auto& c : cls) {
    std::size_t fixed = 0;
    for (pt w = 0; w < a.size(); ++w) fixed += a.image(w, c.representative) == w;
    EXPECT_EQ(fixity(h, c), fixed);
  }
}

TEST(Gamma, DotOutput) {
  auto dot = to_dot(involution_graph(build_psl2(4)), "a5");
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_EQ(dot.find("digraph"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}
