#include <gtest/gtest.h>

#include <map>

#include "gba/families.hpp"
#include "gba/group.hpp"

using namespace gba;

namespace {

std::uint64_t class_count_psl2(std::uint32_t q) { return q % 2 ? (q + 5) / 2 : q + 1; }

std::multiset<std::size_t> class_sizes(const GroupPtr& g) {
  std::multiset<std::size_t> s;
  for (const auto& c : conjugacy_classes(g)) s.insert(c.size());
  return s;
}

}  // namespace

TEST(Groups, OrdersMatchFormulas) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const std::uint64_t sl = static_cast<std::uint64_t>(q) * (q * q - 1);
    EXPECT_EQ(build_sl2(q)->order(), sl) << q;
    EXPECT_EQ(build_psl2(q)->order(), sl / std::gcd(2u, q - 1)) << q;
  }
  EXPECT_EQ(build_sz(8)->order(), 29120u);
  EXPECT_EQ(build_psu3(3)->order(), 6048u);
  EXPECT_EQ(build_psu3(4)->order(), 62400u);
}

TEST(Groups, GroupAxiomsOnTables) {
  for (auto g : {build_psl2(7), build_sz(8)}) {
    const elem n = static_cast<elem>(g->order());
    for (elem a = 0; a < n; a += 97) {
      EXPECT_EQ(g->mul(a, g->inv(a)), g->identity());
      EXPECT_EQ(g->mul(g->identity(), a), a);
      EXPECT_EQ(g->pow(a, g->element_order(a)), g->identity());
      for (elem b = 0; b < n; b += 101)
        for (elem c = 0; c < n; c += 131) EXPECT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c)));
    }
  }
}

TEST(Groups, MatrixMultiplicationMatchesElementProduct) {
  auto g = build_sl2(5);
  const auto& f = *g->field();
  for (elem a = 0; a < g->order(); a += 7)
    for (elem b = 0; b < g->order(); b += 11) {
      auto m = mat_mul(f, g->matrix(a), g->matrix(b));
      EXPECT_EQ(g->find(m), std::optional<elem>(g->mul(a, b)));
      EXPECT_EQ(mat_det(f, m), 1u);
    }
}

TEST(Groups, ConjugacyClassCounts) {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) EXPECT_EQ(conjugacy_classes(build_psl2(q)).size(), class_count_psl2(q)) << q;
  EXPECT_EQ(conjugacy_classes(build_sz(8)).size(), 11u);
}

TEST(Groups, A5ModelsAgree) {
  auto a = class_sizes(build_a5_permutation());
  EXPECT_EQ(a, (std::multiset<std::size_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(class_sizes(build_psl2(4)), a);
  EXPECT_EQ(class_sizes(build_psl2(5)), a);
}

TEST(Groups, ClassesPartitionTheGroup) {
  auto g = build_psl2(11);
  std::size_t total = 0;
  for (const auto& c : conjugacy_classes(g)) {
    total += c.size();
    for (elem x : c.members) EXPECT_EQ(g->element_order(x), c.element_order);
  }
  EXPECT_EQ(total, g->order());
}

// Standard counts of subgroup classes.
TEST(Groups, SubgroupClassCounts) {
  const std::map<std::uint32_t, std::size_t> expect = {{4, 9}, {7, 15}, {8, 12}, {9, 22}, {11, 16}, {13, 16}};
  for (auto [q, n] : expect) EXPECT_EQ(subgroups_up_to_conjugacy(build_psl2(q)).size(), n) << q;
}

TEST(Groups, SylowAndNormalizers) {
  for (std::uint32_t q : {4u, 8u, 16u}) {
    auto g = build_psl2(q);
    auto s = sylow(g, 2);
    EXPECT_EQ(s.order(), q);
    EXPECT_EQ(normalizer(s).order(), static_cast<std::size_t>(q) * (q - 1));
    EXPECT_EQ(conjugate_subgroups(s).size(), q + 1);
  }
  auto sz = build_sz(8);
  auto p = sylow(sz, 2);
  EXPECT_EQ(p.order(), 64u);
  EXPECT_EQ(center(p).order(), 8u);
  EXPECT_EQ(conjugate_subgroups(p).size(), 65u);
}

TEST(Groups, NamedSubgroups) {
  auto g = build_psl2(7);
  EXPECT_EQ(named_subgroup(g, "borel").order(), 21u);
  EXPECT_EQ(named_subgroup(g, "unipotent").order(), 7u);
  EXPECT_EQ(named_subgroup(g, "torus").order(), 3u);
  auto sz = build_sz(8);
  EXPECT_EQ(named_subgroup(sz, "ZU2").order(), 8u);
  EXPECT_EQ(named_subgroup(sz, "borel").order(), 448u);
  auto u = build_psu3(4);
  EXPECT_EQ(named_subgroup(u, "P").order(), 64u);
  EXPECT_EQ(named_subgroup(u, "ZP").order(), 4u);
  EXPECT_EQ(named_subgroup(u, "L").order(), 60u);
}

TEST(Groups, SubgroupOperations) {
  auto g = build_psl2(8);
  auto s = sylow(g, 2);
  auto c = conjugate_subgroups(s);
  ASSERT_GE(c.size(), 2u);
  EXPECT_EQ(intersect(c[0], c[1]).order(), 1u);
  EXPECT_TRUE(is_subset(s, normalizer(s)));
  EXPECT_FALSE(is_normal(s));
  EXPECT_TRUE(is_normal(whole_group(g)));
  EXPECT_EQ(core(s).order(), 1u);
  auto b = normalizer(s);
  auto bg = as_group(b, "B");
  EXPECT_EQ(bg->order(), b.order());
  EXPECT_EQ(restrict_subgroup(bg, s).order(), s.order());
}

TEST(Groups, ClassProductCountMatchesBruteForce) {
  auto g = build_psl2(5);
  auto cls = conjugacy_classes(g);
  for (const auto& c : cls)
    for (const auto& d : cls) {
      const elem h = c.members.front();
      std::uint64_t n = 0;
      for (elem x : c.members)
        for (elem y : d.members) n += g->mul(x, y) == h;
      EXPECT_EQ(class_product_count(g, c, d, h), n);
    }
}

TEST(Groups, LabelsAndCaps) {
  EXPECT_EQ(parse_group_label("PSL2(9)")->order(), 360u);
  EXPECT_EQ(parse_group_label("Sz(8)")->order(), 29120u);
  EXPECT_THROW(parse_group_label("PGL2(9)"), error);
  try {
    build_psl2(64, 1000);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cap_exceeded);
  }
  EXPECT_THROW(build_sz(4), error);
  EXPECT_THROW(build_psl2(6), error);
}
