#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gba/action.hpp"
#include "gba/families.hpp"

using namespace gba;

namespace {

// Brute-force relational complexity over injective tuples, straight from the
// definition of k-relatedness.
struct Oracle {
  const CosetAction& a;
  std::vector<elem> group;

  explicit Oracle(const CosetAction& act) : a(act) {
    for (elem x = 0; x < act.group()->order(); ++x) group.push_back(x);
  }

  bool maps(const std::vector<pt>& I, const std::vector<pt>& J, const std::vector<std::size_t>& idx) const {
    for (elem g : group) {
      bool ok = true;
      for (auto i : idx)
        if (a.image(I[i], g) != J[i]) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }

  bool k_related(const std::vector<pt>& I, const std::vector<pt>& J, std::size_t k) const {
    const std::size_t n = I.size();
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(std::min(k, n)), pick.end(), 1);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) idx.push_back(i);
      if (!maps(I, J, idx)) return false;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return true;
  }

  std::size_t rc() const {
    const std::size_t n = a.size();
    std::size_t best = 2;
    for (std::size_t len = 3; len <= n; ++len) {
      std::vector<std::vector<pt>> tuples;
      std::vector<char> pick(n, 0);
      std::fill(pick.end() - static_cast<long>(len), pick.end(), 1);
      do {
        std::vector<pt> t;
        for (std::size_t i = 0; i < n; ++i)
          if (pick[i]) t.push_back(static_cast<pt>(i));
        do tuples.push_back(t);
        while (std::next_permutation(t.begin(), t.end()));
      } while (std::next_permutation(pick.begin(), pick.end()));
      for (const auto& I : tuples) {
        if (I[0] != 0) continue;  // relatedness is invariant under moving I or J alone
        for (const auto& J : tuples) {
          if (J[0] != 0 || maps(I, J, all_idx(len))) continue;
          std::size_t k = best;
          while (k < len && k_related(I, J, k)) ++k;
          best = std::max(best, k);
        }
      }
    }
    return best;
  }

  static std::vector<std::size_t> all_idx(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }
};

Subgroup by_order(const GroupPtr& g, std::size_t order) {
  for (auto& h : subgroups_up_to_conjugacy(g))
    if (h.order() == order) return h;
  throw std::runtime_error("no subgroup of that order");
}

}  // namespace

TEST(Action, CosetActionBasics) {
  auto g = build_psl2(7);
  auto h = named_subgroup(g, "borel");
  CosetAction a(h);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a.coset_of(0), 0u);
  for (elem x : h.members) EXPECT_EQ(a.image(0, x), 0u);
  for (elem x = 0; x < g->order(); x += 5)
    for (elem y = 0; y < g->order(); y += 7)
      for (pt w = 0; w < a.size(); ++w) EXPECT_EQ(a.image(a.image(w, x), y), a.image(w, g->mul(x, y)));
  std::size_t total = 0;
  for (std::uint32_t i = 0; i < a.suborbit_count(); ++i) total += a.suborbit_size(i);
  EXPECT_EQ(total, a.size());
  EXPECT_EQ(a.suborbit_count(), 2u);
}

TEST(Action, RelationalComplexityMatchesBruteForce) {
  struct Case {
    GroupPtr g;
    std::size_t order;
  };
  for (const auto& c : {Case{build_psl2(4), 12}, Case{build_psl2(5), 10}, Case{build_psl2(7), 24}}) {
    auto h = by_order(c.g, c.order);
    CosetAction a(h);
    Oracle o(a);
    auto rc = relational_complexity(a);
    ASSERT_TRUE(rc.has_value());
    EXPECT_EQ(*rc, o.rc()) << c.g->label() << " on " << a.size();
  }
}

TEST(Action, NaturalA5HasComplexityFour) {
  CosetAction a(by_order(build_psl2(4), 12));
  EXPECT_EQ(relational_complexity(a), std::optional<std::size_t>(4));
}

TEST(Action, RegularAndTinyActionsAreBinary) {
  auto g = build_psl2(7);
  EXPECT_EQ(decide_binary(trivial_subgroup(g)).status, verdict::binary);
  auto s3 = build_sl2(2);
  EXPECT_EQ(decide_binary(CosetAction(named_subgroup(s3, "borel"))).status, verdict::binary);
  CosetAction reg(trivial_subgroup(g));
  EXPECT_EQ(height(reg), 1u);
}

TEST(Action, WitnessesReplay) {
  auto g = build_psl2(7);
  for (const auto& h : subgroups_up_to_conjugacy(g)) {
    if (h.order() == g->order()) continue;
    CosetAction a(h);
    auto v = decide_binary(a);
    ASSERT_NE(v.status, verdict::unknown);
    if (v.witness) {
      EXPECT_TRUE(replay(a, *v.witness));
      EXPECT_TRUE(r_related(a, v.witness->I, v.witness->J, 2));
      EXPECT_FALSE(tuples_related(a, v.witness->I, v.witness->J));
    }
    if (v.triple) EXPECT_TRUE(replay(h, *v.triple));
    EXPECT_EQ(v.status == verdict::binary, h.order() == 1) << h.order();
  }
}

TEST(Action, TiCriterionAgreesWithSearch) {
  for (std::uint32_t q : {7u, 8u, 9u}) {
    auto g = build_psl2(q);
    for (const auto& h : subgroups_up_to_conjugacy(g)) {
      if (h.order() == 1 || is_normal(h) || !is_ti(h)) continue;
      DecideOptions plain;
      plain.use_ti = false;
      auto exhaustive = decide_binary(h, plain);
      auto triple = ti_triple_search(h);
      EXPECT_EQ(exhaustive.status == verdict::binary, !triple.has_value()) << g->label() << " " << h.order();
    }
  }
}

TEST(Action, TiDetection) {
  auto g = build_psl2(8);
  EXPECT_TRUE(is_ti(sylow(g, 2)));
  EXPECT_TRUE(is_ti(named_subgroup(build_sz(8), "ZU2")));
  EXPECT_FALSE(is_ti(normalizer(sylow(build_psl2(7), 2))));
}

TEST(Action, HeightBoundsComplexity) {
  auto g = build_psl2(5);
  for (const auto& h : subgroups_up_to_conjugacy(g)) {
    if (h.order() == g->order()) continue;
    CosetAction a(h);
    auto rc = relational_complexity(a);
    ASSERT_TRUE(rc);
    EXPECT_LE(*rc, height(a) + 1);
  }
}

TEST(Action, FrobeniusProfile) {
  auto g = build_psl2(7);
  auto b = as_group(named_subgroup(g, "borel"), "B");
  auto t = restrict_subgroup(b, named_subgroup(g, "torus"));
  EXPECT_EQ(frobenius_profile(CosetAction(t)), std::optional<std::size_t>(3));
  EXPECT_FALSE(frobenius_profile(CosetAction(trivial_subgroup(b))).has_value());
}

TEST(Action, OmegaCapRaises) {
  auto g = build_psl2(13);
  try {
    CosetAction a(trivial_subgroup(g), 100);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cap_exceeded);
  }
}
