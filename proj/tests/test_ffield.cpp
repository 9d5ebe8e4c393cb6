#include <gtest/gtest.h>

#include <set>

#include "gba/ffield.hpp"
#include "gba/error.hpp"

using namespace gba;

namespace {
const std::vector<std::uint32_t> orders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};
}

TEST(Field, PrimeFieldMatchesIntegersModP) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto f = make_field_of_order(p);
    for (long long x = 0; x < p; ++x)
      for (long long y = 0; y < p; ++y) {
        EXPECT_EQ(f->add(f->from_int(x), f->from_int(y)), f->from_int((x + y) % p));
        EXPECT_EQ(f->mul(f->from_int(x), f->from_int(y)), f->from_int((x * y) % p));
      }
  }
}

TEST(Field, Axioms) {
  for (auto q : orders) {
    auto f = make_field_of_order(q);
    ASSERT_EQ(f->order(), q);
    for (felem x = 0; x < q; ++x) {
      EXPECT_EQ(f->add(x, f->neg(x)), 0u);
      if (x) EXPECT_EQ(f->mul(x, f->inv(x)), 1u);
      for (felem y = 0; y < q; ++y) {
        EXPECT_EQ(f->add(x, y), f->add(y, x));
        EXPECT_EQ(f->mul(x, y), f->mul(y, x));
        EXPECT_EQ(f->sub(f->add(x, y), y), x);
      }
    }
    // distributivity on a sample
    for (felem x = 0; x < q; x += 1 + q / 8)
      for (felem y = 0; y < q; y += 1 + q / 8)
        for (felem z = 0; z < q; z += 1 + q / 8) EXPECT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
  }
}

TEST(Field, CharacteristicTwoAdditionIsXor) {
  for (std::uint32_t q : {4u, 8u, 16u, 32u, 64u}) {
    auto f = make_field_of_order(q);
    for (felem x = 0; x < q; ++x)
      for (felem y = 0; y < q; ++y) EXPECT_EQ(f->add(x, y), x ^ y);
  }
}

TEST(Field, MultiplicativeGroupIsCyclic) {
  for (auto q : orders) {
    auto f = make_field_of_order(q);
    std::set<felem> seen;
    for (std::uint64_t k = 0; k + 1 < q; ++k) seen.insert(f->exp(k));
    EXPECT_EQ(seen.size(), q - 1);
    EXPECT_EQ(f->element_order(f->generator()), q - 1);
    for (felem x = 1; x < q; ++x) EXPECT_EQ(f->exp(f->log(x)), x);
  }
}

TEST(Field, FrobeniusIsAdditiveAndFixesPrimeField) {
  for (auto q : orders) {
    auto f = make_field_of_order(q);
    const int p = f->characteristic();
    for (felem x = 0; x < q; ++x) {
      EXPECT_EQ(f->frobenius(x, 1), f->pow(x, p));
      EXPECT_EQ(f->frobenius(x, f->degree()), x);
      for (felem y = 0; y < q; y += 3) EXPECT_EQ(f->frobenius(f->add(x, y), 1), f->add(f->frobenius(x, 1), f->frobenius(y, 1)));
    }
    for (long long k = 0; k < p; ++k) EXPECT_EQ(f->frobenius(f->from_int(k), 1), f->from_int(k));
  }
}

TEST(Field, SquaresAndSquareRoots) {
  for (auto q : orders) {
    auto f = make_field_of_order(q);
    std::set<felem> sq;
    for (felem x = 1; x < q; ++x) sq.insert(f->mul(x, x));
    EXPECT_EQ(sq.size(), q % 2 ? (q - 1) / 2 : q - 1);
    for (felem x = 0; x < q; ++x) {
      EXPECT_EQ(f->is_square(x), x == 0 || sq.count(x) == 1);
      if (auto r = f->sqrt(x)) EXPECT_EQ(f->mul(*r, *r), x);
    }
  }
}

TEST(Field, TraceIsSurjectiveOntoPrimeField) {
  for (auto q : orders) {
    auto f = make_field_of_order(q);
    std::map<felem, std::size_t> hist;
    for (felem x = 0; x < q; ++x) ++hist[f->trace(x)];
    EXPECT_EQ(hist.size(), static_cast<std::size_t>(f->characteristic()));
    for (auto [t, n] : hist) EXPECT_EQ(n, q / f->characteristic());
  }
}

TEST(Field, SuzukiThetaSquaresToFrobenius) {
  for (int a : {1, 2}) {
    auto f = make_field(2, 2 * a + 1);
    for (felem x = 0; x < f->order(); ++x) EXPECT_EQ(suzuki_theta(*f, suzuki_theta(*f, x, a), a), f->mul(x, x));
  }
}

TEST(Field, RejectsNonPrimePowers) {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u, 15u}) EXPECT_THROW(make_field_of_order(q), error);
}

TEST(Field, PrimeUtilities) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(997));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_power(243), (std::optional<std::pair<int, int>>{{3, 5}}));
  EXPECT_FALSE(prime_power(12).has_value());
}

TEST(Field, MixingFieldsThrows) {
  auto f = make_field_of_order(4), g = make_field_of_order(8);
  EXPECT_THROW((void)(FieldElem(f, 1) + FieldElem(g, 1)), error);
  EXPECT_EQ(FieldElem(f, 2) * FieldElem(f, 2).inv(), FieldElem(f, 1));
}
