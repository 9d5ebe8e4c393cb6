#include <gtest/gtest.h>

#include "gba/fieldgraphs.hpp"

using namespace gba;

namespace {

// x with x and x+1 both nonzero squares mod p
std::size_t consecutive_mod_p(std::uint32_t p) {
  std::vector<char> sq(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) sq[x * x % p] = 1;
  std::size_t n = 0;
  for (std::uint32_t x = 1; x + 1 < p; ++x) n += sq[x] && sq[x + 1];
  return n;
}

}  // namespace

TEST(FieldGraphs, ConsecutiveSquaresAgainstIntegers) {
  for (std::uint32_t p = 3; p < 1000; p += 2)
    if (is_prime(p)) EXPECT_EQ(consecutive_squares_count(p), consecutive_mod_p(p)) << p;
}

TEST(FieldGraphs, ConsecutiveSquaresFormula) {
  for (std::uint32_t q : {9u, 25u, 27u, 49u, 81u, 121u, 125u, 243u, 343u, 729u}) {
    auto r = consecutive_squares(q);
    EXPECT_TRUE(r.matches) << q;
    EXPECT_EQ(r.members.size(), q % 4 == 1 ? (q - 5) / 4 : (q - 3) / 4);
  }
  EXPECT_THROW(consecutive_squares(8), error);
}

TEST(FieldGraphs, SquareMap) {
  for (std::uint32_t q : {13u, 17u, 29u, 37u, 41u}) {
    auto r = square_map_check(q);
    EXPECT_TRUE(r.onto) << q;
    EXPECT_TRUE(r.four_to_one) << q;
  }
}

TEST(FieldGraphs, SquareGraphExceptionalAtNine) {
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 17u, 25u}) {
    auto r = square_graph_analysis(q);
    EXPECT_EQ(r.exceptional, q == 9) << q;
    EXPECT_TRUE(r.at_most_two_components) << q;
  }
  EXPECT_EQ(square_graph_analysis(9).component_span, 3u);
}

TEST(FieldGraphs, CubesGraph) {
  for (std::uint32_t q : {8u, 32u}) {
    auto r = cube_graph_analysis(q);
    EXPECT_TRUE(r.connected) << q;
    EXPECT_TRUE(r.span_full) << q;
    EXPECT_EQ(r.cubes, (static_cast<std::size_t>(q) * q - 1) / 3);
  }
}

TEST(FieldGraphs, Gf2Rank) {
  EXPECT_EQ(detail::gf2_rank({1, 2, 3}), 2u);
  EXPECT_EQ(detail::gf2_rank({1, 2, 4, 8}), 4u);
  EXPECT_EQ(detail::gf2_rank({}), 0u);
}

TEST(FieldGraphs, StarEquationSolvability) {
  for (std::uint32_t q : {4u, 16u, 64u}) EXPECT_TRUE(solve_star_equation(q).solvable) << q;
  for (std::uint32_t q : {8u, 32u, 128u}) EXPECT_FALSE(solve_star_equation(q).solvable) << q;
  for (std::uint32_t q : {5u, 7u, 11u, 13u}) EXPECT_TRUE(solve_star_equation(q).solvable) << q;
}

TEST(FieldGraphs, CsvRows) {
  EXPECT_FALSE(csv_header().empty());
  EXPECT_EQ(csv_row(13).rfind("13,", 0), 0u);
}
