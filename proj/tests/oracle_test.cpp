#include <gtest/gtest.h>

#include "test_support.hpp"
#include "twopack/oracle.hpp"

namespace twopack {
namespace {

using namespace twopack::testing;

TEST(Oracle, BruteBeta) {
  EXPECT_EQ(oracle::brute_beta(path(5)).size, 2u);
  const auto c9 = oracle::brute_beta(cycle(9));
  EXPECT_EQ(c9.size, 3u);
  EXPECT_EQ(c9.witness, (std::vector<Vertex>{0, 3, 6}));
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_EQ(oracle::brute_beta(star(k)).size, 1u);
}

TEST(Oracle, BruteSquare) {
  EXPECT_EQ(oracle::brute_square(cycle(5)).graph(), complete(5));
  EXPECT_EQ(oracle::brute_square(path(3)).graph(), complete(3));
  const auto two_edges = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(oracle::brute_square(two_edges).graph(), two_edges);
}

TEST(Oracle, BruteAlpha) {
  EXPECT_EQ(oracle::brute_alpha(complete(3)), 1u);
  EXPECT_EQ(oracle::brute_alpha(cycle(6)), 3u);
  EXPECT_EQ(oracle::brute_alpha(path(5)), 3u);
  EXPECT_EQ(oracle::brute_alpha(StaticGraph{}), 0u);
}

TEST(Oracle, RefusesLargeInputs) {
  EXPECT_THROW(oracle::brute_beta(path(21)), OracleLimitError);
  EXPECT_THROW(oracle::brute_alpha(path(21)), OracleLimitError);
  EXPECT_THROW(oracle::brute_square(path(21)), OracleLimitError);
  EXPECT_NO_THROW(oracle::brute_beta(path(21), {.max_n = 24}));
}

TEST(Oracle, BetaIsAlphaOfSquare) {
  for (const auto& item : property_corpus()) {
    EXPECT_EQ(oracle::brute_beta(item.graph).size, oracle::brute_alpha(oracle::brute_square(item.graph).graph()))
        << item.name;
  }
}

}  // namespace
}  // namespace twopack
