#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "twopack/mis.hpp"
#include "twopack/oracle.hpp"

namespace twopack {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

const Deadline kGenerous = Deadline::after_seconds(30.0);

TEST(ExactMis, SmallSquares) {
  auto k3 = exact_mis(square(complete(3)), kGenerous);
  EXPECT_EQ(k3.size, 1u);
  EXPECT_TRUE(k3.proven_optimal);

  const auto sq5 = square(path(5));
  auto p5 = exact_mis(sq5, kGenerous);
  EXPECT_EQ(p5.size, 2u);
  EXPECT_TRUE(p5.proven_optimal);
  EXPECT_TRUE(sq5.is_independent(p5.set));

  const auto sq9 = square(cycle(9));
  auto c9 = exact_mis(sq9, kGenerous);
  EXPECT_EQ(c9.size, 3u);
  EXPECT_TRUE(c9.proven_optimal);
  EXPECT_EQ(oracle::brute_beta(cycle(9)).size, 3u);
}

TEST(ExactMis, EmptyDeadlineReturnsNothing) {
  auto r = exact_mis(square(path(5)), Deadline::after_seconds(0.0));
  EXPECT_TRUE(r.set.empty());
  EXPECT_FALSE(r.proven_optimal);
  auto r2 = exact_mis(square(path(5)), Deadline::nodes(0));
  EXPECT_FALSE(r2.proven_optimal);
}

TEST(ExactMis, EmptyGraph) {
  auto r = exact_mis(StaticGraph{}, kGenerous);
  EXPECT_EQ(r.size, 0u);
  EXPECT_TRUE(r.proven_optimal);
}

TEST(ExactMis, MatchesBruteForceUpToSixteen) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 16)(rng);
    const auto g = testing::gnp(n, std::uniform_real_distribution<double>(0.05, 0.7)(rng), rng);
    const auto r = exact_mis(g, kGenerous);
    ASSERT_TRUE(r.proven_optimal);
    ASSERT_EQ(r.size, oracle::brute_alpha(g)) << "trial " << trial;
    ASSERT_EQ(r.size, r.set.size());
    for (std::size_t i = 0; i < r.set.size(); ++i)
      for (std::size_t j = i + 1; j < r.set.size(); ++j) ASSERT_FALSE(g.adjacent(r.set[i], r.set[j]));
  }
}

TEST(ExactMis, IncumbentIsMonotone) {
  std::mt19937_64 rng(17);
  const auto g = testing::gnp(60, 0.1, rng);
  std::vector<std::size_t> sizes;
  auto r = exact_mis(g, kGenerous, [&](std::size_t s, Seconds) { sizes.push_back(s); });
  ASSERT_FALSE(sizes.empty());
  EXPECT_TRUE(std::is_sorted(sizes.begin(), sizes.end()));
  EXPECT_EQ(sizes.back(), r.size);
}

TEST(ExactMis, NodeBudgetIsReproducible) {
  std::mt19937_64 rng(23);
  const auto g = testing::gnp(120, 0.05, rng);
  const auto a = exact_mis(g, Deadline::nodes(50));
  const auto b = exact_mis(g, Deadline::nodes(50));
  EXPECT_EQ(a.set, b.set);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(HeuristicMis, Examples) {
  auto empty = heuristic_mis(StaticGraph{}, Deadline::nodes(10), 0);
  EXPECT_EQ(empty.size, 0u);
  EXPECT_TRUE(empty.proven_optimal);

  auto c6 = heuristic_mis(square(cycle(6)), Deadline::nodes(200), 0);
  EXPECT_EQ(c6.size, 2u);
}

bool is_maximal_independent(const StaticGraph& g, const std::vector<Vertex>& s) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (in[u]) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in[v]) continue;
    bool blocked = false;
    for (Vertex u : g.neighbors(v)) blocked = blocked || in[u];
    if (!blocked) return false;
  }
  return true;
}

TEST(HeuristicMis, NeverBeatsExactAndIsMaximal) {
  std::mt19937_64 rng(31);
  int equal = 0;
  int total = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto sq = square(testing::gnp(12, 0.3, rng));
    const auto exact = exact_mis(sq, kGenerous);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto h = heuristic_mis(sq, Deadline::nodes(100), seed);
      ASSERT_LE(h.size, exact.size);
      ASSERT_TRUE(is_maximal_independent(sq.graph(), h.set));
      equal += h.size == exact.size;
      ++total;
    }
  }
  std::cout << "heuristic matched exact on " << equal << "/" << total << " runs\n";
  EXPECT_GT(equal, total * 9 / 10);
}

TEST(HeuristicMis, SameSeedSameResult) {
  std::mt19937_64 rng(41);
  const auto g = testing::gnp(200, 0.03, rng);
  const auto a = heuristic_mis(g, Deadline::nodes(300), 9);
  const auto b = heuristic_mis(g, Deadline::nodes(300), 9);
  EXPECT_EQ(a.set, b.set);
}

TEST(SwapState, TwoImprovementAddsExactlyOne) {
  // Star: greedy picking the center gives size 1; one swap yields two leaves.
  const auto g = testing::star(4);
  detail::SwapState s(g);
  s.add(0);
  const auto before = s.size();
  ASSERT_TRUE(s.try_two_improvement());
  EXPECT_EQ(s.size(), before + 1);
  const auto members = s.sorted_members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) EXPECT_FALSE(g.adjacent(members[i], members[j]));
}

TEST(SwapState, RandomSwapsPreserveIndependence) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::gnp(30, 0.15, rng);
    detail::SwapState s(g);
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    s.make_maximal(order);
    while (true) {
      const auto before = s.size();
      if (!s.try_two_improvement()) break;
      ASSERT_EQ(s.size(), before + 1);
      const auto m = s.sorted_members();
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) ASSERT_FALSE(g.adjacent(m[i], m[j]));
      s.make_maximal(order);
    }
  }
}

TEST(CliqueCover, BoundsIndependenceNumber) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::gnp(14, 0.3, rng);
    EXPECT_GE(detail::greedy_clique_cover(g), oracle::brute_alpha(g));
  }
}

}  // namespace
}  // namespace twopack
