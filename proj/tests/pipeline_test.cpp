#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "twopack/oracle.hpp"
#include "twopack/pipeline.hpp"
#include "twopack/verify.hpp"

namespace twopack {
namespace {

using namespace twopack::testing;

SolverConfig config(ReductionVariant variant, SolverMode mode = SolverMode::Exact) {
  SolverConfig cfg;
  cfg.variant = variant;
  cfg.mode = mode;
  cfg.time_limit = 30.0;
  cfg.verify = true;
  return cfg;
}

TEST(SolveM2S, PathSolvedByReductions) {
  const auto sol = solve_m2s(path(4), config(ReductionVariant::Elaborated));
  EXPECT_EQ(sol.size, 2u);
  EXPECT_TRUE(sol.proven_optimal);
  EXPECT_EQ(sol.kernel.n_square, 0u);
  EXPECT_EQ(sol.kernel.offset, 2u);
  EXPECT_EQ(sol.mis_size, 0u);
}

TEST(SolveM2S, CycleNeedsMisPhase) {
  for (auto v : {ReductionVariant::TwoPack, ReductionVariant::Core, ReductionVariant::Elaborated}) {
    const auto sol = solve_m2s(cycle(6), config(v));
    EXPECT_EQ(sol.size, 2u) << to_string(v);
    EXPECT_TRUE(sol.proven_optimal);
    EXPECT_EQ(sol.mis_size, 2u);
    EXPECT_EQ(sol.kernel.n_square, 6u);
  }
}

TEST(SolveM2S, EmptyGraph) {
  const auto sol = solve_m2s(StaticGraph{}, config(ReductionVariant::Elaborated));
  EXPECT_EQ(sol.size, 0u);
  EXPECT_TRUE(sol.proven_optimal);
}

TEST(SolveM2S, EdgeCapRaisesMemoryCap) {
  auto cfg = config(ReductionVariant::TwoPack);
  cfg.edge_cap = 5;
  try {
    solve_m2s(path(5), cfg);
    FAIL() << "expected MemoryCapError";
  } catch (const MemoryCapError& e) {
    EXPECT_EQ(e.partial().n_kernel, 5u);
    EXPECT_EQ(e.partial().m_kernel, 4u);
  }
}

TEST(SolveM2S, InvalidConfig) {
  auto cfg = config(ReductionVariant::Core);
  cfg.time_limit = 0.0;
  EXPECT_THROW(solve_m2s(path(3), cfg), ContractError);
  cfg.time_limit = 1.0;
  cfg.edge_cap = 0;
  EXPECT_THROW(solve_m2s(path(3), cfg), ContractError);
}

TEST(SolveM2S, TimeoutIsReported) {
  std::mt19937_64 rng(1);
  auto cfg = config(ReductionVariant::TwoPack);
  cfg.node_budget = 1;
  const auto g = gnp(400, 0.01, rng);
  const auto sol = solve_m2s(g, cfg);
  EXPECT_FALSE(sol.proven_optimal);
  EXPECT_TRUE(sol.timed_out);
  EXPECT_TRUE(verify_2ps(g, sol.vertices));
}

TEST(Verify2ps, Examples) {
  const std::vector<Vertex> ok{0, 3};
  const std::vector<Vertex> close{0, 2};
  EXPECT_TRUE(verify_2ps(path(5), ok));
  EXPECT_FALSE(verify_2ps(path(5), close));
  const std::vector<Vertex> leaves{1, 2};
  EXPECT_FALSE(verify_2ps(star(3), leaves));
  const std::vector<Vertex> out_of_range{7};
  EXPECT_THROW(verify_2ps(path(5), out_of_range), ContractError);
}

TEST(KernelRatios, Examples) {
  const auto empty = solve_m2s(path(4), config(ReductionVariant::Elaborated));
  EXPECT_EQ(kernel_ratios(path(4), empty), std::make_pair(0.0, 0.0));

  const auto raw = solve_m2s(path(5), config(ReductionVariant::TwoPack));
  const auto [n_ratio, m_ratio] = kernel_ratios(path(5), raw);
  EXPECT_DOUBLE_EQ(n_ratio, 100.0);
  EXPECT_DOUBLE_EQ(m_ratio, 175.0);
}

TEST(PipelineProperties, ExactnessAndAgreement) {
  for (const auto& item : property_corpus()) {
    const auto beta = oracle::brute_beta(item.graph).size;
    for (auto v : {ReductionVariant::TwoPack, ReductionVariant::Core, ReductionVariant::Elaborated}) {
      const auto exact = solve_m2s(item.graph, config(v));
      ASSERT_EQ(exact.size, beta) << item.name << " " << to_string(v);
      ASSERT_TRUE(exact.proven_optimal);
      ASSERT_EQ(exact.size, exact.kernel.offset + exact.mis_size);
      if (v == ReductionVariant::TwoPack) {
        EXPECT_DOUBLE_EQ(kernel_ratios(item.graph, exact).first, 100.0);
      }

      auto hcfg = config(v, SolverMode::Heuristic);
      hcfg.node_budget = 200;
      const auto heur = solve_m2s(item.graph, hcfg);
      ASSERT_TRUE(verify_2ps(item.graph, heur.vertices));
      ASSERT_LE(heur.size, exact.size) << item.name;
      ASSERT_EQ(heur.size, heur.kernel.offset + heur.mis_size);
    }
  }
}

}  // namespace
}  // namespace twopack
