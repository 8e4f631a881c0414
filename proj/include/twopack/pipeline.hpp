#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/mis.hpp"
#include "twopack/reductions.hpp"
#include "twopack/square_graph.hpp"
#include "twopack/static_graph.hpp"
#include "twopack/verify.hpp"

namespace twopack {

enum class SolverMode : std::uint8_t { Exact, Heuristic };

constexpr std::string_view to_string(SolverMode mode) {
  return mode == SolverMode::Exact ? "exact" : "heuristic";
}

struct SolverConfig {
  ReductionVariant variant = ReductionVariant::Elaborated;
  SolverMode mode = SolverMode::Exact;
  double time_limit = 600.0;  // seconds
  std::uint64_t seed = 0;
  std::size_t edge_cap = kDefaultEdgeCap;
  bool verify = false;
  // Replaces the wall-clock limit of the MIS phase with a search-node budget.
  std::optional<std::uint64_t> node_budget;

  void validate() const {
    if (!(time_limit > 0.0)) throw ContractError("time limit must be positive");
    if (edge_cap == 0) throw ContractError("edge cap must be positive");
  }
};

/// Sizes of the kernel and of its square, plus the reduction bookkeeping.
struct KernelReport {
  std::size_t n_kernel = 0;
  std::size_t m_kernel = 0;
  std::size_t m2_kernel = 0;
  std::size_t n_square = 0;
  std::size_t m_square = 0;
  std::size_t offset = 0;
  std::array<std::size_t, kNumReductionKinds> applications{};
};

struct PhaseTimings {
  Seconds reduce{0.0};
  Seconds transform{0.0};
  Seconds solve{0.0};
  Seconds total{0.0};
  Seconds find{0.0};  // total time until the final solution was first found
};

struct Solution {
  std::vector<Vertex> vertices;  // sorted input-graph IDs
  std::size_t size = 0;
  std::size_t mis_size = 0;
  bool proven_optimal = false;
  bool timed_out = false;
  KernelReport kernel;
  PhaseTimings timings;
};

/// The square graph would exceed the configured edge cap. Carries the
/// kernel statistics gathered up to that point.
class MemoryCapError : public std::runtime_error {
 public:
  MemoryCapError(const std::string& what, KernelReport partial)
      : std::runtime_error(what), partial_(partial) {}
  const KernelReport& partial() const noexcept { return partial_; }

 private:
  KernelReport partial_;
};

namespace detail {

inline KernelReport report_of(const Kernel& k) {
  KernelReport r;
  r.n_kernel = k.stats.n;
  r.m_kernel = k.stats.m;
  r.m2_kernel = k.stats.m2;
  r.offset = k.log.offset();
  r.applications = k.stats.applications;
  return r;
}

struct Prepared {
  Kernel kernel;
  SquareGraph square;
  KernelReport report;
  Seconds reduce_time{0.0};
  Seconds transform_time{0.0};
};

inline Prepared prepare(const StaticGraph& g, const SolverConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  Kernel kernel = reduce(g, cfg.variant);
  const auto t1 = Clock::now();
  KernelReport report = report_of(kernel);
  SquareGraph sq;
  try {
    sq = square(kernel.graph, cfg.edge_cap);
  } catch (const EdgeCapExceeded& e) {
    throw MemoryCapError(e.what(), report);
  }
  const auto t2 = Clock::now();
  report.n_square = sq.n();
  report.m_square = sq.m();
  return {std::move(kernel), std::move(sq), report, t1 - t0, t2 - t1};
}

}  // namespace detail

/// Reduces and transforms without solving.
inline KernelReport kernelize(const StaticGraph& g, const SolverConfig& cfg) {
  return detail::prepare(g, cfg).report;
}

/// Reduce, square, solve MIS on the square, map back.
inline Solution solve_m2s(const StaticGraph& g, const SolverConfig& cfg) {
  const auto start = Clock::now();
  auto prepared = detail::prepare(g, cfg);
  const auto& sq = prepared.square;

  Solution sol;
  sol.kernel = prepared.report;
  sol.timings.reduce = prepared.reduce_time;
  sol.timings.transform = prepared.transform_time;

  std::vector<Vertex> kernel_solution;
  if (sq.n() == 0) {
    sol.proven_optimal = true;
    sol.timings.find = Clock::now() - start;
  } else {
    const Seconds used = Clock::now() - start;
    Deadline deadline = cfg.node_budget ? Deadline::nodes(*cfg.node_budget)
                                        : Deadline::after(Seconds(cfg.time_limit) - used);
    const auto solve_start = Clock::now();
    MisResult mis = cfg.mode == SolverMode::Exact ? exact_mis(sq, deadline) : heuristic_mis(sq, deadline, cfg.seed);
    sol.timings.solve = Clock::now() - solve_start;
    if (!sq.is_independent(mis.set)) throw std::logic_error("MIS solver returned a dependent set");
    kernel_solution = sq.to_original(mis.set);
    sol.mis_size = mis.size;
    sol.proven_optimal = cfg.mode == SolverMode::Exact && mis.proven_optimal;
    sol.timed_out = cfg.mode == SolverMode::Exact && !mis.proven_optimal;
    sol.timings.find = (solve_start - start) + mis.time_to_best;
  }

  sol.vertices = reconstruct(prepared.kernel.log, kernel_solution);
  sol.size = sol.vertices.size();
  sol.timings.total = Clock::now() - start;
  if (cfg.verify && !verify_2ps(g, sol.vertices))
    throw std::logic_error("solution failed 2-packing verification");
  return sol;
}

/// n(K²)/n(G) and m(K²)/m(G) in percent; 0 when the input count is 0.
inline std::pair<double, double> kernel_ratios(const StaticGraph& g, const KernelReport& k) {
  const double n_ratio = g.n() == 0 ? 0.0 : 100.0 * static_cast<double>(k.n_square) / static_cast<double>(g.n());
  const double m_ratio = g.m() == 0 ? 0.0 : 100.0 * static_cast<double>(k.m_square) / static_cast<double>(g.m());
  return {n_ratio, m_ratio};
}

inline std::pair<double, double> kernel_ratios(const StaticGraph& g, const Solution& sol) {
  return kernel_ratios(g, sol.kernel);
}

}  // namespace twopack
