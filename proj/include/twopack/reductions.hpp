#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/static_graph.hpp"
#include "twopack/two_level_graph.hpp"

namespace twopack {

enum class ReductionKind : std::uint8_t {
  Domination,
  Clique,
  DegZero,
  DegZeroTriangle,
  DegOne,
  DegTwoVShape,
  DegTwoTriangle,
  DegTwoFourCycle,
  FastDomination,
  Twin,
};

inline constexpr std::size_t kNumReductionKinds = 10;

constexpr std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Domination: return "domination";
    case ReductionKind::Clique: return "clique";
    case ReductionKind::DegZero: return "deg_zero";
    case ReductionKind::DegZeroTriangle: return "deg_zero_triangle";
    case ReductionKind::DegOne: return "deg_one";
    case ReductionKind::DegTwoVShape: return "deg_two_v_shape";
    case ReductionKind::DegTwoTriangle: return "deg_two_triangle";
    case ReductionKind::DegTwoFourCycle: return "deg_two_four_cycle";
    case ReductionKind::FastDomination: return "fast_domination";
    case ReductionKind::Twin: return "twin";
  }
  return "?";
}

enum class ReductionVariant : std::uint8_t { TwoPack, Core, Elaborated };

constexpr std::string_view to_string(ReductionVariant variant) {
  switch (variant) {
    case ReductionVariant::TwoPack: return "2pack";
    case ReductionVariant::Core: return "core";
    case ReductionVariant::Elaborated: return "elaborated";
  }
  return "?";
}

/// Rules of a variant in the order the scheduler tries them.
inline std::span<const ReductionKind> rule_order(ReductionVariant variant) {
  using enum ReductionKind;
  static constexpr std::array<ReductionKind, 2> kCore{Clique, Domination};
  static constexpr std::array<ReductionKind, 10> kElaborated{
      DegZero, DegZeroTriangle, DegOne, DegTwoTriangle, DegTwoFourCycle,
      DegTwoVShape, Twin, FastDomination, Domination, Clique};
  switch (variant) {
    case ReductionVariant::TwoPack: return {};
    case ReductionVariant::Core: return kCore;
    case ReductionVariant::Elaborated: return kElaborated;
  }
  return {};
}

struct LogEntry {
  Vertex vertex;
  VertexStatus decision;
  ReductionKind rule;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// Ordered include/exclude decisions made during reduction.
class ReductionLog {
 public:
  ReductionLog() = default;
  explicit ReductionLog(std::size_t n) : logged_(n, false) {}

  void record(Vertex v, VertexStatus decision, ReductionKind rule) {
    TWOPACK_REQUIRE(v < logged_.size(), "logged vertex out of range");
    TWOPACK_REQUIRE(decision != VertexStatus::Active, "log decision must be Included or Excluded");
    TWOPACK_REQUIRE(!logged_[v], "vertex logged twice");
    logged_[v] = true;
    entries_.push_back({v, decision, rule});
    if (decision == VertexStatus::Included) ++offset_;
  }

  std::span<const LogEntry> entries() const noexcept { return entries_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(Vertex v) const { return v < logged_.size() && logged_[v]; }

  std::vector<Vertex> included() const {
    std::vector<Vertex> out;
    out.reserve(offset_);
    for (const auto& e : entries_)
      if (e.decision == VertexStatus::Included) out.push_back(e.vertex);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const ReductionLog&, const ReductionLog&) = default;

 private:
  std::vector<LogEntry> entries_;
  std::vector<bool> logged_;
  std::size_t offset_ = 0;
};

struct KernelStats {
  std::array<std::size_t, kNumReductionKinds> applications{};
  std::size_t n = 0;   // active vertices
  std::size_t m = 0;   // 1-edges
  std::size_t m2 = 0;  // 2-edges

  std::size_t total_applications() const noexcept {
    std::size_t s = 0;
    for (auto c : applications) s += c;
    return s;
  }
  std::size_t count(ReductionKind kind) const { return applications[static_cast<std::size_t>(kind)]; }
};

struct Kernel {
  TwoLevelGraph graph;
  ReductionLog log;
  KernelStats stats;
};

namespace detail {

inline void require_probe(const TwoLevelGraph& g, Vertex v) {
  if (v >= g.capacity() || !g.is_active(v)) throw ContractError("reduction probed on inactive vertex");
}

/// Closed 2-neighborhood N2[v], sorted.
inline std::vector<Vertex> closed_two_neighborhood(TwoLevelGraph& g, Vertex v) {
  auto two = g.two_neighbors(v);
  auto one = g.neighbors(v);
  std::vector<Vertex> out;
  out.reserve(one.size() + two.size() + 1);
  std::merge(one.begin(), one.end(), two.begin(), two.end(), std::back_inserter(out));
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

/// Includes v and excludes the rest of N2[v].
inline void include_vertex(TwoLevelGraph& g, ReductionLog& log, Vertex v, ReductionKind rule) {
  auto closed = closed_two_neighborhood(g, v);
  g.remove_vertex(v, VertexStatus::Included);
  log.record(v, VertexStatus::Included, rule);
  for (Vertex x : closed) {
    if (x == v) continue;
    g.remove_vertex(x, VertexStatus::Excluded);
    log.record(x, VertexStatus::Excluded, rule);
  }
}

inline void exclude_vertex(TwoLevelGraph& g, ReductionLog& log, Vertex u, ReductionKind rule) {
  g.remove_vertex(u, VertexStatus::Excluded);
  log.record(u, VertexStatus::Excluded, rule);
}

/// True iff N[v] is a subset of N[u].
inline bool closed_neighborhood_subset(const TwoLevelGraph& g, Vertex v, Vertex u) {
  if (v != u && !g.adjacent(u, v)) return false;
  for (Vertex x : g.neighbors(v))
    if (x != u && !g.adjacent(u, x)) return false;
  return true;
}

}  // namespace detail

/// Lemma check: for a neighbor u of v with N[v] ⊆ N[u], reports whether
/// deg2(v) + deg(v) <= deg(u), in which case N2(v) = N[u] \ N[v].
inline bool two_neighborhood_confined(TwoLevelGraph& g, Vertex v, Vertex u) {
  detail::require_probe(g, v);
  detail::require_probe(g, u);
  TWOPACK_REQUIRE(g.adjacent(v, u), "confinement check needs u in N(v)");
  TWOPACK_REQUIRE(detail::closed_neighborhood_subset(g, v, u), "confinement check needs N[v] ⊆ N[u]");
  return g.deg2(v) + g.deg(v) <= g.deg(u);
}

/// Excludes some u in N(v) ∪ N2(v) whose closed 2-neighborhood contains
/// N2[v]. Candidates are scanned in ascending ID order. If the closed
/// 2-neighborhoods are equal, the larger of u and v is excluded. Returns the
/// excluded vertex.
inline std::optional<Vertex> try_domination(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  const auto closed_v = detail::closed_two_neighborhood(g, v);
  for (Vertex u : closed_v) {
    if (u == v) continue;
    const std::size_t size_u = g.deg(u) + g.deg2(u) + 1;
    if (size_u < closed_v.size()) continue;
    bool contained = true;
    for (Vertex x : closed_v) {
      if (!g.in_conflict(x, u)) {
        contained = false;
        break;
      }
    }
    if (!contained) continue;
    const Vertex victim = size_u == closed_v.size() ? std::max(u, v) : u;
    detail::exclude_vertex(g, log, victim, ReductionKind::Domination);
    return victim;
  }
  return std::nullopt;
}

/// Includes v when N2[v] is a 2-clique (all members pairwise in conflict).
inline std::optional<Vertex> try_clique(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  const auto closed_v = detail::closed_two_neighborhood(g, v);
  const std::size_t k = closed_v.size();
  for (Vertex x : closed_v) {
    if (x == v) continue;
    if (g.deg(x) + g.deg2(x) + 1 < k) return std::nullopt;
  }
  for (Vertex x : closed_v) {
    if (x == v) continue;
    auto one = g.neighbors(x);
    auto two = g.two_neighbors(x);
    for (Vertex y : closed_v) {
      if (y == x) continue;
      if (!std::binary_search(one.begin(), one.end(), y) && !std::binary_search(two.begin(), two.end(), y))
        return std::nullopt;
    }
  }
  detail::include_vertex(g, log, v, ReductionKind::Clique);
  return v;
}

inline std::optional<Vertex> try_deg_zero(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 0 || g.deg2(v) > 1) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::DegZero);
  return v;
}

inline std::optional<Vertex> try_deg_zero_triangle(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 0 || g.deg2(v) != 2) return std::nullopt;
  auto two = g.two_neighbors(v);
  const Vertex u = two[0];
  const Vertex w = two[1];
  if (!g.in_conflict(u, w)) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::DegZeroTriangle);
  return v;
}

inline std::optional<Vertex> try_deg_one(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 1) return std::nullopt;
  const Vertex u = g.neighbors(v)[0];
  if (g.deg2(v) + 1 > g.deg(u)) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::DegOne);
  return v;
}

inline std::optional<Vertex> try_v_shape(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 2 || g.deg2(v) != 0) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::DegTwoVShape);
  return v;
}

inline std::optional<Vertex> try_deg_two_triangle(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 2) return std::nullopt;
  const auto nb = g.neighbors(v);
  if (g.deg(nb[0]) != 2 || g.deg(nb[1]) != 2) return std::nullopt;
  if (g.deg2(v) != 0) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::DegTwoTriangle);
  return v;
}

inline std::optional<Vertex> try_four_cycle(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 2) return std::nullopt;
  const Vertex u = g.neighbors(v)[0];
  const Vertex w = g.neighbors(v)[1];
  if (g.deg(u) != 2 || g.deg(w) != 2) return std::nullopt;
  if (g.deg2(v) != 1) return std::nullopt;
  const Vertex x = g.two_neighbors(v)[0];
  if (!g.adjacent(u, x) || !g.adjacent(w, x)) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::DegTwoFourCycle);
  return v;
}

/// Excludes a neighbor u with N[v] ⊆ N[u] and deg2(v) + deg(v) <= deg(u).
/// Only v's 2-neighborhood is materialized.
inline std::optional<Vertex> try_fast_domination(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  const std::size_t dv = g.deg(v);
  std::optional<std::size_t> d2v;
  for (Vertex u : g.neighbors(v)) {
    if (g.deg(u) < dv) continue;
    if (!detail::closed_neighborhood_subset(g, v, u)) continue;
    if (!d2v) d2v = g.deg2(v);
    if (*d2v + dv > g.deg(u)) continue;
    detail::exclude_vertex(g, log, u, ReductionKind::FastDomination);
    return u;
  }
  return std::nullopt;
}

/// deg(v) = 2 with neighbors u, w where N(u) = N(w), and deg2(v) <= deg(u) - 1.
inline std::optional<Vertex> try_twin(TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  detail::require_probe(g, v);
  if (g.deg(v) != 2) return std::nullopt;
  const Vertex u = g.neighbors(v)[0];
  const Vertex w = g.neighbors(v)[1];
  const auto nu = g.neighbors(u);
  const auto nw = g.neighbors(w);
  if (!std::equal(nu.begin(), nu.end(), nw.begin(), nw.end())) return std::nullopt;
  if (g.deg2(v) + 1 > g.deg(u)) return std::nullopt;
  detail::include_vertex(g, log, v, ReductionKind::Twin);
  return v;
}

/// Dispatches one rule on one vertex.
inline std::optional<Vertex> try_rule(ReductionKind kind, TwoLevelGraph& g, ReductionLog& log, Vertex v) {
  switch (kind) {
    case ReductionKind::Domination: return try_domination(g, log, v);
    case ReductionKind::Clique: return try_clique(g, log, v);
    case ReductionKind::DegZero: return try_deg_zero(g, log, v);
    case ReductionKind::DegZeroTriangle: return try_deg_zero_triangle(g, log, v);
    case ReductionKind::DegOne: return try_deg_one(g, log, v);
    case ReductionKind::DegTwoVShape: return try_v_shape(g, log, v);
    case ReductionKind::DegTwoTriangle: return try_deg_two_triangle(g, log, v);
    case ReductionKind::DegTwoFourCycle: return try_four_cycle(g, log, v);
    case ReductionKind::FastDomination: return try_fast_domination(g, log, v);
    case ReductionKind::Twin: return try_twin(g, log, v);
  }
  return std::nullopt;
}

/// Applies the variant's rules exhaustively to an existing graph and log.
///
/// Rules are tried in variant order, each over all active vertices in
/// ascending ID. Any successful application restarts the scan at the first
/// rule. Returns the number of applications per rule.
inline std::array<std::size_t, kNumReductionKinds> reduce_exhaustively(TwoLevelGraph& g, ReductionLog& log,
                                                                         ReductionVariant variant) {
  std::array<std::size_t, kNumReductionKinds> applied{};
  const auto order = rule_order(variant);
  bool progress = !order.empty();
  while (progress) {
    progress = false;
    for (ReductionKind kind : order) {
      for (Vertex v = 0; v < g.capacity() && !progress; ++v) {
        if (!g.is_active(v)) continue;
        if (try_rule(kind, g, log, v)) {
          ++applied[static_cast<std::size_t>(kind)];
          progress = true;
        }
      }
      if (progress) break;
    }
  }
  return applied;
}

/// Builds the kernel of `input` under `variant`. All remaining 2-neighborhoods
/// are materialized so the stats carry the final 2-edge count.
inline Kernel reduce(const StaticGraph& input, ReductionVariant variant) {
  Kernel k{TwoLevelGraph(input), ReductionLog(input.n()), {}};
  k.stats.applications = reduce_exhaustively(k.graph, k.log, variant);
  k.graph.materialize_all();
  k.stats.n = k.graph.num_active();
  k.stats.m = k.graph.num_edges();
  k.stats.m2 = k.graph.num_two_edges();
  return k;
}

/// Maps a kernel solution back to the input graph: kernel vertices plus every
/// vertex the log included.
inline std::vector<Vertex> reconstruct(const ReductionLog& log, std::span<const Vertex> kernel_solution) {
  std::vector<Vertex> out(kernel_solution.begin(), kernel_solution.end());
  for (Vertex v : out)
    if (log.contains(v)) throw ContractError("kernel solution contains reduced vertex " + std::to_string(v));
  auto inc = log.included();
  out.insert(out.end(), inc.begin(), inc.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ContractError("kernel solution has duplicate vertices");
  return out;
}

}  // namespace twopack
