#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/static_graph.hpp"
#include "twopack/two_level_graph.hpp"

namespace twopack {

/// Thrown when the square graph would exceed the configured edge cap.
class EdgeCapExceeded : public std::runtime_error {
 public:
  EdgeCapExceeded(std::size_t edges, std::size_t cap)
      : std::runtime_error("square graph has at least " + std::to_string(edges) + " edges, cap is " +
                           std::to_string(cap)),
        edges_(edges),
        cap_(cap) {}

  std::size_t edges() const noexcept { return edges_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t edges_;
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultEdgeCap = std::numeric_limits<std::int32_t>::max();

/// Square graph over the active vertices of a kernel: edge set E ∪ 2-edges,
/// with local IDs 0..n-1 and a map back to the input graph's IDs.
class SquareGraph {
 public:
  SquareGraph() = default;

  SquareGraph(std::vector<Vertex> original_ids, std::vector<std::vector<Vertex>> adjacency)
      : original_(std::move(original_ids)), graph_(std::move(adjacency)) {
    TWOPACK_REQUIRE(original_.size() == graph_.n(), "vertex map size mismatch");
  }

  std::size_t n() const noexcept { return graph_.n(); }
  std::size_t m() const noexcept { return graph_.m(); }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

  /// Local ID -> input-graph ID.
  Vertex original_id(Vertex local) const {
    TWOPACK_REQUIRE(local < original_.size(), "local vertex out of range");
    return original_[local];
  }
  std::span<const Vertex> vertex_map() const noexcept { return original_; }

  const StaticGraph& graph() const noexcept { return graph_; }

  std::vector<Vertex> to_original(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(original_id(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_independent(std::span<const Vertex> set) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= n()) return false;
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (set[i] == set[j] || adjacent(set[i], set[j])) return false;
    }
    return true;
  }

  friend bool operator==(const SquareGraph&, const SquareGraph&) = default;

 private:
  std::vector<Vertex> original_;
  StaticGraph graph_;
};

/// Materializes every remaining 2-neighborhood and merges both edge levels
/// into a square graph over the active vertices.
inline SquareGraph square(TwoLevelGraph& kernel, std::size_t edge_cap = kDefaultEdgeCap) {
  kernel.materialize_all();
  const std::size_t total = kernel.num_edges() + kernel.num_two_edges();
  if (total > edge_cap) throw EdgeCapExceeded(total, edge_cap);

  std::vector<Vertex> original;
  std::vector<Vertex> local(kernel.capacity(), std::numeric_limits<Vertex>::max());
  for (Vertex v : kernel.active_vertices()) {
    local[v] = static_cast<Vertex>(original.size());
    original.push_back(v);
  }

  std::vector<std::vector<Vertex>> adj(original.size());
  for (Vertex lv = 0; lv < original.size(); ++lv) {
    const Vertex v = original[lv];
    auto one = kernel.neighbors(v);
    auto two = kernel.stored_two_neighbors(v);
    auto& list = adj[lv];
    list.reserve(one.size() + two.size());
    // Active IDs map monotonically, so the merged list stays sorted.
    std::merge(one.begin(), one.end(), two.begin(), two.end(), std::back_inserter(list));
    for (auto& u : list) u = local[u];
  }
  return SquareGraph(std::move(original), std::move(adj));
}

/// Square of an unreduced input graph.
inline SquareGraph square(const StaticGraph& g, std::size_t edge_cap = kDefaultEdgeCap) {
  TwoLevelGraph tl(g);
  return square(tl, edge_cap);
}

/// Checks a local vertex set two ways: independence in the square graph and
/// pairwise distance >= 3 in `g` via depth-2 BFS. Throws if the two disagree.
inline bool equivalence_check(const StaticGraph& g, const SquareGraph& sq, std::span<const Vertex> set) {
  const bool independent = sq.is_independent(set);

  bool packing = true;
  std::vector<Vertex> originals;
  for (Vertex v : set) {
    if (v >= sq.n()) return false;
    originals.push_back(sq.original_id(v));
  }
  std::vector<int> member(g.n(), 0);
  for (Vertex v : originals) ++member[v];
  for (Vertex v : originals) {
    if (member[v] > 1) packing = false;
    for (Vertex u : g.neighbors(v)) {
      if (member[u]) packing = false;
      for (Vertex w : g.neighbors(u))
        if (w != v && member[w]) packing = false;
    }
  }
  if (independent != packing)
    throw ContractError("square-graph independence and distance-3 packing disagree");
  return independent;
}

}  // namespace twopack
