#pragma once

#include <algorithm>
#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/static_graph.hpp"

namespace twopack {

enum class VertexStatus : std::uint8_t { Active, Included, Excluded };

/// Mutable graph used while reducing: 1-edges (E) and 2-edges separated into
/// two sorted adjacency arrays, plus per-vertex status.
///
/// A 2-edge joins two active vertices that are in conflict in the input graph
/// (distance 2) without being adjacent now. The 2-neighborhood of a vertex is
/// only complete once it has been materialized; before that its 2-edge list
/// holds whatever partners inserted themselves or removals retained.
///
/// Removing a vertex w inserts 2-edges between every pair of its remaining
/// neighbors that are not already connected, so conflicts routed through w
/// survive its deletion.
class TwoLevelGraph {
 public:
  TwoLevelGraph() = default;

  explicit TwoLevelGraph(const StaticGraph& g)
      : one_adj_(g.n()),
        two_adj_(g.n()),
        status_(g.n(), VertexStatus::Active),
        materialized_(g.n(), false),
        stamp_(g.n(), 0),
        active_count_(g.n()),
        half_edges_(2 * g.m()) {
    for (Vertex v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      one_adj_[v].assign(nb.begin(), nb.end());
    }
  }

  std::size_t capacity() const noexcept { return status_.size(); }
  std::size_t num_active() const noexcept { return active_count_; }

  /// Undirected 1-edges among active vertices.
  std::size_t num_edges() const noexcept { return half_edges_ / 2; }

  /// Undirected 2-edges currently stored. Equals the true count only once all
  /// active vertices are materialized.
  std::size_t num_two_edges() const noexcept { return half_two_edges_ / 2; }

  VertexStatus status(Vertex v) const {
    TWOPACK_REQUIRE(v < capacity(), "vertex out of range");
    return status_[v];
  }
  bool is_active(Vertex v) const { return status(v) == VertexStatus::Active; }
  bool is_materialized(Vertex v) const {
    require_active(v);
    return materialized_[v];
  }

  auto active_vertices() const {
    return std::views::iota(Vertex{0}, static_cast<Vertex>(capacity())) |
           std::views::filter([this](Vertex v) { return status_[v] == VertexStatus::Active; });
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    require_active(v);
    return one_adj_[v];
  }
  std::size_t deg(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Complete 2-neighborhood of v; materializes it on first use.
  std::span<const Vertex> two_neighbors(Vertex v) {
    materialize_two_neighborhood(v);
    return two_adj_[v];
  }
  std::size_t deg2(Vertex v) { return two_neighbors(v).size(); }

  /// Stored 2-edges of v without forcing materialization.
  std::span<const Vertex> stored_two_neighbors(Vertex v) const {
    require_active(v);
    return two_adj_[v];
  }

  /// True iff u and v are joined by a 1-edge or a 2-edge (u == v counts).
  bool in_conflict(Vertex u, Vertex v) {
    if (u == v) return true;
    if (adjacent(u, v)) return true;
    auto two = two_neighbors(v);
    return std::binary_search(two.begin(), two.end(), u);
  }

  /// Computes N2(v) from the current 1-edges and merges it with the retained
  /// 2-edges. Partners get the symmetric entry. Idempotent.
  std::span<const Vertex> materialize_two_neighborhood(Vertex v) {
    require_active(v);
    if (materialized_[v]) return two_adj_[v];

    const auto mark = next_stamp();
    stamp_[v] = mark;
    for (Vertex u : one_adj_[v]) stamp_[u] = mark;
    for (Vertex w : two_adj_[v]) stamp_[w] = mark;

    std::vector<Vertex> fresh;
    for (Vertex u : one_adj_[v]) {
      for (Vertex w : one_adj_[u]) {
        if (stamp_[w] == mark) continue;
        stamp_[w] = mark;
        fresh.push_back(w);
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (Vertex w : fresh) insert_sorted(two_adj_[w], v);

    auto& list = two_adj_[v];
    const auto mid = list.size();
    list.insert(list.end(), fresh.begin(), fresh.end());
    std::inplace_merge(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(mid), list.end());
    half_two_edges_ += 2 * fresh.size();
    materialized_[v] = true;
    return list;
  }

  void materialize_all() {
    for (Vertex v = 0; v < capacity(); ++v)
      if (status_[v] == VertexStatus::Active) materialize_two_neighborhood(v);
  }

  /// Deletes w, marking it Included or Excluded, and retains the conflicts
  /// that ran through it as 2-edges between its remaining neighbors.
  void remove_vertex(Vertex w, VertexStatus mark) {
    require_active(w);
    TWOPACK_REQUIRE(mark != VertexStatus::Active, "removal mark must be Included or Excluded");

    auto& nb = one_adj_[w];
    for (Vertex x : nb) erase_sorted(one_adj_[x], w);
    half_edges_ -= 2 * nb.size();
    for (Vertex x : two_adj_[w]) erase_sorted(two_adj_[x], w);
    half_two_edges_ -= 2 * two_adj_[w].size();

    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex x = nb[i];
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex y = nb[j];
        if (contains(one_adj_[x], y) || contains(two_adj_[x], y)) continue;
        insert_sorted(two_adj_[x], y);
        insert_sorted(two_adj_[y], x);
        half_two_edges_ += 2;
      }
    }

    std::vector<Vertex>().swap(one_adj_[w]);
    std::vector<Vertex>().swap(two_adj_[w]);
    status_[w] = mark;
    materialized_[w] = false;
    --active_count_;
  }

 private:
  void require_active(Vertex v) const {
    if (v >= capacity()) throw ContractError("vertex " + std::to_string(v) + " out of range");
    if (status_[v] != VertexStatus::Active) throw ContractError("vertex " + std::to_string(v) + " is not active");
  }

  static bool contains(const std::vector<Vertex>& list, Vertex v) {
    return std::binary_search(list.begin(), list.end(), v);
  }
  static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }
  static void erase_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) list.erase(it);
  }

  std::uint32_t next_stamp() {
    if (++current_stamp_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      current_stamp_ = 1;
    }
    return current_stamp_;
  }

  std::vector<std::vector<Vertex>> one_adj_;
  std::vector<std::vector<Vertex>> two_adj_;
  std::vector<VertexStatus> status_;
  std::vector<bool> materialized_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_stamp_ = 0;
  std::size_t active_count_ = 0;
  std::size_t half_edges_ = 0;
  std::size_t half_two_edges_ = 0;
};

}  // namespace twopack
