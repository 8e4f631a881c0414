#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twopack/error.hpp"

namespace twopack {

using Vertex = std::uint32_t;

/// Immutable simple undirected graph with sorted adjacency lists.
///
/// Vertices are dense 0-based IDs. Construction validates symmetry and rejects
/// self-loops and duplicate entries, so every downstream module can assume a
/// simple graph.
class StaticGraph {
 public:
  StaticGraph() = default;

  /// Takes per-vertex neighbor lists (in any order) and validates them.
  explicit StaticGraph(std::vector<std::vector<Vertex>> adjacency) : adj_(std::move(adjacency)) {
    std::size_t half_edges = 0;
    const auto n = adj_.size();
    for (std::size_t v = 0; v < n; ++v) {
      auto& list = adj_[v];
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] >= n)
          throw ContractError("neighbor " + std::to_string(list[i]) + " of vertex " + std::to_string(v) +
                              " is out of range");
        if (list[i] == v) throw ContractError("self-loop at vertex " + std::to_string(v));
        if (i > 0 && list[i] == list[i - 1])
          throw ContractError("duplicate edge " + std::to_string(v) + "-" + std::to_string(list[i]));
      }
      half_edges += list.size();
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex u : adj_[v]) {
        if (!std::binary_search(adj_[u].begin(), adj_[u].end(), static_cast<Vertex>(v)))
          throw ContractError("asymmetric edge " + std::to_string(v) + "->" + std::to_string(u));
      }
    }
    m_ = half_edges / 2;
  }

  /// Builds from an undirected edge list. Duplicates and self-loops are errors.
  static StaticGraph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return StaticGraph(std::move(adj));
  }

  static StaticGraph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    TWOPACK_REQUIRE(v < n(), "vertex out of range");
    return adj_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& list : adj_) d = std::max(d, list.size());
    return d;
  }

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

}  // namespace twopack
