#pragma once

// Brute-force ground truth for small graphs. Nothing here reuses the solver
// code paths: distances come from a plain BFS and the searches run on
// bitmasks.

#include <bit>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/square_graph.hpp"
#include "twopack/static_graph.hpp"
#include "twopack/verify.hpp"

namespace twopack::oracle {

struct OracleLimit {
  std::size_t max_n = 20;
};

struct BetaResult {
  std::size_t size = 0;
  std::vector<Vertex> witness;
};

namespace detail {

using Mask = std::uint32_t;

inline void check_limit(const StaticGraph& g, OracleLimit limit) {
  if (g.n() > limit.max_n || g.n() > 32)
    throw OracleLimitError("oracle refuses graph with " + std::to_string(g.n()) + " vertices (limit " +
                           std::to_string(limit.max_n) + ")");
}

inline std::vector<int> bfs_distances(const StaticGraph& g, Vertex source) {
  std::vector<int> dist(g.n(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      q.push(u);
    }
  }
  return dist;
}

/// conflict[v] = vertices at distance 1 or 2 from v.
inline std::vector<Mask> conflict_masks(const StaticGraph& g) {
  std::vector<Mask> conflict(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < g.n(); ++u)
      if (dist[u] == 1 || dist[u] == 2) conflict[v] |= Mask{1} << u;
  }
  return conflict;
}

inline std::vector<Mask> adjacency_masks(const StaticGraph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  return adj;
}

/// Largest independent subset of `candidates` under `adj`.
inline void max_independent(const std::vector<Mask>& adj, Mask candidates, Mask chosen, Mask& best) {
  if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) return;
  if (candidates == 0) {
    best = chosen;
    return;
  }
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  max_independent(adj, candidates & ~bit & ~adj[v], chosen | bit, best);
  if ((adj[v] & candidates) != 0) max_independent(adj, candidates & ~bit, chosen, best);
}

inline std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask full_mask(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace detail

/// Square graph via all-pairs BFS truncated at distance 2.
inline SquareGraph brute_square(const StaticGraph& g, OracleLimit limit = {}) {
  detail::check_limit(g, limit);
  const auto conflict = detail::conflict_masks(g);
  std::vector<std::vector<Vertex>> adj(g.n());
  std::vector<Vertex> ids(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    ids[v] = v;
    adj[v] = detail::mask_to_vertices(conflict[v]);
  }
  return SquareGraph(std::move(ids), std::move(adj));
}

/// Independence number by bitmask branch and bound.
inline std::size_t brute_alpha(const StaticGraph& g, OracleLimit limit = {}) {
  detail::check_limit(g, limit);
  const auto adj = detail::adjacency_masks(g);
  detail::Mask best = 0;
  detail::max_independent(adj, detail::full_mask(g.n()), 0, best);
  return static_cast<std::size_t>(std::popcount(best));
}

/// Independence number of the subgraph induced by `allowed` (bitmask over
/// vertex IDs) in a conflict relation given as masks.
inline std::size_t brute_alpha_masks(const std::vector<std::uint32_t>& adj, std::uint32_t allowed) {
  detail::Mask best = 0;
  detail::max_independent(adj, allowed, 0, best);
  return static_cast<std::size_t>(std::popcount(best));
}

/// Pairwise distance-<=2 relation of `g` as bitmasks.
inline std::vector<std::uint32_t> conflict_masks(const StaticGraph& g, OracleLimit limit = {}) {
  detail::check_limit(g, limit);
  return detail::conflict_masks(g);
}

/// Maximum 2-packing set by enumeration over the BFS conflict relation.
inline BetaResult brute_beta(const StaticGraph& g, OracleLimit limit = {}) {
  detail::check_limit(g, limit);
  const auto conflict = detail::conflict_masks(g);
  detail::Mask best = 0;
  detail::max_independent(conflict, detail::full_mask(g.n()), 0, best);
  BetaResult r{static_cast<std::size_t>(std::popcount(best)), detail::mask_to_vertices(best)};
  if (!verify_2ps(g, r.witness)) throw ContractError("oracle witness is not a 2-packing set");
  return r;
}

}  // namespace twopack::oracle
