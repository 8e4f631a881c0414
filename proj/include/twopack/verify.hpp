#pragma once

#include <span>
#include <string>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/static_graph.hpp"

namespace twopack {

/// True iff every pair of vertices in `s` is at distance >= 3 in `g`.
/// Runs a depth-2 search from each member and fails on reaching another one.
inline bool verify_2ps(const StaticGraph& g, std::span<const Vertex> s) {
  std::vector<std::uint8_t> member(g.n(), 0);
  for (Vertex v : s) {
    if (v >= g.n()) throw ContractError("vertex " + std::to_string(v) + " out of range");
    if (member[v]) return false;
    member[v] = 1;
  }
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (member[u]) return false;
      for (Vertex w : g.neighbors(u))
        if (w != v && member[w]) return false;
    }
  }
  return true;
}

}  // namespace twopack
