#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/square_graph.hpp"
#include "twopack/static_graph.hpp"

namespace twopack {

using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

/// Solver budget. A node budget, when set, replaces the wall-clock budget so
/// that runs are reproducible; the wall clock is then ignored.
struct Deadline {
  Seconds wall{0.0};
  std::optional<std::uint64_t> node_budget;
  std::uint64_t poll_interval = 256;

  static Deadline after(Seconds s) { return Deadline{s, std::nullopt}; }
  static Deadline after_seconds(double s) { return after(Seconds(s)); }
  static Deadline nodes(std::uint64_t n) { return Deadline{Seconds(0.0), n}; }

  bool empty() const noexcept { return node_budget ? *node_budget == 0 : wall.count() <= 0.0; }
};

struct MisResult {
  std::vector<Vertex> set;  // sorted local IDs
  std::size_t size = 0;
  bool proven_optimal = false;
  std::uint64_t nodes_explored = 0;
  Seconds elapsed{0.0};
  Seconds time_to_best{0.0};
};

/// Called with (size, elapsed) each time a solver improves its incumbent.
using ImprovementObserver = std::function<void(std::size_t, Seconds)>;

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t num_words() const noexcept { return words_.size(); }
  std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }
  std::uint64_t& word(std::size_t i) noexcept { return words_[i]; }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count_and(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  void and_not(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }
  void and_with(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  }

  /// Calls f(i) for each set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        f(i);
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

inline std::vector<Bitset> adjacency_bitsets(const StaticGraph& g) {
  std::vector<Bitset> adj(g.n(), Bitset(g.n()));
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) adj[v].set(u);
  return adj;
}

/// Number of cliques in a greedy sequential clique cover of `rest`; an upper
/// bound on the independence number of the subgraph it induces.
inline std::size_t greedy_clique_cover(const std::vector<Bitset>& adj, const Bitset& rest,
                                       std::vector<Bitset>& scratch) {
  std::size_t cliques = 0;
  rest.for_each([&](std::size_t v) {
    for (std::size_t c = 0; c < cliques; ++c) {
      if (scratch[c].test(v)) {
        scratch[c].and_with(adj[v]);
        return;
      }
    }
    if (scratch.size() <= cliques) scratch.emplace_back(adj.size());
    scratch[cliques] = adj[v];
    scratch[cliques].and_with(rest);
    ++cliques;
  });
  return cliques;
}

/// List-based variant of the clique cover over the whole graph, in ID order.
inline std::size_t greedy_clique_cover(const StaticGraph& g) {
  std::vector<std::size_t> clique_of(g.n());
  std::vector<std::size_t> clique_size;
  std::vector<std::size_t> hits;
  std::vector<std::size_t> touched;
  for (Vertex v = 0; v < g.n(); ++v) {
    touched.clear();
    for (Vertex u : g.neighbors(v)) {
      if (u > v) break;
      const auto c = clique_of[u];
      if (hits[c]++ == 0) touched.push_back(c);
    }
    std::size_t chosen = clique_size.size();
    for (auto c : touched) {
      if (hits[c] == clique_size[c]) chosen = std::min(chosen, c);
      hits[c] = 0;
    }
    if (chosen == clique_size.size()) {
      clique_size.push_back(0);
      hits.push_back(0);
    }
    clique_of[v] = chosen;
    ++clique_size[chosen];
  }
  return clique_size.size();
}

class Budget {
 public:
  explicit Budget(const Deadline& d) : deadline_(d), start_(Clock::now()) {}

  /// Counts one node; returns false once the budget is spent.
  bool tick() {
    if (expired_) return false;
    ++nodes_;
    if (deadline_.node_budget) {
      if (nodes_ > *deadline_.node_budget) expired_ = true;
    } else if (nodes_ % std::max<std::uint64_t>(deadline_.poll_interval, 1) == 0 && elapsed() >= deadline_.wall) {
      expired_ = true;
    }
    return !expired_;
  }

  bool expired() const noexcept { return expired_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  Seconds elapsed() const { return Clock::now() - start_; }

 private:
  Deadline deadline_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

/// Solution state for (1,2)-swap local search: membership plus, per vertex,
/// the number of solution neighbors ("tightness").
class SwapState {
 public:
  explicit SwapState(const StaticGraph& g) : g_(&g), in_(g.n(), 0), tight_(g.n(), 0), pos_(g.n(), 0) {}

  bool contains(Vertex v) const { return in_[v] != 0; }
  bool is_free(Vertex v) const { return !in_[v] && tight_[v] == 0; }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const Vertex> members() const noexcept { return members_; }

  void add(Vertex v) {
    in_[v] = 1;
    pos_[v] = static_cast<Vertex>(members_.size());
    members_.push_back(v);
    for (Vertex u : g_->neighbors(v)) ++tight_[u];
  }

  void remove(Vertex v) {
    in_[v] = 0;
    const Vertex last = members_.back();
    members_[pos_[v]] = last;
    pos_[last] = pos_[v];
    members_.pop_back();
    for (Vertex u : g_->neighbors(v)) --tight_[u];
  }

  /// Inserts v, evicting its solution neighbors.
  void force(Vertex v) {
    for (Vertex u : g_->neighbors(v))
      if (in_[u]) remove(u);
    add(v);
  }

  /// Adds free vertices in the given order until the solution is maximal.
  void make_maximal(std::span<const Vertex> order) {
    for (Vertex v : order)
      if (is_free(v)) add(v);
  }

  /// One improving (1,2)-swap: drops a solution vertex x and adds two
  /// non-adjacent neighbors of x whose only solution neighbor was x. Returns
  /// true if a swap was made (the solution grew by exactly one).
  bool try_two_improvement() {
    std::vector<Vertex> candidates;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const Vertex x = members_[i];
      candidates.clear();
      for (Vertex u : g_->neighbors(x))
        if (tight_[u] == 1) candidates.push_back(u);
      for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
          if (g_->adjacent(candidates[a], candidates[b])) continue;
          const Vertex u = candidates[a];
          const Vertex w = candidates[b];
          remove(x);
          add(u);
          add(w);
          return true;
        }
      }
    }
    return false;
  }

  std::vector<Vertex> sorted_members() const {
    std::vector<Vertex> out(members_.begin(), members_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const StaticGraph* g_;
  std::vector<std::uint8_t> in_;
  std::vector<Vertex> tight_;
  std::vector<Vertex> pos_;
  std::vector<Vertex> members_;
};

inline void local_search(SwapState& s, std::span<const Vertex> order) {
  s.make_maximal(order);
  while (s.try_two_improvement()) s.make_maximal(order);
}

/// Maximal independent set by repeatedly taking a minimum-residual-degree
/// vertex; ties follow the random priority `rank`.
inline std::vector<Vertex> greedy_min_degree(const StaticGraph& g, std::span<const std::uint64_t> rank) {
  const auto n = g.n();
  std::vector<std::size_t> degree(n);
  std::vector<std::uint8_t> alive(n, 1);
  using Key = std::pair<std::size_t, std::uint64_t>;
  std::vector<std::pair<Key, Vertex>> heap;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    heap.push_back({{degree[v], rank[v]}, v});
  }
  auto cmp = [](const auto& a, const auto& b) { return a.first > b.first; };
  std::make_heap(heap.begin(), heap.end(), cmp);

  std::vector<Vertex> out;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    auto [key, v] = heap.back();
    heap.pop_back();
    if (!alive[v] || key.first != degree[v]) continue;
    out.push_back(v);
    alive[v] = 0;
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      alive[u] = 0;
      for (Vertex w : g.neighbors(u)) {
        if (!alive[w]) continue;
        --degree[w];
        heap.push_back({{degree[w], rank[w]}, w});
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Greedy start plus iterated (1,2)-swap local search with forced-insertion
/// perturbations. Every perturbation counts as one node. Stops when the
/// budget runs out or the incumbent reaches the clique-cover bound.
inline MisResult heuristic_mis(const StaticGraph& g, const Deadline& deadline, std::uint64_t seed,
                               const ImprovementObserver& observer = {}) {
  MisResult result;
  detail::Budget budget(deadline);
  const auto n = g.n();
  if (n == 0) {
    result.proven_optimal = true;
    return result;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> rank(n);
  for (auto& r : rank) r = rng();

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);

  detail::SwapState current(g);
  for (Vertex v : detail::greedy_min_degree(g, rank)) current.add(v);
  detail::local_search(current, order);

  auto best = current.sorted_members();
  result.time_to_best = budget.elapsed();
  if (observer) observer(best.size(), result.time_to_best);

  const std::size_t upper = detail::greedy_clique_cover(g);

  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (best.size() < upper && budget.tick()) {
    auto snapshot = current.sorted_members();
    Vertex v = pick(rng);
    for (std::size_t tries = 0; current.contains(v) && tries < n; ++tries) v = pick(rng);
    if (current.contains(v)) break;  // the whole graph is independent
    current.force(v);
    std::shuffle(order.begin(), order.end(), rng);
    detail::local_search(current, order);
    if (current.size() > best.size()) {
      best = current.sorted_members();
      result.time_to_best = budget.elapsed();
      if (observer) observer(best.size(), result.time_to_best);
    } else if (current.size() < snapshot.size()) {
      current = detail::SwapState(g);
      for (Vertex u : snapshot) current.add(u);
    }
  }

  result.set = std::move(best);
  result.size = result.set.size();
  result.proven_optimal = result.size == upper;
  result.nodes_explored = budget.nodes();
  result.elapsed = budget.elapsed();
  return result;
}

inline MisResult heuristic_mis(const SquareGraph& sq, const Deadline& deadline, std::uint64_t seed,
                               const ImprovementObserver& observer = {}) {
  return heuristic_mis(sq.graph(), deadline, seed, observer);
}

namespace detail {

/// Branch and bound over bitset residual sets.
class ExactSearch {
 public:
  ExactSearch(const StaticGraph& g, Budget& budget, const ImprovementObserver& observer)
      : adj_(adjacency_bitsets(g)), budget_(budget), observer_(observer) {}

  void seed_incumbent(std::vector<Vertex> s) { best_ = std::move(s); }

  void run(std::size_t n) {
    Bitset rest(n);
    for (std::size_t v = 0; v < n; ++v) rest.set(v);
    branch(std::move(rest));
  }

  const std::vector<Vertex>& best() const noexcept { return best_; }
  Seconds time_to_best() const noexcept { return time_to_best_; }

 private:
  void take(std::size_t v, Bitset& rest) {
    current_.push_back(static_cast<Vertex>(v));
    rest.reset(v);
    rest.and_not(adj_[v]);
  }

  void record_incumbent() {
    if (current_.size() <= best_.size()) return;
    best_ = current_;
    time_to_best_ = budget_.elapsed();
    if (observer_) observer_(best_.size(), time_to_best_);
  }

  /// Degree-0 and pendant inclusion plus neighborhood-subset domination,
  /// repeated until nothing changes.
  void reduce(Bitset& rest) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t found = SIZE_MAX;
      rest.for_each([&](std::size_t v) {
        if (found == SIZE_MAX && adj_[v].count_and(rest) <= 1) found = v;
      });
      if (found != SIZE_MAX) {
        take(found, rest);
        changed = true;
        continue;
      }
      rest.for_each([&](std::size_t v) {
        if (changed || !rest.test(v)) return;
        for (std::size_t w = 0; w < rest.num_words() && !changed; ++w) {
          std::uint64_t nb = adj_[v].word(w) & rest.word(w);
          while (nb) {
            const auto u = (w << 6) + static_cast<std::size_t>(std::countr_zero(nb));
            nb &= nb - 1;
            if (dominated_by(v, u, rest)) {
              rest.reset(u);
              changed = true;
              break;
            }
          }
        }
      });
    }
  }

  /// N[v] ⊆ N[u] within `rest`.
  bool dominated_by(std::size_t v, std::size_t u, const Bitset& rest) const {
    const std::size_t wv = v >> 6;
    const std::size_t wu = u >> 6;
    for (std::size_t w = 0; w < rest.num_words(); ++w) {
      std::uint64_t closed_v = adj_[v].word(w);
      if (w == wv) closed_v |= std::uint64_t{1} << (v & 63);
      std::uint64_t closed_u = adj_[u].word(w);
      if (w == wu) closed_u |= std::uint64_t{1} << (u & 63);
      if (closed_v & rest.word(w) & ~closed_u) return false;
    }
    return true;
  }

  void branch(Bitset rest) {
    if (!budget_.tick()) return;
    const auto mark = current_.size();
    reduce(rest);
    record_incumbent();
    if (rest.none()) {
      current_.resize(mark);
      return;
    }
    if (current_.size() + greedy_clique_cover(adj_, rest, scratch_) <= best_.size()) {
      current_.resize(mark);
      return;
    }

    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    bool first = true;
    rest.for_each([&](std::size_t v) {
      const auto d = adj_[v].count_and(rest);
      if (first || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
        first = false;
      }
    });

    Bitset without = rest;
    without.reset(pivot);
    branch(std::move(without));

    if (!budget_.expired()) {
      const auto before = current_.size();
      take(pivot, rest);
      branch(std::move(rest));
      current_.resize(before);
    }
    current_.resize(mark);
  }

  std::vector<Bitset> adj_;
  Budget& budget_;
  const ImprovementObserver& observer_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::vector<Bitset> scratch_;
  Seconds time_to_best_{0.0};
};

}  // namespace detail

/// Exact maximum independent set by branch and bound. Branches on a
/// maximum-degree vertex (exclude first, then include) with degree-0/1 and
/// domination reductions at every node and a greedy clique-cover bound. The
/// heuristic seeds the incumbent. If the budget runs out the best set found
/// so far is returned unproven.
inline MisResult exact_mis(const StaticGraph& g, const Deadline& deadline, const ImprovementObserver& observer = {}) {
  MisResult result;
  if (deadline.empty()) return result;

  detail::Budget budget(deadline);
  const auto n = g.n();
  if (n == 0) {
    result.proven_optimal = true;
    return result;
  }

  // The warm start runs on its own small node budget so exact runs stay
  // reproducible under a node-budget deadline.
  auto warm = heuristic_mis(g, Deadline::nodes(std::min<std::uint64_t>(64, 4 * n)), 0);
  detail::ExactSearch search(g, budget, observer);
  search.seed_incumbent(warm.set);
  if (observer) observer(warm.size, budget.elapsed());

  search.run(n);

  result.set = search.best();
  std::sort(result.set.begin(), result.set.end());
  result.size = result.set.size();
  result.proven_optimal = !budget.expired();
  result.nodes_explored = budget.nodes();
  result.elapsed = budget.elapsed();
  result.time_to_best = search.best().size() > warm.size ? search.time_to_best() : Seconds(0.0);
  return result;
}

inline MisResult exact_mis(const SquareGraph& sq, const Deadline& deadline, const ImprovementObserver& observer = {}) {
  return exact_mis(sq.graph(), deadline, observer);
}

}  // namespace twopack
