#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "twopack/error.hpp"
#include "twopack/pipeline.hpp"
#include "twopack/static_graph.hpp"

namespace twopack::io {

enum class GraphFormat : std::uint8_t { Metis, EdgeList };

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

inline bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

/// Parses whitespace-separated unsigned integers; nullopt on a bad token.
inline std::optional<std::vector<std::uint64_t>> parse_numbers(std::string_view line) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return std::nullopt;
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace detail

/// METIS adjacency format: header "n m [fmt]" (fmt must be 0 when present),
/// then one line of 1-based neighbor IDs per vertex. Lines starting with '%'
/// are comments.
inline StaticGraph parse_metis(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t idx = 0;
  auto skip_comments = [&] {
    while (idx < lines.size() && !lines[idx].empty() && lines[idx].front() == '%') ++idx;
  };

  skip_comments();
  while (idx < lines.size() && detail::is_blank(lines[idx])) {
    ++idx;
    skip_comments();
  }
  if (idx == lines.size()) throw ParseError("missing header line", 0);
  const std::size_t header_line = idx + 1;
  const auto header = detail::parse_numbers(lines[idx]);
  if (!header || header->size() < 2 || header->size() > 4)
    throw ParseError("malformed header, expected \"n m\"", header_line);
  if (header->size() >= 3 && (*header)[2] != 0)
    throw ParseError("weighted METIS graphs are not supported", header_line);
  const auto n = (*header)[0];
  const auto m = (*header)[1];
  if (n >= std::numeric_limits<Vertex>::max()) throw ParseError("vertex count too large", header_line);
  ++idx;

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> line_of(n, 0);
  std::size_t half_edges = 0;
  for (std::size_t v = 0; v < n; ++v) {
    skip_comments();
    if (idx == lines.size())
      throw ParseError("expected " + std::to_string(n) + " vertex lines, found " + std::to_string(v), lines.size());
    const std::size_t lineno = idx + 1;
    line_of[v] = lineno;
    const auto numbers = detail::parse_numbers(lines[idx]);
    if (!numbers) throw ParseError("non-numeric token", lineno);
    for (auto id : *numbers) {
      if (id == 0 || id > n) throw ParseError("neighbor index " + std::to_string(id) + " out of range", lineno);
      const auto u = static_cast<Vertex>(id - 1);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(v + 1), lineno);
      adj[v].push_back(u);
    }
    std::sort(adj[v].begin(), adj[v].end());
    if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
      throw ParseError("duplicate neighbor", lineno);
    half_edges += adj[v].size();
    ++idx;
  }
  for (; idx < lines.size(); ++idx) {
    if (detail::is_blank(lines[idx]) || lines[idx].front() == '%') continue;
    throw ParseError("unexpected content after the last vertex line", idx + 1);
  }

  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : adj[v]) {
      if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<Vertex>(v)))
        throw ParseError("edge " + std::to_string(v + 1) + "-" + std::to_string(u + 1) +
                             " is not listed by vertex " + std::to_string(u + 1),
                         line_of[v]);
    }
  }
  if (half_edges != 2 * m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(half_edges / 2),
                     header_line);
  return StaticGraph(std::move(adj));
}

/// One "u v" pair per line. IDs are `base`-based (0 or 1). Duplicate edges are
/// merged; '#' and '%' start comment lines.
inline StaticGraph parse_edgelist(std::string_view text, unsigned base = 0) {
  TWOPACK_REQUIRE(base <= 1, "edge list base must be 0 or 1");
  const auto lines = detail::split_lines(text);
  std::set<std::pair<Vertex, Vertex>> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (detail::is_blank(line) || line.front() == '#' || line.front() == '%') continue;
    const auto numbers = detail::parse_numbers(line);
    if (!numbers) throw ParseError("non-numeric token", i + 1);
    if (numbers->size() != 2) throw ParseError("expected two vertex IDs", i + 1);
    auto a = (*numbers)[0];
    auto b = (*numbers)[1];
    if (a < base || b < base) throw ParseError("vertex ID below base " + std::to_string(base), i + 1);
    a -= base;
    b -= base;
    if (a >= std::numeric_limits<Vertex>::max() - 1 || b >= std::numeric_limits<Vertex>::max() - 1)
      throw ParseError("vertex ID too large", i + 1);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a + base), i + 1);
    edges.emplace(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b)));
    max_id = std::max({max_id, a, b});
    any = true;
  }
  const std::size_t n = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
  return StaticGraph::from_edges(n, list);
}

inline StaticGraph parse_graph(std::string_view text, GraphFormat format, unsigned edgelist_base = 0) {
  return format == GraphFormat::Metis ? parse_metis(text) : parse_edgelist(text, edgelist_base);
}

inline void write_metis(std::ostream& out, const StaticGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) {
    bool first = true;
    for (Vertex u : g.neighbors(v)) {
      if (!first) out << ' ';
      out << (u + 1);
      first = false;
    }
    out << '\n';
  }
}

/// Isolated vertices past the largest endpoint are not representable.
inline void write_edgelist(std::ostream& out, const StaticGraph& g, unsigned base = 0) {
  for (auto [u, v] : g.edges()) out << (u + base) << ' ' << (v + base) << '\n';
}

/// One vertex ID per line, shifted by `base`.
inline void write_solution(std::ostream& out, std::span<const Vertex> vertices, unsigned base = 1) {
  for (Vertex v : vertices) out << (v + base) << '\n';
}

enum class RunStatus : std::uint8_t { Ok, Timeout, MemCap };

constexpr std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::MemCap: return "memcap";
  }
  return "?";
}

/// One row of run statistics.
struct RunRecord {
  std::string instance;
  ReductionVariant variant = ReductionVariant::Elaborated;
  SolverMode mode = SolverMode::Exact;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  double t_find_ms = 0.0;
  std::optional<double> t_prove_ms;
  std::size_t n_kernel = 0;
  std::size_t m_kernel = 0;
  std::size_t n_sq = 0;
  std::size_t m_sq = 0;
  std::size_t offset = 0;
  double n_ratio = 0.0;
  double m_ratio = 0.0;
  RunStatus status = RunStatus::Ok;
};

inline constexpr std::string_view kCsvHeader =
    "instance,variant,mode,seed,size,t_find_ms,t_prove_ms,n_kernel,m_kernel,n_sq,m_sq,offset,status";

inline RunRecord make_record(std::string instance, const StaticGraph& g, const SolverConfig& cfg,
                             const KernelReport& k) {
  RunRecord r;
  r.instance = std::move(instance);
  r.variant = cfg.variant;
  r.mode = cfg.mode;
  r.seed = cfg.seed;
  r.n_kernel = k.n_kernel;
  r.m_kernel = k.m_kernel;
  r.n_sq = k.n_square;
  r.m_sq = k.m_square;
  r.offset = k.offset;
  std::tie(r.n_ratio, r.m_ratio) = kernel_ratios(g, k);
  return r;
}

inline RunRecord make_record(std::string instance, const StaticGraph& g, const SolverConfig& cfg,
                             const Solution& sol) {
  auto r = make_record(std::move(instance), g, cfg, sol.kernel);
  r.size = sol.size;
  r.t_find_ms = 1000.0 * sol.timings.find.count();
  if (sol.proven_optimal) r.t_prove_ms = 1000.0 * sol.timings.total.count();
  r.status = sol.timed_out ? RunStatus::Timeout : RunStatus::Ok;
  return r;
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_csv_row(std::ostream& out, const RunRecord& r) {
  std::ostringstream row;
  row << std::fixed << std::setprecision(3);
  row << csv_escape(r.instance) << ',' << to_string(r.variant) << ',' << to_string(r.mode) << ',' << r.seed << ','
      << r.size << ',' << r.t_find_ms << ',';
  if (r.t_prove_ms) row << *r.t_prove_ms;
  row << ',' << r.n_kernel << ',' << r.m_kernel << ',' << r.n_sq << ',' << r.m_sq << ',' << r.offset << ','
      << to_string(r.status);
  out << row.str() << '\n';
}

inline void write_table(std::ostream& out, const RunRecord& r) {
  std::ostringstream t;
  t << std::fixed << std::setprecision(3);
  auto row = [&](std::string_view key, const auto& value) { t << std::left << std::setw(12) << key << value << '\n'; };
  row("instance", r.instance);
  row("variant", to_string(r.variant));
  row("mode", to_string(r.mode));
  row("seed", r.seed);
  row("|S|", r.size);
  row("t_find_ms", r.t_find_ms);
  if (r.t_prove_ms)
    row("t_prove_ms", *r.t_prove_ms);
  else
    row("t_prove_ms", "-");
  row("n_kernel", r.n_kernel);
  row("m_kernel", r.m_kernel);
  row("n_sq", r.n_sq);
  row("m_sq", r.m_sq);
  row("offset", r.offset);
  std::ostringstream ratios;
  ratios << std::fixed << std::setprecision(2) << r.n_ratio << ' ' << r.m_ratio;
  row("ratio_n_m", ratios.str());
  row("status", to_string(r.status));
  out << t.str();
}

}  // namespace twopack::io
