// Command-line entry point: solve maximum 2-packing set on one graph file.
//
// Exit codes: 0 ok, 1 parse/usage error, 2 exact search timed out (the best
// solution found is still written), 3 square graph exceeded the edge cap.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "twopack/io.hpp"
#include "twopack/pipeline.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kTimeout = 2, kMemCap = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const twopack::io::RunRecord& record, const std::string& stats) {
  if (stats == "csv") {
    std::cout << twopack::io::kCsvHeader << '\n';
    twopack::io::write_csv_row(std::cout, record);
  } else {
    twopack::io::write_table(std::cout, record);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace twopack;

  CLI::App app{"Maximum 2-packing set solver: reduce, square, solve MIS"};
  std::string input;
  std::string output;
  std::string format_name = "metis";
  std::string variant_name = "elaborated";
  std::string mode_name = "exact";
  std::string stats = "table";
  unsigned base = 0;
  std::uint64_t node_budget = 0;
  SolverConfig cfg;
  bool kernel_only = false;

  const std::map<std::string, io::GraphFormat> formats{{"metis", io::GraphFormat::Metis},
                                                       {"edgelist", io::GraphFormat::EdgeList}};
  const std::map<std::string, ReductionVariant> variants{{"2pack", ReductionVariant::TwoPack},
                                                         {"core", ReductionVariant::Core},
                                                         {"elaborated", ReductionVariant::Elaborated}};
  const std::map<std::string, SolverMode> modes{{"exact", SolverMode::Exact}, {"heuristic", SolverMode::Heuristic}};

  app.add_option("--input", input, "Graph file")->required()->check(CLI::ExistingFile);
  app.add_option("--format", format_name, "Input format")->check(CLI::IsMember(formats));
  app.add_option("--base", base, "First vertex ID of an edge list (0 or 1)")->check(CLI::Range(0u, 1u));
  app.add_option("--reductions", variant_name, "Reduction variant")->check(CLI::IsMember(variants));
  app.add_option("--solver", mode_name, "MIS back end")->check(CLI::IsMember(modes));
  app.add_option("--time-limit", cfg.time_limit, "Seconds")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--edge-cap", cfg.edge_cap, "Maximum number of square-graph edges")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", node_budget, "Search-node budget instead of the time limit (reproducible runs)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", output, "Write solution vertex IDs here, one per line");
  app.add_option("--stats", stats, "Statistics layout")->check(CLI::IsMember({"table", "csv"}));
  app.add_flag("--verify", cfg.verify, "Check the solution is a 2-packing set");
  app.add_flag("--kernel-only", kernel_only, "Report kernel statistics and stop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const io::GraphFormat format = formats.at(format_name);
  cfg.variant = variants.at(variant_name);
  cfg.mode = modes.at(mode_name);
  if (node_budget > 0) cfg.node_budget = node_budget;
  const std::string name = std::filesystem::path(input).stem().string();
  const unsigned out_base = format == io::GraphFormat::Metis ? 1 : base;

  StaticGraph graph;
  try {
    graph = io::parse_graph(read_file(input), format, base);
  } catch (const std::exception& e) {
    std::cerr << input << ": " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (kernel_only) {
      const auto report = kernelize(graph, cfg);
      emit(io::make_record(name, graph, cfg, report), stats);
      return kOk;
    }

    const Solution sol = solve_m2s(graph, cfg);
    auto record = io::make_record(name, graph, cfg, sol);
    if (!output.empty()) {
      std::ofstream out(output);
      if (!out) {
        std::cerr << "cannot write " << output << '\n';
        return kUsage;
      }
      io::write_solution(out, sol.vertices, out_base);
    }
    emit(record, stats);
    return sol.timed_out ? kTimeout : kOk;
  } catch (const MemoryCapError& e) {
    auto record = io::make_record(name, graph, cfg, e.partial());
    record.status = io::RunStatus::MemCap;
    emit(record, stats);
    std::cerr << e.what() << '\n';
    return kMemCap;
  }
}
