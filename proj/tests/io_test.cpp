#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "twopack/io.hpp"

namespace twopack {
namespace {

using namespace twopack::testing;

std::size_t error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected ParseError";
  return 0;
}

TEST(ParseMetis, Examples) {
  EXPECT_EQ(io::parse_metis("3 2\n2\n1 3\n2\n"), path(3));
  EXPECT_EQ(io::parse_metis("2 1\n2\n1\n"), path(2));
  EXPECT_EQ(error_line([] { io::parse_metis("3 2\n2\n1\n2\n"); }), 4u);
}

TEST(ParseMetis, CommentsBlankLinesAndFormatField) {
  EXPECT_EQ(io::parse_metis("% comment\n3 2 0\n2\n% inside\n1 3\n2\n\n"), path(3));
  // A blank vertex line is an isolated vertex.
  const auto g = io::parse_metis("3 1\n2\n1\n\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(ParseMetis, Diagnostics) {
  EXPECT_EQ(error_line([] { io::parse_metis("x y\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_metis("3\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_metis("2 1 1\n2\n1\n"); }), 1u);       // weighted
  EXPECT_EQ(error_line([] { io::parse_metis("2 1\n3\n1\n"); }), 2u);         // out of range
  EXPECT_EQ(error_line([] { io::parse_metis("2 1\n2\n0\n"); }), 3u);         // zero ID
  EXPECT_EQ(error_line([] { io::parse_metis("2 1\n1\n\n"); }), 2u);          // self-loop
  EXPECT_EQ(error_line([] { io::parse_metis("2 1\n2 2\n1\n"); }), 2u);       // duplicate
  EXPECT_EQ(error_line([] { io::parse_metis("2 2\n2\n1\n"); }), 1u);         // m mismatch
  EXPECT_EQ(error_line([] { io::parse_metis("3 2\n2\n1 3\n"); }), 3u);       // missing line
  EXPECT_EQ(error_line([] { io::parse_metis("2 1\n2\n1\n1\n"); }), 4u);      // trailing data
  EXPECT_EQ(error_line([] { io::parse_metis("2 1\n2\n1 a\n"); }), 3u);       // bad token
  EXPECT_THROW(io::parse_metis(""), ParseError);
}

TEST(ParseEdgeList, Examples) {
  EXPECT_EQ(io::parse_edgelist("0 1\n1 2\n"), path(3));
  EXPECT_EQ(error_line([] { io::parse_edgelist("0 0\n"); }), 1u);
  EXPECT_EQ(io::parse_edgelist("0 1\n0 1\n"), path(2));
  EXPECT_EQ(io::parse_edgelist("# header\n1 2\n2 3\n", 1), path(3));
  EXPECT_EQ(error_line([] { io::parse_edgelist("0 1\n1 b\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_edgelist("0 1 2\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_edgelist("0 1\n", 1); }), 1u);
  EXPECT_EQ(io::parse_edgelist("").n(), 0u);
}

TEST(Io, RoundTripProperty) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto g = gnp(std::uniform_int_distribution<std::size_t>(1, 30)(rng), 0.2, rng);
    std::ostringstream metis;
    io::write_metis(metis, g);
    EXPECT_EQ(io::parse_metis(metis.str()), g);

    // Edge lists cannot carry trailing isolated vertices, so compare the
    // re-parse of the written form with itself.
    const unsigned base = i % 2;
    std::ostringstream el;
    io::write_edgelist(el, g, base);
    const auto once = io::parse_edgelist(el.str(), base);
    std::ostringstream el2;
    io::write_edgelist(el2, once, base);
    EXPECT_EQ(io::parse_edgelist(el2.str(), base), once);
    EXPECT_EQ(once.edges(), g.edges());
  }
}

TEST(RunRecord, CsvRowFollowsHeader) {
  SolverConfig cfg;
  auto g = path(4);
  const auto sol = solve_m2s(g, cfg);
  const auto r = io::make_record("p4", g, cfg, sol);
  std::ostringstream out;
  io::write_csv_row(out, r);
  const auto row = out.str();
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(io::kCsvHeader.begin(), io::kCsvHeader.end(), ','));
  EXPECT_EQ(row.rfind("p4,elaborated,exact,0,2,", 0), 0u);
  EXPECT_NE(row.find(",0,0,0,0,2,ok\n"), std::string::npos);
}

}  // namespace
}  // namespace twopack
