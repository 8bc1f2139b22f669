#include <gtest/gtest.h>

#include <random>

#include "mcsdal/graph.hpp"
#include "test_util.hpp"

namespace mcsdal {
namespace {

using testing::complete_graph;
using testing::path_graph;
using testing::star_graph;

TEST(ParseLad, SingleEdge) {
  Graph g = parse_lad("2\n1 1\n1 0");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(ParseLad, Path) {
  EXPECT_EQ(parse_lad("3\n1 1\n2 0 2\n1 1"), path_graph(3));
}

TEST(ParseLad, IsolatedVertex) {
  Graph g = parse_lad("1\n0");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseLad, DuplicateListingsCollapse) {
  Graph g = parse_lad("2\n2 1 1\n1 0");
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseLad, Errors) {
  EXPECT_THROW(parse_lad("2\n1 2\n0"), ParseError);    // index >= n
  EXPECT_THROW(parse_lad("2\n1 0\n0"), ParseError);    // self-loop
  EXPECT_THROW(parse_lad("2\n1 x\n1 0"), ParseError);  // malformed token
  EXPECT_THROW(parse_lad("2\n1 1"), ParseError);       // truncated
  EXPECT_THROW(parse_lad("1\n0 7"), ParseError);       // trailing garbage
  EXPECT_THROW(parse_lad(""), ParseError);
}

TEST(ParseLad, ErrorPosition) {
  try {
    parse_lad("3\n1 1\n2 0 9\n1 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.token(), 3u);
  }
}

TEST(ParseLad, DirectedRejectedUnlessSymmetrized) {
  const char* directed = "3\n1 1\n1 2\n0";
  EXPECT_THROW(parse_lad(directed), ParseError);
  Graph g = parse_lad(directed, {.symmetrize = true});
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseDimacs, Basic) {
  Graph g = parse_dimacs("p edge 2 1\ne 1 2");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(parse_dimacs("p edge 3 0").edge_count(), 0u);
  EXPECT_EQ(parse_dimacs("p edge 3 0").size(), 3u);
  EXPECT_EQ(parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\ne 2 1"), path_graph(3));
}

TEST(ParseDimacs, Errors) {
  EXPECT_THROW(parse_dimacs("e 1 2"), ParseError);
  EXPECT_THROW(parse_dimacs(""), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 0 1"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 3"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 2 2"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 z"), ParseError);
}

TEST(Degree, Examples) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(degree(p3, 1), 2u);
  EXPECT_EQ(degree(p3, 0), 1u);
  EXPECT_EQ(degree(parse_lad("1\n0"), 0), 0u);
}

TEST(LeafNeighbours, Examples) {
  EXPECT_EQ(leaf_neighbours(star_graph(3), 0), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(leaf_neighbours(path_graph(3), 1), (std::vector<VertexId>{0, 2}));
  Graph k3 = complete_graph(3);
  for (VertexId v = 0; v < 3; ++v) EXPECT_TRUE(leaf_neighbours(k3, v).empty());
}

TEST(GraphProperties, RoundTripSymmetryHandshake) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const double p = (rng() % 11) / 10.0;
    Graph g = testing::random_graph(n, p, rng);
    EXPECT_EQ(parse_lad(to_lad(g)), g);
    std::size_t deg_sum = 0;
    for (VertexId u = 0; u < n; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      deg_sum += g.degree(u);
      for (VertexId v = 0; v < n; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    EXPECT_EQ(deg_sum, 2 * g.edge_count());
  }
}

TEST(WriteLad, Format) {
  EXPECT_EQ(to_lad(path_graph(3)), "3\n1 1\n2 0 2\n1 1\n");
}

}  // namespace
}  // namespace mcsdal
