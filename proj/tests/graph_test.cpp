#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hq/graph.hpp"

using namespace hq;

static Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  g.finalize();
  return g;
}

TEST(Graph, CanonicalEdgeIds) {
  Graph g = complete_graph(5);
  ASSERT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(4), (Edge{1, 2}));
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edge(id);
    EXPECT_LT(u, v);
    EXPECT_EQ(g.edge_id(u, v), id);
    EXPECT_EQ(g.edge_id(v, u), id);
  }
  EXPECT_THROW(cycle_graph(5).edge_id(0, 2), GraphError);
}

TEST(Graph, RejectsLoopsAndRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 3), GraphError);
}

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(petersen_graph().edge_count(), 15u);
  EXPECT_TRUE(is_triangle_free(petersen_graph()));
  EXPECT_TRUE(is_triangle_free(cycle_graph(5)));
  EXPECT_EQ(count_triangles(complete_graph(4)), 4u);
  EXPECT_EQ(count_k4(complete_graph(6)), 15u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
}

TEST(Graph6, KnownEncodings) {
  // Reference strings from the graph6 format description.
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(petersen_graph()).size(), 1u + 8u);
  Graph p5 = path_graph(5);
  EXPECT_EQ(from_graph6(to_graph6(p5)), p5);
  EXPECT_THROW(from_graph6("C~~"), GraphError);
  EXPECT_THROW(from_graph6(""), GraphError);
}

TEST(Graph6, RoundTripRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed * 7;  // crosses the 62/63 header boundary
    Graph g = random_graph(n, 0.3, seed);
    Graph h = from_graph6(to_graph6(g));
    ASSERT_EQ(h, g);
    ASSERT_EQ(h.edge_count(), g.edge_count());
  }
}

TEST(EdgeList, RoundTripAndErrors) {
  Graph g = random_graph(40, 0.2, 7);
  std::istringstream is(edge_list_string(g));
  EXPECT_EQ(read_edge_list(is), g);
  std::istringstream bad("n 3\n0 5\n");
  EXPECT_THROW(read_edge_list(bad), GraphError);
  std::istringstream junk("0 x\n");
  EXPECT_THROW(read_edge_list(junk), GraphError);
}

TEST(K4, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(30, 0.5, seed);
    std::uint64_t brute = 0;
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        for (std::uint32_t c = b + 1; c < n; ++c)
          for (std::uint32_t d = c + 1; d < n; ++d)
            brute += g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
                     g.adjacent(b, d) && g.adjacent(c, d);
    EXPECT_EQ(count_k4(g), brute);
  }
}

TEST(K4, WideGraphsCrossWordBoundaries) {
  Graph g = complete_graph(130);
  EXPECT_EQ(count_k4(g), 130ull * 129 * 128 * 127 / 24);
}
