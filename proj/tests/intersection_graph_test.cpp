#include <gtest/gtest.h>

#include "hq/intersection_graph.hpp"

using namespace hq;

struct SrgCase {
  std::uint32_t q;
  std::size_t n, d, lambda, mu;
};

class SrgParams : public ::testing::TestWithParam<SrgCase> {};

TEST_P(SrgParams, MatchesExpectedParameters) {
  const SrgCase c = GetParam();
  UnitalGeometry geo(c.q);
  IntersectionGraph hg(geo.incidence());
  const SrgReport r = verify_srg(hg, 2);
  EXPECT_EQ(r.n, c.n);
  EXPECT_EQ(r.d, c.d);
  EXPECT_EQ(r.lambda_min, c.lambda);
  EXPECT_EQ(r.lambda_max, c.lambda);
  EXPECT_EQ(r.mu_min, c.mu);
  EXPECT_EQ(r.mu_max, c.mu);
  EXPECT_TRUE(r.pass());
  const HqParameters p = HqParameters::of(c.q);
  EXPECT_EQ(p.n, c.n);
  EXPECT_EQ(p.d, c.d);
  EXPECT_EQ(p.lambda, c.lambda);
  EXPECT_EQ(p.mu, c.mu);
  EXPECT_TRUE(srg_certificate(r).passed());
}

INSTANTIATE_TEST_SUITE_P(SmallQ, SrgParams,
                         ::testing::Values(SrgCase{2, 12, 9, 6, 9}, SrgCase{3, 63, 32, 16, 16},
                                           SrgCase{4, 208, 75, 30, 25}));

TEST(IntersectionGraph, EdgePointAndMeet) {
  UnitalGeometry geo(3);
  IntersectionGraph hg(geo.incidence());
  const auto& inc = geo.incidence();
  for (std::uint32_t u = 0; u < hg.vertex_count(); ++u)
    for (std::uint32_t v = u + 1; v < hg.vertex_count(); ++v) {
      const auto p = hg.edge_point(u, v);
      ASSERT_EQ(p.has_value(), hg.adjacent(u, v));
      if (!p) continue;
      const auto& a = inc.secant_points[u];
      const auto& b = inc.secant_points[v];
      EXPECT_TRUE(std::binary_search(a.begin(), a.end(), *p));
      EXPECT_TRUE(std::binary_search(b.begin(), b.end(), *p));
    }
}

TEST(IntersectionGraph, EveryCliqueIsMaximalOfOrderQSquared) {
  UnitalGeometry geo(3);
  IntersectionGraph hg(geo.incidence());
  ASSERT_EQ(hg.cliques().size(), 28u);
  for (const auto& c : hg.cliques()) {
    ASSERT_EQ(c.size(), 9u);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(hg.adjacent(c[i], c[j]));
    for (std::uint32_t w = 0; w < hg.vertex_count(); ++w) {
      if (std::binary_search(c.begin(), c.end(), w)) continue;
      bool all = true;
      for (auto x : c) all = all && hg.adjacent(w, x);
      EXPECT_FALSE(all);
    }
  }
}

class K4Structure : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(K4Structure, EveryK4HasThreeVerticesInACommonClique) {
  UnitalGeometry geo(GetParam());
  IntersectionGraph hg(geo.incidence());
  const K4Tally t = scan_k4(hg, K4Mode::full(), 2);
  EXPECT_EQ(t.k4_total, count_k4(hg.graph()));
  EXPECT_EQ(t.counterexamples, 0u);
  EXPECT_EQ(t.onan, 0u);
  EXPECT_EQ(t.three_in_clique, t.k4_total);
  EXPECT_TRUE(verify_k4_structure(hg, K4Mode::full(), 2).passed());
}

INSTANTIATE_TEST_SUITE_P(SmallQ, K4Structure, ::testing::Values(2u, 3u, 4u));

TEST(K4Structure, SampledModeIsReproducible) {
  UnitalGeometry geo(4);
  IntersectionGraph hg(geo.incidence());
  const auto a = scan_k4(hg, K4Mode::sampled(7, 500));
  const auto b = scan_k4(hg, K4Mode::sampled(7, 500));
  EXPECT_EQ(a.k4_total, b.k4_total);
  EXPECT_GT(a.k4_total, 0u);
  EXPECT_EQ(a.counterexamples, 0u);
}

TEST(K4Shape, FourSecantsThroughOnePoint) {
  UnitalGeometry geo(3);
  IntersectionGraph hg(geo.incidence());
  const auto& c = hg.cliques()[0];
  const K4Shape s = k4_shape(hg, c[0], c[1], c[2], c[3]);
  EXPECT_EQ(s.degenerate_triangles, 4u);
  EXPECT_TRUE(s.three_in_clique());
}
