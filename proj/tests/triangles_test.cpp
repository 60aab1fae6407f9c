#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hq/triangles.hpp"

using namespace hq;

namespace {
struct Fixture {
  explicit Fixture(std::uint32_t q) : geo(q), hg(geo.incidence()) {}
  UnitalGeometry geo;
  IntersectionGraph hg;
};
}  // namespace

TEST(TriangleFormula, KnownSizes) {
  EXPECT_EQ(family_size_formula(2), 72u);
  EXPECT_EQ(family_size_formula(3), 3024u);
  EXPECT_EQ(family_size_formula(4), 41600u);
  EXPECT_EQ(triangles_per_vertex_formula(4), 600u);
}

class FamilyBuild : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FamilyBuild, MatchesBruteForceClassification) {
  Fixture f(GetParam());
  const TriangleFamily fam = build_family(f.hg, true);
  const auto list = fam.explicit_triangles();
  EXPECT_EQ(list.size(), fam.total());
  for (const auto& t : list) EXPECT_EQ(classify_triangle(f.hg, t[0], t[1], t[2]), TriangleKind::non_degenerate);
  // Every edge lies in exactly q^2 members.
  std::map<std::size_t, std::uint32_t> per_edge;
  const Graph& g = f.hg.graph();
  for (const auto& t : list) {
    ++per_edge[g.edge_id(t[0], t[1])];
    ++per_edge[g.edge_id(t[0], t[2])];
    ++per_edge[g.edge_id(t[1], t[2])];
  }
  ASSERT_EQ(per_edge.size(), g.edge_count());
  const std::uint32_t q = GetParam();
  for (auto [e, c] : per_edge) EXPECT_EQ(c, q * q) << e;
}

INSTANTIATE_TEST_SUITE_P(SmallQ, FamilyBuild, ::testing::Values(2u, 3u, 4u));

TEST(FamilyBuild, Q5WithoutBruteForce) {
  Fixture f(5);
  const TriangleFamily fam = build_family(f.hg, false);
  EXPECT_EQ(fam.total(), family_size_formula(5));
  EXPECT_EQ(fam.triangles_at(0), triangles_per_vertex_formula(5));
}

TEST(Triangles, PerVertexCountAtQ4) {
  Fixture f(4);
  const TriangleFamily fam(f.hg);
  for (std::uint32_t v = 0; v < f.hg.vertex_count(); ++v) ASSERT_EQ(fam.triangles_at(v), 600u);
}

TEST(Triangles, ClassificationIsPermutationInvariant) {
  Fixture f(3);
  const Graph& g = f.hg.graph();
  int checked = 0;
  for (std::size_t id = 0; id < g.edge_count() && checked < 2000; ++id) {
    auto [a, b] = g.edge(id);
    for (auto c : g.neighbors(b)) {
      if (c == a || !g.adjacent(a, c)) continue;
      std::array<std::uint32_t, 3> t{a, b, c};
      std::sort(t.begin(), t.end());
      const TriangleKind k = classify_triangle(f.hg, t[0], t[1], t[2]);
      do {
        ASSERT_EQ(classify_triangle(f.hg, t[0], t[1], t[2]), k);
      } while (std::next_permutation(t.begin(), t.end()));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Triangles, NonAdjacentTripleIsNotATriangle) {
  Fixture f(3);
  const Graph& g = f.hg.graph();
  for (std::uint32_t v = 1; v < g.vertex_count(); ++v)
    if (!g.adjacent(0, v)) {
      EXPECT_EQ(classify_triangle(f.hg, 0, v, g.neighbors(0)[0] == v ? 2 : g.neighbors(0)[0]),
                TriangleKind::not_a_triangle);
      break;
    }
  EXPECT_THROW(classify_triangle(f.hg, 0, 0, 1), GraphError);
}

struct NbhdCase {
  std::uint32_t q;
  std::size_t big_cliques, big_order, small_cliques, small_order;
};

class NbhdDecomposition : public ::testing::TestWithParam<NbhdCase> {};

TEST_P(NbhdDecomposition, SplitsIntoExpectedCliques) {
  const NbhdCase c = GetParam();
  Fixture f(c.q);
  const TriangleFamily fam(f.hg);
  for (std::uint32_t v : {0u, 1u, static_cast<std::uint32_t>(f.hg.vertex_count() - 1)}) {
    const Certificate cert = verify_nbhd_decomposition(fam, v);
    EXPECT_TRUE(cert.passed()) << v;
    EXPECT_EQ(cert.get("big_cliques"), std::to_string(c.big_cliques));
    EXPECT_EQ(cert.get("big_clique_order"), std::to_string(c.big_order));
    EXPECT_EQ(cert.get("spanning_cliques"), std::to_string(c.small_cliques));
    EXPECT_EQ(cert.get("spanning_clique_order"), std::to_string(c.small_order));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallQ, NbhdDecomposition,
                         ::testing::Values(NbhdCase{3, 4, 8, 24, 4}, NbhdCase{4, 5, 15, 60, 5}));

TEST(NoK4InFamily, ExhaustiveSmallQ) {
  for (std::uint32_t q : {2u, 3u}) {
    Fixture f(q);
    const TriangleFamily fam(f.hg);
    const Certificate c = verify_no_k4_in_family(fam, K4Mode::full());
    EXPECT_TRUE(c.passed()) << q;
    EXPECT_EQ(c.get("k4_checked"), std::to_string(count_k4(f.hg.graph())));
  }
}

TEST(NoK4InFamily, SampledQ5) {
  Fixture f(5);
  const TriangleFamily fam(f.hg);
  EXPECT_TRUE(verify_no_k4_in_family(fam, K4Mode::sampled(3, 300)).passed());
}

TEST(Fans, ThreeFansBijectWithTriangles) {
  Fixture f(3);
  const TriangleFamily fam(f.hg);
  const FanFamily fans = enumerate_fans(fam, 3, ~0ull);
  ASSERT_EQ(fans.fans.size(), fan_count_formula(3, 3));
  EXPECT_EQ(fans.fans.size(), 9072u);
  std::map<Triangle, int> per_triangle;
  for (const auto& fan : fans.fans) {
    ASSERT_EQ(fan.concurrent.size(), 2u);
    Triangle t{fan.transversal, fan.concurrent[0], fan.concurrent[1]};
    std::sort(t.begin(), t.end());
    ASSERT_EQ(classify_triangle(f.hg, t[0], t[1], t[2]), TriangleKind::non_degenerate);
    ++per_triangle[t];
  }
  EXPECT_EQ(per_triangle.size(), fam.total());
  for (auto [t, c] : per_triangle) EXPECT_EQ(c, 3);
}

TEST(Fans, StructureAndLimits) {
  Fixture f(4);
  const TriangleFamily fam(f.hg);
  const auto& inc = f.hg.incidence();
  const FanFamily fans = enumerate_fans(fam, 5, 50);
  EXPECT_EQ(fans.fans.size(), 50u);
  for (const auto& fan : fans.fans) {
    const auto& tp = inc.secant_points[fan.transversal];
    EXPECT_FALSE(std::binary_search(tp.begin(), tp.end(), fan.apex));
    std::set<std::uint32_t> meets;
    for (auto s : fan.concurrent) {
      const auto& sp = inc.secant_points[s];
      EXPECT_TRUE(std::binary_search(sp.begin(), sp.end(), fan.apex));
      meets.insert(f.hg.meet(s, fan.transversal));
    }
    EXPECT_EQ(meets.size(), fan.concurrent.size());
  }
  EXPECT_TRUE(enumerate_fans(fam, 4, 0).fans.empty());
  EXPECT_THROW(enumerate_fans(fam, 6, 1), TriangleError);
  EXPECT_THROW(enumerate_fans(fam, 2, 1), TriangleError);
  std::uint64_t count = 0;
  for_each_fan(fam, 4, [&](const Fan&) { return ++count, true; });
  EXPECT_EQ(count, fan_count_formula(4, 4));
}
