#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hq/block_construction.hpp"

using namespace hq;

namespace {
struct Fixture {
  explicit Fixture(std::uint32_t q) : geo(q), hg(geo.incidence()), fam(hg) {}
  UnitalGeometry geo;
  IntersectionGraph hg;
  TriangleFamily fam;
};
}  // namespace

TEST(Replacement, RegistryAlphas) {
  EXPECT_EQ(replacement_graph("edge").alpha, Rational(1));
  EXPECT_EQ(replacement_graph("c5").alpha, Rational(4, 5));
  EXPECT_EQ(replacement_graph("path4").alpha, Rational(1));
  EXPECT_EQ(replacement_graph("petersen").alpha, Rational(4, 5));
  for (const auto& name : replacement_registry()) EXPECT_FALSE(replacement_graph(name).valid_for_block_construction());
  EXPECT_THROW(make_replacement("k3", complete_graph(3)), BlockError);
  EXPECT_THROW(replacement_graph("/nonexistent/file"), BlockError);
}

TEST(Blowup, Counts) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(blowup(c5, 1), c5);
  const Graph b = blowup(c5, 2);
  EXPECT_EQ(b.vertex_count(), 10u);
  EXPECT_EQ(b.edge_count(), 20u);
  EXPECT_TRUE(is_triangle_free(b));
  EXPECT_EQ(blowup(petersen_graph(), 3).edge_count(), 15u * 9u);
  EXPECT_THROW(blowup(c5, 0), BlockError);
}

TEST(BlowupMinimum, MatchesFormulaAndCorner) {
  for (const std::string name : {"c5", "path4", "edge"}) {
    const auto f = replacement_graph(name);
    for (std::uint32_t t : {1u, 2u}) {
      const BlowupMinimum r = min_mono_blowup(f, t);
      EXPECT_EQ(Rational(r.exhaustive_min), r.formula) << name << " t=" << t;
      EXPECT_TRUE(r.attained_at_corner());
      EXPECT_GE(r.minimizers, r.corner_minimizers);
      // Global color swap is a symmetry, so minimizers come in pairs.
      EXPECT_EQ(r.minimizers % 2, 0u);
    }
  }
  EXPECT_EQ(min_mono_blowup(replacement_graph("c5"), 1).exhaustive_min, 1u);
  EXPECT_EQ(min_mono_blowup(replacement_graph("c5"), 2).exhaustive_min, 4u);
  EXPECT_EQ(min_mono_blowup(replacement_graph("edge"), 2).exhaustive_min, 0u);
  EXPECT_THROW(min_mono_blowup(replacement_graph("petersen"), 3), BlockError);
}

TEST(BlowupMinimum, AgreesWithMaxCutOfBlowup) {
  const auto f = replacement_graph("c5");
  const Graph g = blowup(f.graph, 3);
  EXPECT_EQ(min_mono_blowup(f, 3).exhaustive_min, maxcut_exact(g).min_monochromatic());
}

TEST(BoundedDraw, UniformAndInRange) {
  std::vector<int> hist(5, 0);
  for (std::uint64_t s = 0; s < 50000; ++s) {
    const auto v = bounded_draw(s, 5);
    ASSERT_LT(v, 5u);
    ++hist[v];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 400);
}

TEST(RandomBlock, ReproducibleSubgraphWithInvariants) {
  Fixture fx(3);
  const auto f = replacement_graph("c5");
  const StarGraph a = random_block(fx.hg, f, 7), b = random_block(fx.hg, f, 7), c = random_block(fx.hg, f, 8);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_FALSE(a.graph == c.graph);
  EXPECT_TRUE(check_star_invariants(a));
  EXPECT_EQ(a.base_edges.size(), a.graph.edge_count());
  // Each vertex has exactly q+1 assignment values, one per clique it lies in.
  for (std::uint32_t v = 0; v < 5; ++v)
    for (auto p : fx.hg.vertex_cliques(v)) EXPECT_LT(a.assignment(v, p), 5u);
}

TEST(RandomBlock, SingleEdgeSplitsEachCliqueBipartitely) {
  Fixture fx(3);
  const auto f = replacement_graph("edge");
  const StarGraph s = random_block(fx.hg, f, 1);
  for (std::uint32_t p = 0; p < fx.hg.cliques().size(); ++p) {
    const auto& c = fx.hg.cliques()[p];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        EXPECT_EQ(s.graph.adjacent(c[i], c[j]), s.assignment(c[i], p) != s.assignment(c[j], p));
  }
}

TEST(RandomBlock, K4FreeAtQ4) {
  Fixture fx(4);
  const auto r = block_experiment(fx.fam, replacement_graph("c5"), 3, 4, true, 2);
  EXPECT_EQ(r.k4_found, 0u);
  EXPECT_EQ(r.invariant_failures, 0u);
}

TEST(RandomBlock, SurvivalAndTriangleMeans) {
  Fixture fx(4);
  for (const std::string name : {"edge", "c5"}) {
    const auto f = replacement_graph(name);
    const auto r = block_experiment(fx.fam, f, 11, 100, false, 2);
    EXPECT_DOUBLE_EQ(r.survival_expected, survival_probability(f));
    EXPECT_TRUE(r.survival.within(r.survival_expected, 3)) << name << " z=" << r.survival.z(r.survival_expected);
    EXPECT_TRUE(r.triangles.within(r.triangles_expected, 3)) << name << " z=" << r.triangles.z(r.triangles_expected);
  }
}

TEST(Concentration, MeanMatchesExpectation) {
  Fixture fx(4);
  const auto edge = replacement_graph("edge");
  EXPECT_DOUBLE_EQ(concentration_expectation(edge, 4), 5.0 / 4.0);
  for (const std::string name : {"edge", "c5"}) {
    const auto f = replacement_graph(name);
    const auto r = concentration_experiment(fx.fam, f, 200, 50, 0.5, 5, 2);
    EXPECT_TRUE(r.mean.within(r.expectation, 3)) << name << " z=" << r.mean.z(r.expectation);
    EXPECT_EQ(r.vacuous, r.expectation < 1);
  }
  EXPECT_THROW(concentration_experiment(fx.fam, edge, 10, 0, 0.5, 1), BlockError);
}

TEST(Concentration, WindowFractionGrowsWithQ) {
  const auto edge = replacement_graph("edge");
  double prev = 0;
  for (std::uint32_t q : {4u, 9u}) {
    Fixture fx(q);
    const auto r = concentration_experiment(fx.fam, edge, 400, 20, 1.0, 3);
    EXPECT_GE(r.in_window, prev);
    prev = r.in_window;
  }
  EXPECT_GT(prev, 0.9);
}

TEST(McDiarmid, BasicProperties) {
  const std::vector<double> c(12, 1.0);
  EXPECT_DOUBLE_EQ(mcdiarmid_bound(3.0, c, 0).value, 2.0);
  const double e1 = mcdiarmid_bound(1.0, c, 0.3).log_value - std::log(2.0);
  const double e2 = mcdiarmid_bound(2.0, c, 0.3).log_value - std::log(2.0);
  EXPECT_NEAR(e2 / e1, 4.0, 1e-12);
  EXPECT_LT(mcdiarmid_bound(1.0, c, 0.4).value, mcdiarmid_bound(1.0, c, 0.3).value);
  EXPECT_LT(mcdiarmid_bound(1.5, c, 0.3).value, mcdiarmid_bound(1.0, c, 0.3).value);
  EXPECT_THROW(mcdiarmid_bound(0, c, 0.1), BlockError);
  EXPECT_THROW(mcdiarmid_bound(1, {1.0, 0.0}, 0.1), BlockError);
}

TEST(McDiarmid, ConcentrationInstanceMatchesClosedForm) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const double n = std::uniform_real_distribution<double>(2, 50)(rng);
    const double m = std::uniform_real_distribution<double>(1, n * n / 4)(rng);
    const double q = std::uniform_int_distribution<int>(2, 100)(rng);
    const double delta = std::uniform_real_distribution<double>(0.01, 1)(rng);
    const double e = 2 * m * (q + 1) / (n * n * n);
    const std::vector<double> c(static_cast<std::size_t>(3 * (q + 1)), 1.0);
    EXPECT_NEAR(mcdiarmid_bound(e, c, delta).log_value, concentration_tail_closed_form(n, m, q, delta).log_value,
                1e-9 * (1 + std::abs(concentration_tail_closed_form(n, m, q, delta).log_value)));
  }
}

TEST(BlockMargin, DeltaStarAtHalf) {
  const double want = (std::sqrt(3.0) - std::sqrt(2.0)) / (std::sqrt(3.0) + std::sqrt(2.0));
  EXPECT_NEAR(delta_star(0.5), want, 1e-15);
  EXPECT_NEAR(want, 0.101, 1e-3);
  // Margin changes sign at delta*.
  EXPECT_GT(theorem2_margin_real(5, 10, 20, 0.5, want * 0.999), 0);
  EXPECT_LT(theorem2_margin_real(5, 10, 20, 0.5, want * 1.001), 0);
  EXPECT_THROW(delta_star(2.0 / 3.0), BlockError);
}

TEST(BlockMargin, ExactMarginSigns) {
  // delta = 0 and alpha < 2/3: positive.
  EXPECT_GT(theorem2_margin_value(4, 10, 20, Rational(1, 2), 0), 0);
  EXPECT_GT(theorem2_margin_value(4, 10, 20, Rational(65, 100), 0), 0);
  // Boundary alpha = 2/3 with delta = 0: exactly zero.
  EXPECT_EQ(theorem2_margin_value(4, 10, 20, Rational(2, 3), 0), 0);
  EXPECT_LT(theorem2_margin_value(4, 10, 20, Rational(2, 3), Rational(1, 100)), 0);
}

TEST(BlockMargin, RejectsInvalidF) {
  EXPECT_THROW(theorem2_margin(4, replacement_graph("c5"), 0.1), BlockError);
  EXPECT_THROW(theorem2_margin(4, replacement_graph("edge"), 0.0), BlockError);
}

TEST(BlockMargin, ToRationalIsExact) {
  EXPECT_EQ(to_rational(0.5), Rational(1, 2));
  EXPECT_EQ(to_rational(0.1), Rational(BigInt(3602879701896397ll), BigInt(1) << 55));
  EXPECT_EQ(to_rational(-3.0), Rational(-3));
  EXPECT_EQ(to_rational(0.0), Rational(0));
}

TEST(Alon, Parameters) {
  const auto a7 = alon_parameters(7);
  EXPECT_TRUE(a7.valid);
  EXPECT_EQ(a7.n, std::ldexp(1.0, 21));
  EXPECT_EQ(a7.m, std::ldexp(63.0, 26));
  EXPECT_NEAR(a7.ratio, 0.647, 1e-3);
  EXPECT_FALSE(alon_parameters(5).valid);
  EXPECT_FALSE(alon_parameters(4).valid);
  EXPECT_FALSE(alon_parameters(1).valid);
  EXPECT_EQ(smallest_valid_alon_k(), 7);
  EXPECT_THROW(alon_parameters(6), BlockError);
  EXPECT_THROW(alon_parameters(0), BlockError);
}

TEST(QuantitativeBound, MonotoneAndConsistent) {
  const auto a = alon_parameters(7);
  const double ds = delta_star(a.ratio);
  const auto r = quantitative_bound(a.n, a.m, a.ratio, ds);
  EXPECT_GE(r.log2_q, r.log2_q_threshold);
  EXPECT_LT(r.log2_q - r.log2_q_threshold, 1.0);
  EXPECT_NEAR(r.log2_f_bound, 4 * r.log2_q, 1e-6);
  // Doubling m with n fixed shrinks the required q.
  const auto doubled = quantitative_bound(a.n, 2 * a.m, a.ratio, ds);
  EXPECT_LT(doubled.log2_q_threshold, r.log2_q_threshold);
  // Smaller delta needs larger q.
  EXPECT_GT(quantitative_bound(a.n, a.m, a.ratio, ds / 2).log2_q_threshold, r.log2_q_threshold);
  // The exact union-bound count is smaller than n q^7, so it never needs a larger q.
  EXPECT_LE(quantitative_bound(a.n, a.m, a.ratio, ds, true).log2_q_threshold, r.log2_q_threshold);
  EXPECT_THROW(quantitative_bound(a.n, a.m, 0.8, 0.01), BlockError);
  EXPECT_THROW(quantitative_bound(a.n, a.m, a.ratio, 2 * ds), BlockError);
}

TEST(QuantitativeBound, SmallScaleExactScanGivesPrimePower) {
  // A dense toy parameter set so the threshold is small enough to scan.
  const auto r = quantitative_bound(2, 1, 0.5, delta_star(0.5));
  ASSERT_GT(r.q_exact, 0u);
  EXPECT_TRUE(is_prime_power(r.q_exact));
}
