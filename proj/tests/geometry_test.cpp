#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hq/geometry.hpp"

using namespace hq;

TEST(ProjectivePlane, PointAndLineCounts) {
  QuadraticExtension f2(2), f3(3);
  EXPECT_EQ(ProjectivePlane(f2.ext()).size(), 21u);
  EXPECT_EQ(ProjectivePlane(f3.ext()).size(), 91u);
}

TEST(ProjectivePlane, CanonicalIdsRoundTrip) {
  QuadraticExtension fq(3);
  ProjectivePlane plane(fq.ext());
  for (std::uint32_t id = 0; id < plane.size(); ++id) {
    const Triple t = plane.coords(id);
    EXPECT_EQ(plane.id_of(t), id);
    // Scaling by any nonzero element gives the same point.
    for (std::uint32_t s = 1; s < fq.ext().order(); ++s) {
      const Triple scaled{fq.ext().mul(t[0], s), fq.ext().mul(t[1], s), fq.ext().mul(t[2], s)};
      EXPECT_EQ(plane.id_of(scaled), id);
    }
  }
  EXPECT_THROW(plane.id_of({0, 0, 0}), GeometryError);
}

class PlaneAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PlaneAxioms, LinesHaveQ2PlusOnePointsAndPairsDetermineLines) {
  QuadraticExtension fq(GetParam());
  ProjectivePlane plane(fq.ext());
  const std::uint32_t Q = plane.order();
  for (std::uint32_t l = 0; l < plane.size(); ++l) {
    std::uint32_t on = 0;
    for (std::uint32_t p = 0; p < plane.size(); ++p) on += plane.incident(p, l);
    ASSERT_EQ(on, Q + 1);
  }
  for (std::uint32_t a = 0; a < plane.size(); ++a) {
    for (std::uint32_t b = a + 1; b < plane.size(); ++b) {
      std::uint32_t common = 0, found = 0;
      for (std::uint32_t l = 0; l < plane.size(); ++l)
        if (plane.incident(a, l) && plane.incident(b, l)) {
          ++common;
          found = l;
        }
      ASSERT_EQ(common, 1u);
      ASSERT_EQ(plane.join(a, b), found);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallQ, PlaneAxioms, ::testing::Values(2u, 3u));

TEST(Unital, Q2HasNinePoints) {
  UnitalGeometry geo(2);
  EXPECT_EQ(geo.incidence().point_count(), 9u);
  EXPECT_EQ(geo.incidence().secant_count(), 12u);
}

TEST(Unital, Q3Has63Secants) { EXPECT_EQ(UnitalGeometry(3).incidence().secant_count(), 63u); }

TEST(Unital, Q4Has208SecantsOfFivePoints) {
  UnitalGeometry geo(4);
  EXPECT_EQ(geo.incidence().secant_count(), 208u);
  for (const auto& pts : geo.incidence().secant_points) EXPECT_EQ(pts.size(), 5u);
}

class UnitalStructure : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(UnitalStructure, TangentsSecantsAndPointDegrees) {
  const std::uint32_t q = GetParam();
  UnitalGeometry geo(q);
  const auto& u = geo.incidence();
  const auto& plane = geo.plane();
  ASSERT_EQ(u.point_count(), UnitalCounts::unital_points(q));
  ASSERT_EQ(u.secant_count(), UnitalCounts::secants(q));
  EXPECT_EQ(u.tangents.size(), q * q * q + 1);

  std::set<std::uint32_t> unital(u.unital_points.begin(), u.unital_points.end());
  // Hermitian form evaluated through the standalone base field as a second route.
  const auto& fq = geo.fields();
  for (std::uint32_t id = 0; id < plane.size(); ++id) {
    const Triple x = plane.coords(id);
    std::uint32_t form = 0;
    for (auto c : x) form = fq.base().add(form, fq.norm(fq.ext().element(c)).code());
    EXPECT_EQ(form == 0, unital.count(id) == 1);
  }
  for (std::size_t a = 0; a < u.point_count(); ++a) {
    EXPECT_EQ(u.point_secants[a].size(), q * q);
    std::uint32_t tangents_through = 0;
    for (auto t : u.tangents) tangents_through += plane.incident(u.unital_points[a], t);
    EXPECT_EQ(tangents_through, 1u);
    EXPECT_TRUE(plane.incident(u.unital_points[a], u.point_tangent[a]));
  }
  for (std::size_t s = 0; s < u.secant_count(); ++s) {
    ASSERT_EQ(u.secant_points[s].size(), q + 1);
    for (auto a : u.secant_points[s]) EXPECT_TRUE(plane.incident(u.unital_points[a], u.secants[s]));
  }
  // Every pair of unital points lies on exactly one secant.
  for (std::uint32_t a = 0; a < u.point_count(); ++a)
    for (std::uint32_t b = 0; b < u.point_count(); ++b) {
      if (a == b) continue;
      const auto s = u.secant_through(a, b);
      const auto& pts = u.secant_points[s];
      EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), a) && std::binary_search(pts.begin(), pts.end(), b));
    }
}

INSTANTIATE_TEST_SUITE_P(SmallQ, UnitalStructure, ::testing::Values(2u, 3u, 4u));

TEST(Unital, IncidenceExportFormat) {
  UnitalGeometry geo(2);
  std::ostringstream os;
  write_incidence(os, geo.incidence());
  std::istringstream is(os.str());
  std::uint32_t q, np, ns;
  is >> q >> np >> ns;
  EXPECT_EQ(q, 2u);
  EXPECT_EQ(np, 9u);
  EXPECT_EQ(ns, 12u);
  std::string line;
  std::getline(is, line);
  int lines = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    int count = 0, id;
    while (ls >> id) ++count;
    EXPECT_EQ(count, 3);
    ++lines;
  }
  EXPECT_EQ(lines, 12);
}
