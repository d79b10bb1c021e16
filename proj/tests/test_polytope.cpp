#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tropcong/error.hpp"
#include "tropcong/polytope.hpp"

using namespace tropcong;

namespace {

std::vector<IntVec> random_points(std::mt19937_64& rng, std::size_t count, std::size_t n, int bound) {
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < count; ++i) {
    IntVec p(n);
    for (auto& c : p) c = static_cast<int>(rng() % (2 * bound + 1)) - bound;
    pts.push_back(p);
  }
  return pts;
}

LatticePolytope square() { return LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2); }

}  // namespace

TEST(Hull, PlanarMatchesCaratheodoryOracle) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    auto pts = random_points(rng, 1 + rng() % 9, 2, 4);
    auto hull = LatticePolytope::hull(pts, 2);
    EXPECT_EQ(hull.vertices(), oracle::hull_2d(pts));
  }
}

TEST(Hull, LpRouteMatchesPlanarRoute) {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 150; ++it) {
    auto pts = random_points(rng, 1 + rng() % 8, 2, 3);
    EXPECT_EQ(hull_vertices_lp(pts, 2), LatticePolytope::hull(pts, 2).vertices());
  }
}

TEST(Hull, CubeInThreeDimensions) {
  std::vector<IntVec> pts;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) pts.push_back({a, b, c});
  auto cube = LatticePolytope::hull(pts, 3);
  EXPECT_EQ(cube.vertices().size(), 8u);
  EXPECT_EQ(cube.facets().inequalities().size(), 6u);
  EXPECT_EQ(cube.lattice_points(), [&] {
    auto s = pts;
    std::sort(s.begin(), s.end());
    return s;
  }());
}

TEST(Polytope, LatticePointExamples) {
  EXPECT_EQ(square().lattice_points().size(), 4u);
  auto seg = LatticePolytope::hull({{0, 0}, {2, 2}}, 2);
  EXPECT_EQ(seg.lattice_points(), (std::vector<IntVec>{{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_EQ(seg.affine_dim(), 1);
  EXPECT_TRUE(LatticePolytope(2).lattice_points().empty());
  EXPECT_EQ(LatticePolytope(2).affine_dim(), -1);
}

TEST(Polytope, LatticePointsAgreeWithMembership) {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng() % 3;
    auto pts = random_points(rng, 1 + rng() % 6, n, 3);
    auto p = LatticePolytope::hull(pts, n);
    auto lp = p.lattice_points();
    std::size_t count = 0;
    IntVec x(n, Integer(-3));
    for (;;) {
      if (in_convex_hull(p.vertices(), to_rational(x))) {
        ++count;
        EXPECT_TRUE(std::binary_search(lp.begin(), lp.end(), x));
      }
      std::size_t i = 0;
      while (i < n && x[i] == Integer(3)) x[i++] = -3;
      if (i == n) break;
      x[i] += Integer(1);
    }
    EXPECT_EQ(count, lp.size());
  }
}

TEST(Polytope, MinkowskiAndDiameter) {
  auto e1 = LatticePolytope::hull({{0, 0}, {1, 0}}, 2);
  auto e2 = LatticePolytope::hull({{0, 0}, {0, 1}}, 2);
  EXPECT_EQ(minkowski_sum(e1, e2), square());
  EXPECT_EQ(diameter_squared(square()), Integer(2));
  EXPECT_EQ(diameter_squared(LatticePolytope::hull({{0, 0}, {3, 4}}, 2)), Integer(25));
  EXPECT_EQ(diameter_squared(LatticePolytope::hull({{7, 7}}, 2)), Integer(0));
  EXPECT_TRUE(minkowski_sum(e1, LatticePolytope(2)).empty());
}

TEST(Polytope, FitsInTranslateExamples) {
  auto q = LatticePolytope::hull({{0, 0}, {1, 1}}, 2);
  auto p = LatticePolytope::hull({{5, 5}, {6, 6}}, 2);
  EXPECT_EQ(fits_in_translate(q, p), (IntVec{-5, -5}));
  EXPECT_EQ(fits_in_translate(square(), p), std::nullopt);
  auto pt = LatticePolytope::hull({{3, -1}}, 2);
  EXPECT_TRUE(fits_in_translate(pt, square()).has_value());
  EXPECT_THROW(fits_in_translate(LatticePolytope(2), square()), PreconditionError);
}

TEST(Polytope, FitsInTranslateAgainstExhaustiveShifts) {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 200; ++it) {
    auto q = LatticePolytope::hull(random_points(rng, 1 + rng() % 3, 2, 2), 2);
    auto p = LatticePolytope::hull(random_points(rng, 1 + rng() % 5, 2, 3), 2);
    auto got = fits_in_translate(q, p);
    bool any = false;
    for (int a = -8; a <= 8 && !any; ++a)
      for (int b = -8; b <= 8 && !any; ++b) {
        bool all = true;
        for (const auto& v : q.vertices()) all = all && p.contains(v - IntVec{a, b});
        any = all;
      }
    EXPECT_EQ(got.has_value(), any);
    if (got) {
      for (const auto& v : q.vertices()) EXPECT_TRUE(p.contains(v - *got));
    }
  }
}
