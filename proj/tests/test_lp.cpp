#include <gtest/gtest.h>

#include <random>

#include "tropcong/polyhedron.hpp"

using namespace tropcong;

namespace {

Rational q(int n, int d = 1) { return Rational(Integer(n), Integer(d)); }

// Optimum of a bounded planar LP by enumerating pairwise constraint
// intersections.
std::optional<Rational> brute_force_max(const std::vector<Constraint>& cs, const RatVec& obj) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const auto& a = cs[i].normal;
      const auto& b = cs[j].normal;
      Rational det = Rational(a[0] * b[1] - a[1] * b[0]);
      if (det.is_zero()) continue;
      RatVec x{(cs[i].rhs * Rational(b[1]) - cs[j].rhs * Rational(a[1])) / det,
               (Rational(a[0]) * cs[j].rhs - Rational(b[0]) * cs[i].rhs) / det};
      bool ok = true;
      for (const auto& c : cs) ok = ok && dot(c.normal, x) <= c.rhs;
      if (!ok) continue;
      Rational v = dot(obj, x);
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST(Lp, Examples) {
  Polyhedron half(1);
  half.add_inequality({-1}, 0);  // x >= 0
  auto mn = lp(RatVec{1}, half, Sense::minimize);
  ASSERT_EQ(mn.status, LpStatus::optimal);
  EXPECT_EQ(mn.value, Rational(0));
  EXPECT_EQ(mn.point, RatVec{0});

  auto mx = lp(RatVec{1}, half, Sense::maximize);
  ASSERT_EQ(mx.status, LpStatus::unbounded);
  EXPECT_EQ(mx.ray, RatVec{1});

  Polyhedron empty(1);
  empty.add_inequality({1}, -1).add_inequality({-1}, 0);
  EXPECT_EQ(lp(RatVec{1}, empty, Sense::minimize).status, LpStatus::infeasible);
  EXPECT_FALSE(is_feasible(empty));
}

TEST(Lp, NoConstraints) {
  Polyhedron all(2);
  EXPECT_EQ(lp(RatVec{0, 0}, all, Sense::maximize).status, LpStatus::optimal);
  auto r = lp(RatVec{1, -2}, all, Sense::maximize);
  ASSERT_EQ(r.status, LpStatus::unbounded);
  EXPECT_GT(dot(RatVec{1, -2}, r.ray), Rational(0));
}

TEST(Lp, RandomBoundedPlanarAgainstVertexEnumeration) {
  std::mt19937_64 rng(21);
  auto rnd = [&](int b) { return static_cast<int>(rng() % (2 * b + 1)) - b; };
  int feasible = 0;
  for (int it = 0; it < 400; ++it) {
    std::vector<Constraint> cs = {{{1, 0}, 10}, {{-1, 0}, 10}, {{0, 1}, 10}, {{0, -1}, 10}};
    int extra = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < extra; ++k) {
      IntVec a{rnd(5), rnd(5)};
      if (is_zero(a)) a[0] = 1;
      cs.push_back({a, q(rnd(12), 1 + static_cast<int>(rng() % 3))});
    }
    Polyhedron p(2, {}, cs);
    RatVec obj{q(rnd(4)), q(rnd(4))};
    auto got = lp(obj, p, Sense::maximize);
    auto want = brute_force_max(cs, obj);
    if (!want) {
      EXPECT_EQ(got.status, LpStatus::infeasible);
      continue;
    }
    ++feasible;
    ASSERT_EQ(got.status, LpStatus::optimal);
    EXPECT_EQ(got.value, *want);
    EXPECT_TRUE(p.contains(got.point));
  }
  EXPECT_GT(feasible, 100);
}

TEST(Lp, UnboundedRayIsCertified) {
  std::mt19937_64 rng(22);
  auto rnd = [&](int b) { return static_cast<int>(rng() % (2 * b + 1)) - b; };
  for (int it = 0; it < 200; ++it) {
    Polyhedron p(3);
    for (int k = 0; k < 3; ++k) {
      IntVec a{rnd(3), rnd(3), rnd(3)};
      if (is_zero(a)) continue;
      p.add_inequality(a, rnd(5));
    }
    RatVec obj{q(rnd(3)), q(rnd(3)), q(rnd(3))};
    auto r = lp(obj, p, Sense::maximize);
    if (r.status == LpStatus::unbounded) {
      EXPECT_TRUE(p.contains(r.point));
      EXPECT_TRUE(p.recedes(r.ray));
      EXPECT_GT(dot(obj, r.ray), Rational(0));
    } else if (r.status == LpStatus::optimal) {
      EXPECT_TRUE(p.contains(r.point));
      EXPECT_EQ(dot(obj, r.point), r.value);
    }
  }
}

TEST(AffineHull, SegmentPointAndSquare) {
  // segment from (0,0) to (2,2) written with inequalities only
  Polyhedron seg(2);
  seg.add_inequality({1, -1}, 0).add_inequality({-1, 1}, 0).add_inequality({1, 0}, 2).add_inequality({-1, 0}, 0);
  auto h = affine_hull(seg);
  ASSERT_FALSE(h.empty);
  EXPECT_EQ(h.dim, 1u);
  EXPECT_EQ(h.lattice, (std::vector<IntVec>{{1, 1}}));
  EXPECT_TRUE(seg.contains(h.relint));
  EXPECT_NE(h.relint, (RatVec{0, 0}));
  EXPECT_NE(h.relint, (RatVec{2, 2}));

  Polyhedron pt(2);
  pt.add_equation({1, 0}, 3).add_equation({0, 1}, q(1, 2));
  auto hp = affine_hull(pt);
  EXPECT_EQ(hp.dim, 0u);
  EXPECT_EQ(hp.relint, (RatVec{3, q(1, 2)}));
  EXPECT_TRUE(hp.lattice.empty());

  Polyhedron sq(2);
  sq.add_inequality({1, 0}, 1).add_inequality({-1, 0}, 0).add_inequality({0, 1}, 1).add_inequality({0, -1}, 0);
  auto hs = affine_hull(sq);
  EXPECT_EQ(hs.dim, 2u);
  EXPECT_TRUE(hs.equations.empty());

  Polyhedron none(2);
  none.add_inequality({1, 0}, -1).add_inequality({-1, 0}, 0);
  EXPECT_TRUE(affine_hull(none).empty);
}

TEST(Subset, Basic) {
  Polyhedron big(1), small(1);
  big.add_inequality({1}, 5).add_inequality({-1}, 5);
  small.add_inequality({1}, 1).add_inequality({-1}, 1);
  EXPECT_TRUE(is_subset(small, big));
  EXPECT_FALSE(is_subset(big, small));
  EXPECT_TRUE(same_set(small, small));
  Polyhedron shifted = translate(small, RatVec{2});
  EXPECT_TRUE(shifted.contains(RatVec{3}));
  EXPECT_FALSE(shifted.contains(RatVec{0}));
}
