#pragma once

#include <optional>
#include <vector>

#include "tropcong/number.hpp"
#include "tropcong/polyhedron.hpp"

namespace tropcong {

// Convex hull of finitely many integer points, stored by its vertices in
// lexicographic order. May be empty.
class LatticePolytope {
 public:
  explicit LatticePolytope(std::size_t dim = 0);
  // Hull of arbitrary points (duplicates and non-vertices allowed).
  static LatticePolytope hull(std::vector<IntVec> points, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<IntVec>& vertices() const noexcept { return vertices_; }

  // Inequality description (with equations for the affine hull when the
  // polytope is not full-dimensional).
  const Polyhedron& facets() const noexcept { return facets_; }
  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rational(x)); }
  // All integer points, in lexicographic order.
  std::vector<IntVec> lattice_points() const;
  // Dimension of the affine hull; -1 when empty.
  int affine_dim() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t dim_;
  std::vector<IntVec> vertices_;
  Polyhedron facets_;
};

// Vertices of conv(points): points not in the hull of the others, found by one
// exact LP per point. Independent of the planar fast path used by hull().
std::vector<IntVec> hull_vertices_lp(std::vector<IntVec> points, std::size_t dim);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope translate(const LatticePolytope& p, const IntVec& t);
// Largest squared Euclidean distance between two vertices (0 if at most one).
Integer diameter_squared(const LatticePolytope& p);
// Some integer t with q + t contained in p, or nullopt. Both must be nonempty.
std::optional<IntVec> fits_in_translate(const LatticePolytope& q, const LatticePolytope& p);

// Is x a convex combination of the given points? Exact LP.
bool in_convex_hull(const std::vector<IntVec>& points, const RatVec& x);

}  // namespace tropcong
