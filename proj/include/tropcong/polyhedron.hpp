#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropcong/number.hpp"
#include "tropcong/simplex.hpp"

namespace tropcong {

// normal . x (= or <=) rhs
struct Constraint {
  IntVec normal;
  Rational rhs;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// A rational polyhedron { x : E x = e, A x <= c } with integer normals.
class Polyhedron {
 public:
  explicit Polyhedron(std::size_t dim = 0) : dim_(dim) {}
  Polyhedron(std::size_t dim, std::vector<Constraint> equations,
             std::vector<Constraint> inequalities);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Constraint>& equations() const noexcept { return eqs_; }
  const std::vector<Constraint>& inequalities() const noexcept { return ineqs_; }

  Polyhedron& add_equation(IntVec normal, Rational rhs);
  Polyhedron& add_inequality(IntVec normal, Rational rhs);

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rational(x)); }
  // Recession cone membership: E r = 0, A r <= 0.
  bool recedes(const RatVec& r) const;

  std::string str() const;

 private:
  void check(const IntVec& normal) const;

  std::size_t dim_;
  std::vector<Constraint> eqs_;
  std::vector<Constraint> ineqs_;
};

enum class Sense { minimize, maximize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVec point;  // optimal point (or a feasible point when unbounded)
  RatVec ray;    // improving ray in the recession cone when unbounded
};

LpResult lp(const RatVec& objective, const Polyhedron& p, Sense sense);
inline LpResult lp(const IntVec& objective, const Polyhedron& p, Sense sense) {
  return lp(to_rational(objective), p, sense);
}
bool is_feasible(const Polyhedron& p);

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
Polyhedron translate(const Polyhedron& p, const RatVec& a);
// Every point of a lies in b.
bool is_subset(const Polyhedron& a, const Polyhedron& b);
bool same_set(const Polyhedron& a, const Polyhedron& b);

struct AffineHull {
  bool empty = true;
  std::size_t dim = 0;             // dimension of the polyhedron
  RatVec relint;                   // a relative-interior point
  std::vector<Constraint> equations;  // independent equations cutting out the affine hull
  std::vector<IntVec> lattice;     // basis of the integer points of the linear span
  std::vector<bool> implicit;      // per inequality: tight on the whole polyhedron
};

AffineHull affine_hull(const Polyhedron& p);

}  // namespace tropcong
