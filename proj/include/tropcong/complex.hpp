#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropcong/number.hpp"
#include "tropcong/polyhedron.hpp"
#include "tropcong/trop.hpp"

namespace tropcong {

struct Cell {
  std::string id;
  Polyhedron geometry;
  std::optional<Integer> weight;  // facets only
};

// Weighted rational polyhedral complex in H-representation. Construction
// checks the structural invariants (unique ids, nonempty cells, weights on
// exactly the declared facets); geometric conditions are checked by
// validate_complex().
class PolyComplex {
 public:
  PolyComplex(std::size_t dim, std::vector<Cell> cells, std::vector<std::string> facets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::vector<std::string>& facet_ids() const noexcept { return facets_; }
  std::size_t index_of(const std::string& id) const;
  const Cell& cell(const std::string& id) const { return cells_[index_of(id)]; }
  bool is_facet(std::size_t i) const { return is_facet_[i]; }
  const AffineHull& hull(std::size_t i) const { return hulls_[i]; }
  std::size_t cell_dim(std::size_t i) const { return hulls_[i].dim; }

 private:
  std::size_t dim_;
  std::vector<Cell> cells_;
  std::vector<std::string> facets_;
  std::vector<bool> is_facet_;
  std::vector<AffineHull> hulls_;
};

// The complex with the single cell R^n (weight 1).
PolyComplex full_space(std::size_t n);
// The standard tropical line in R^2: rays from the origin in directions
// (-1,0), (0,-1), (1,1), each of weight 1, and the vertex.
PolyComplex standard_line();
PolyComplex translate_complex(const PolyComplex& cx, const RatVec& a);

// Is tau a face of sigma (possibly sigma itself)?
bool is_face(const Polyhedron& tau, const Polyhedron& sigma);

struct ValidationReport {
  bool rational = true;  // guaranteed by the integer representation
  bool pure = true;
  bool connected = true;
  bool face_compatible = true;
  std::vector<std::string> problems;  // each names the offending cells
  bool ok() const { return rational && pure && connected && face_compatible; }
};

ValidationReport validate_complex(const PolyComplex& cx);

struct RidgeReport {
  std::string ridge;
  std::vector<std::pair<std::string, IntVec>> outgoing;  // facet id, u_{sigma/tau}
  IntVec weighted_sum;
  bool balanced = false;
};

struct BalanceReport {
  bool balanced = true;
  std::vector<RidgeReport> ridges;
};

// Primitive generator u of Lambda(sigma) modulo Lambda(tau) pointing from tau
// into sigma; tau must be a codimension-one face of sigma.
IntVec outgoing_vector(const PolyComplex& cx, std::size_t sigma, std::size_t tau);

BalanceReport balancing_check(const PolyComplex& cx);

struct EqOptions {
  // Use direct evaluation on points and exact envelopes on one-dimensional
  // cells; when false every cell goes through the region LPs.
  bool fast_paths = true;
};

struct EqResult {
  bool equal = true;
  RatVec witness;  // set when unequal
  std::string cell;
  TropNum p_value, q_value;
};

EqResult eq_on_complex(const TropPoly& p, const TropPoly& q, const PolyComplex& cx,
                       const EqOptions& opts = {});

struct DirectionSup {
  bool unbounded = false;
  Rational sup;       // when bounded
  RatVec point;       // maximizer when bounded, ray start when unbounded
  RatVec ray;         // recession ray with u . ray > 0 when unbounded
  std::string cell;
};

DirectionSup direction_sup(const PolyComplex& cx, const IntVec& u);

bool unbounded_all_rational(const PolyComplex& cx);

struct WalkResult {
  bool constant = false;
  std::string edge;             // unbounded edge reached
  RatVec start;                 // a point on that edge
  IntVec direction;             // primitive, direction . u > 0, recession direction of the edge
  std::vector<std::string> path;  // edges visited
};

WalkResult walk_unbounded_1d(const PolyComplex& cx, const IntVec& u);

}  // namespace tropcong
