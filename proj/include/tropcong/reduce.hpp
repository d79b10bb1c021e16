#pragma once

#include <utility>
#include <vector>

#include "tropcong/complex.hpp"
#include "tropcong/lattice.hpp"
#include "tropcong/trop.hpp"

namespace tropcong {

// Integral coordinates on a rational linear subspace W of R^n. The map
// iota: R^d -> W sends y to sum y_j q_j.
struct SubspaceChart {
  std::size_t n = 0, d = 0;
  std::vector<IntVec> basis;       // q_1..q_d, a basis of W cap Z^n
  std::vector<IntVec> completion;  // q_{d+1}..q_n, completing the basis of Z^n
  std::vector<IntVec> dual;        // rows of the inverse basis matrix: dual[i] . q_j = delta_ij
  std::vector<IntVec> perp;        // basis of W^perp cap Z^n
  std::vector<IntVec> complement;  // H: completes perp to a basis of Z^n

  // Inverse of iota on W; x must lie in W.
  RatVec coordinates(const RatVec& x) const;
  RatVec embed(const RatVec& y) const;
  bool contains(const RatVec& x) const;
};

// W is the span of the given rational vectors (possibly zero).
SubspaceChart make_chart(const std::vector<RatVec>& spanning, std::size_t n);
SubspaceChart make_chart(const std::vector<IntVec>& spanning, std::size_t n);

// p o iota: exponent u becomes (u . q_1, ..., u . q_d).
TropPoly pullback(const SubspaceChart& chart, const TropPoly& p);

using PolyPair = std::pair<TropPoly, TropPoly>;
std::vector<PolyPair> pushforward_generators(const SubspaceChart& chart, const std::vector<PolyPair>& pairs);

// (x^{k}, 0) for k in the basis of W^perp cap Z^n.
std::vector<PolyPair> subspace_congruence_generators(const SubspaceChart& chart);

// Rewrites every exponent to its H-component. Agrees with p on W, and two
// polynomials agree on W exactly when their normal forms are equal functions.
TropPoly normal_form_mod_subspace(const TropPoly& p, const SubspaceChart& chart);

// f(x + a): the coefficient of x^u becomes c_u + u . a.
TropPoly translate_poly(const TropPoly& p, const RatVec& a);

// W itself as a complex (one cell of weight 1).
PolyComplex subspace_complex(const SubspaceChart& chart);

// Pulls a complex supported in W back to R^d; throws PreconditionError if
// some cell leaves W.
PolyComplex reduce_complex(const PolyComplex& cx, const SubspaceChart& chart);
// The image of a complex in R^d under iota.
PolyComplex embed_complex(const PolyComplex& cx, const SubspaceChart& chart);

}  // namespace tropcong
