#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropcong/complex.hpp"
#include "tropcong/lattice.hpp"
#include "tropcong/polytope.hpp"
#include "tropcong/trop.hpp"

namespace tropcong {

// Image of the cube [0,2]^n under M(n,N): its lattice points are the images
// of {0,1,2}^n and lie pairwise at distance >= N - 2.
struct ThinPolytope {
  std::size_t n = 0;
  Integer N;
  IntMatrix matrix;
  std::vector<IntVec> points;  // lexicographic
  IntVec interior_point;       // image of (1,...,1)
  Integer min_dist_sq;
};

IntMatrix thin_matrix(std::size_t n, const Integer& N);
ThinPolytope thin_polytope(std::size_t n, const Integer& N);

struct WitnessPair {
  TropPoly f, g;  // g = eps x^u0 (+) f
  Rational eps;
  RatVec attained_at;  // a cell point where f = eps + u0 . p
  std::string cell;
};

// Requires u0 strictly inside the full-dimensional P and the origin outside
// every cell of cx.
WitnessPair witness_pair(const LatticePolytope& p, const IntVec& u0, const PolyComplex& cx);

enum class PairStatus { kept, dropped_bottom, dropped_monomial };
std::string to_string(PairStatus s);

struct CandidateRecord {
  TropPoly lhs, rhs;
  PairStatus status = PairStatus::kept;
  // For kept pairs: whether each Newton polytope fits in an integer
  // translate of the thin polytope (the refutation needs both false).
  bool lhs_fits = false, rhs_fits = false;
};

struct Certificate {
  PolyComplex complex{full_space(2)};
  std::vector<CandidateRecord> candidates;
  RatVec shift;        // a point outside |complex|; the witness lives on |complex| - shift
  Integer N;           // exceeds every kept Newton diameter
  Integer thin_N;      // parameter of the thin polytope, N + 3
  std::vector<IntVec> thin_points;
  TropPoly f, g;
  Rational eps;
  IntVec u0;
};

// Builds a certificate that the candidate pairs do not generate E(|cx|).
Certificate refute(const std::vector<std::pair<TropPoly, TropPoly>>& candidates, const PolyComplex& cx);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // first failed check
};

CertificateCheck verify_certificate(const Certificate& cert);

}  // namespace tropcong
