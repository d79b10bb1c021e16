#pragma once

#include <vector>

#include "tropcong/number.hpp"

namespace tropcong {

enum class LpStatus { optimal, unbounded, infeasible };

struct StandardLpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;  // objective value when optimal
  RatVec z;        // a basic optimal (or, for feasibility problems, feasible) solution
  RatVec ray;      // z >= 0, A ray = 0, c . ray < 0 when unbounded
};

// Exact two-phase simplex with Bland's rule for
//   minimize c . z  subject to  A z = b,  z >= 0.
// An empty objective means a pure feasibility problem.
StandardLpResult solve_standard_form(const std::vector<RatVec>& a, const RatVec& b,
                                     const RatVec& c);

}  // namespace tropcong
