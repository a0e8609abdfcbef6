#pragma once

#include "mukai/rational.hpp"

namespace mukai {

// Feasibility of A x = b, x >= 0, decided by an exact phase-I simplex with
// Bland's rule. Exactly one of x / farkas is populated:
//   feasible:   x with A x = b, x >= 0
//   infeasible: y with y . A_col_j <= 0 for every column j and y . b > 0
struct FeasibilityResult {
  bool feasible = false;
  RatVec x;
  RatVec farkas;
};

FeasibilityResult solve_feasibility(const RatMat& a, const RatVec& b);

// max objective . x subject to A x = b, x >= 0. Phase I + phase II, Bland's
// rule throughout.
struct OptimizeResult {
  bool feasible = false;
  bool unbounded = false;
  Rat objective;
  RatVec x;
};

OptimizeResult maximize(const RatMat& a, const RatVec& b, const RatVec& objective);

} // namespace mukai
