#pragma once

// Exact feasibility of { x >= 0 : A x = b } over the rationals.
//
// Decided by a phase-I simplex with Bland's rule, so every pivot is exact and
// termination is guaranteed. Infeasible systems come with a Farkas certificate
// y such that y^T A <= 0 componentwise and y^T b > 0; both properties are
// re-verified before returning.

#include <vector>

#include "hf/error.hpp"
#include "hf/zmatrix.hpp"

namespace hf {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rat> x;       // feasible point (A x = b, x >= 0) when feasible
  std::vector<Rat> farkas;  // certificate y when infeasible
};

FeasibilityResult rational_feasible(const std::vector<std::vector<Rat>>& A,
                                    const std::vector<Rat>& b);

}  // namespace hf
