#pragma once

// Small dense exact-rational linear programming (Bland's rule, so it
// terminates). Desk-scale only: tens of variables and constraints.

#include "crepant/arith.hpp"

namespace crepant {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;
  RatVec x;
};

/// max c.x  s.t.  a x = b, x >= 0.
LpResult lp_standard_max(const RatMat& a, const RatVec& b, const RatVec& c);

/// Is there an x >= 0 with a x = b?
bool lp_feasible_nonneg(const RatMat& a, const RatVec& b);

/// max c.x over free x with a_ub x <= b_ub and a_eq x = b_eq.
LpResult lp_max(const RatMat& a_ub, const RatVec& b_ub, const RatMat& a_eq,
                const RatVec& b_eq, const RatVec& c);

}  // namespace crepant
