#pragma once

#include <vector>

#include "toricsum/exact.hpp"

namespace toricsum {

// minimize cost . x  subject to  a x = b, x >= 0, in exact rationals.
struct LpProblem {
  std::vector<RatVec> a;  // m rows, each of length nvars
  RatVec b;               // length m
  RatVec cost;            // length nvars
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;        // set when Optimal
  RatVec witness;   // set when Optimal; a x = b, x >= 0, cost . x = value
};

// Two-phase simplex with Bland's anti-cycling rule; fully deterministic.
LpResult lp_solve(const LpProblem& prob);

}  // namespace toricsum
