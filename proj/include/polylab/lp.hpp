#pragma once

// Exact rational linear programming: dense two-phase tableau simplex with
// Bland's rule, so termination does not depend on degeneracy.

#include "polylab/integer.hpp"

#include <vector>

namespace polylab {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
    RatVector coeffs;
    Sense sense = Sense::LessEqual;
    Rat rhs;
};

/// maximize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
    std::size_t variables = 0;
    RatVector objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    RatVector x;
};

LpResult solve_lp(const LinearProgram& lp);

}  // namespace polylab
