/**
 * @file simplex.hpp
 * @brief Small dense two-phase simplex solver
 *
 * Deterministic by construction: entering variable is the most negative
 * reduced cost with ties broken by lowest index, leaving variable by the
 * usual minimum-ratio test with ties broken by lowest row index, and a
 * Bland's-rule fallback engages after a run of degenerate pivots so the
 * solver cannot cycle. Problem sizes here are tiny (tens of variables
 * and constraints), so a dense tableau is the simplest reliable choice.
 */

#pragma once

#include <string>
#include <vector>

namespace debtflow::lp {

enum class ConstraintType { less_equal, equal };

struct Constraint {
    std::vector<double> coeffs;
    ConstraintType type = ConstraintType::less_equal;
    double rhs = 0.0;
    std::string name;
};

/// minimize c.x subject to the constraints and x >= 0.
struct Problem {
    std::vector<double> objective;
    std::vector<Constraint> constraints;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status = Status::infeasible;
    std::vector<double> x;
    double objective = 0.0;
    /// Names of inequality constraints with zero slack at the optimum.
    std::vector<std::string> binding;
};

/// Throws numerical_failure if the pivot limit is exhausted.
Solution solve(const Problem& problem);

}  // namespace debtflow::lp
