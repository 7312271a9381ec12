/**
 * @file optimizer.hpp
 * @brief Policy-window constrained strategy optimization
 *
 * Solves min WAC* subject to a rollover budget and box bounds on the
 * issuance fractions. The program is linear in weight space: with
 * d_j = 1/(1 - gamma^-j) (d_j = 1/j when g = 0) the fractions are
 * f = D w / ||D w||_1, and since every d_j > 0 the bounds
 * L <= f <= U linearize exactly as
 *
 *   L_j sum_k d_k w_k  <=  d_j w_j  <=  U_j sum_k d_k w_k.
 *
 * The optimum is converted back to fractions only at the end.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "debtflow/asymptotics.hpp"
#include "debtflow/market.hpp"
#include "debtflow/policy_window.hpp"
#include "debtflow/strategy.hpp"

namespace debtflow {

enum class SolveStatus { optimal, infeasible, unbounded };

const char* to_string(SolveStatus status) noexcept;

struct OptimizationResult {
    SolveStatus status = SolveStatus::infeasible;
    std::optional<CostWeights> optimal_w;
    std::optional<Strategy> optimal_f;
    std::optional<StrategyMetrics> metrics;
    /// Inequality constraints active at the optimum: "risk_budget",
    /// "lower[j]", "upper[j]".
    std::vector<std::string> binding_constraints;
};

/// Minimizes WAC* over the window at rollover budget R. Returns
/// status = infeasible for an empty window or an unreachable budget;
/// numerical failure surfaces as an exception, never silently.
OptimizationResult optimize_constrained(const PolicyWindow& window, double risk_budget,
                                        const GrowthAssumption& growth,
                                        const RateCurve& rates);

/// Dominant improvement directions from a current strategy inside the
/// window: first the cost-dominant strategy (min WAC* with RR* no worse),
/// then the risk-dominant one (min RR* with WAC* no worse).
std::pair<Strategy, Strategy> dominant_directions(const Strategy& current,
                                                  const PolicyWindow& window,
                                                  const GrowthAssumption& growth,
                                                  const RateCurve& rates);

}  // namespace debtflow
