/**
 * @file frontier.hpp
 * @brief Analytic efficient frontier and curve-regularity diagnostics
 *
 * For a rollover budget R, the cost-minimizing strategy concentrates on
 * the "sweet spot" tenor
 *
 *   j*(R) = log(1 + g/R) / log(1+g)    (g > 0),   1/R  (g = 0)
 *
 * the exact inverse of the rollover kernel tau. When j*(R) is not an
 * issuable tenor, the frontier blends the two bracketing grid tenors in
 * weight space (both metrics are linear there) and maps back to issuance
 * fractions through the diagonal growth adjustment.
 */

#pragma once

#include "debtflow/asymptotics.hpp"
#include "debtflow/market.hpp"
#include "debtflow/strategy.hpp"
#include "debtflow/tenor_grid.hpp"

namespace debtflow {

/// One point on the efficient frontier. For a blended point,
/// blend_alpha is the weight-space share on lower_tenor and satisfies
/// alpha tau_lo + (1-alpha) tau_hi = risk_budget; a single-tenor point
/// has blend_alpha = 1.
struct FrontierPoint {
    double risk_budget = 0.0;
    int lower_tenor = 0;
    double blend_alpha = 1.0;
    Strategy strategy;
    StrategyMetrics metrics;
};

/// Continuous cost-optimal tenor for rollover budget R in (0, 1].
double sweet_spot_tenor(double risk_budget, const GrowthAssumption& growth);

/// Lowest-cost strategy on the grid for rollover budget R. Requires
/// tau(longest grid tenor) <= R <= 1; below the longest tenor's rollover
/// no strategy on the grid is feasible (risk_below_longest_tenor).
FrontierPoint frontier_point(double risk_budget, const GrowthAssumption& growth,
                             const RateCurve& rates, const TenorGrid& grid);

/// Frontier traced over a list of risk budgets.
std::vector<FrontierPoint> frontier_sweep(const std::vector<double>& risk_budgets,
                                          const GrowthAssumption& growth,
                                          const RateCurve& rates, const TenorGrid& grid);

/// Result of probing whether single-tenor issuance can be dominated
/// under a given curve and growth assumption.
///
/// Two diagnostics are reported. `hull_margin` is the exact test on the
/// evaluation tenors: the cheapest two-tenor blend matching tau_j, minus
/// r_j, minimized over j; a negative value exhibits a concrete dominating
/// blend (a barbell), so single_tenor_optimal is decided by this margin.
/// `bound_margin` is the worst slack of the sufficient curvature bound
///
///   r''(s) >= -((r(t) - r_j) / (tau_j - tau(t))) tau''(s)
///
/// over dense (j, t, s) with t > j, using a monotone piecewise-cubic
/// interpolation of the curve. The bound is conservative: mildly concave
/// curves can fail it by a small margin while no dominating blend exists.
struct ConvexityReport {
    bool single_tenor_optimal = true;
    double hull_margin = 0.0;  ///< min over tenors of best-blend cost minus r_j
    int hull_worst_tenor = 0;
    double bound_margin = 0.0;  ///< worst slack of the curvature bound
    double bound_worst_j = 0.0;
    double bound_worst_t = 0.0;
    double bound_worst_s = 0.0;
};

/// Probes the curve on `grid`'s tenors (or on the curve's own knots when
/// no grid is given), with the continuous interpolant built through those
/// same nodes. Step 0.1y on all dense axes.
ConvexityReport verify_convexity_condition(const RateCurve& rates,
                                           const GrowthAssumption& growth,
                                           const TenorGrid* grid = nullptr);

}  // namespace debtflow
