/**
 * @file asymptotics.hpp
 * @brief Closed-form steady-state metrics of an issuance strategy
 *
 * Under geometric deficit growth (factor gamma = 1+g) and a static yield
 * curve, perpetual issuance at fractions f drives the portfolio toward a
 * self-similar steady state. This module evaluates that limit in closed
 * form:
 *
 *   w_j   = f_j (1 - gamma^-j) / sum_k f_k (1 - gamma^-k)   (g > 0)
 *         = j f_j / sum_k k f_k                             (g = 0)
 *   tau_j = g / ((1+g)^j - 1)                               (g > 0)
 *         = 1 / j                                           (g = 0)
 *   WAC*  = sum_j w_j r_j          asymptotic average coupon (cost)
 *   t_WAC = sum_j j w_j            rate-free effective tenor (cost)
 *   RR*   = sum_j tau_j w_j        yearly rollover fraction (risk)
 *   NWAM  = sum_j (j - 1/2) f_j    new-issue weighted avg maturity
 *
 * The equilibrium distribution of the stock by remaining tenor solves
 * (gamma I - S) y = f for the upper-shift S and normalizes y to sum 1.
 *
 * Validity caveat: these limits describe the deficit-growth-dominated
 * regime and require g > WAC* (check_growth_dominance). When interest
 * compounds faster than deficits grow, the portfolio instead equilibrates
 * at an implicitly defined average coupon and the formulas here no longer
 * match a mechanical debt-rolling simulation.
 */

#pragma once

#include <vector>

#include "debtflow/market.hpp"
#include "debtflow/strategy.hpp"
#include "debtflow/tenor_grid.hpp"

namespace debtflow {

/// Growth-adjusted portfolio weights w (nonnegative, sum to one, zero
/// wherever f is zero), dense over the strategy's grid.
struct CostWeights {
    TenorGrid grid;
    std::vector<double> weights;

    double at(int tenor) const;
};

/// Rollover kernel tau over a grid: the steady-state share of the
/// portfolio rolled yearly per unit weight at each tenor. tau_1 = 1
/// exactly and tau is strictly decreasing in tenor.
struct RolloverKernel {
    TenorGrid grid;
    std::vector<double> taus;

    double at(int tenor) const;
};

/// The (R, C) image of a strategy.
struct StrategyMetrics {
    double rr_star;   ///< yearly rollover fraction, in (0, 1]
    double wac_star;  ///< asymptotic average coupon
    double t_wac;     ///< effective tenor sampled on the curve, in [1, T]
    double nwam;      ///< new-issue weighted average maturity, years
};

/// Portfolio shares by remaining (current) tenor 1..max_tenor.
class PortfolioDistribution {
public:
    /// theta[i-1] is the share with i years remaining. Entries must be
    /// nonnegative and sum to 1 within 1e-9; the stored vector is
    /// renormalized exactly.
    explicit PortfolioDistribution(std::vector<double> theta);

    const std::vector<double>& theta() const noexcept { return theta_; }
    double at(int current_tenor) const;
    int max_tenor() const noexcept { return static_cast<int>(theta_.size()); }

private:
    std::vector<double> theta_;
};

/// tau at a single tenor.
double rollover_tau(int tenor, const GrowthAssumption& growth);

/// Kernel over a whole grid.
RolloverKernel rollover_kernel(const TenorGrid& grid, const GrowthAssumption& growth);

/// Growth-adjusted weights of a strategy. The g = 0 branch is used
/// exactly when g == 0; both branches are numerically stable.
CostWeights cost_weights(const Strategy& strategy, const GrowthAssumption& growth);

/// All four metrics, computed from a single CostWeights evaluation.
StrategyMetrics metrics(const Strategy& strategy, const GrowthAssumption& growth,
                        const RateCurve& rates);

/// Steady-state distribution theta* of the stock by remaining tenor,
/// over 1..grid.max_tenor(). Solved by back-substitution against the
/// triangular (gamma I - S); the gamma -> 1 limit is the exact suffix sum.
PortfolioDistribution equilibrium_distribution(const Strategy& strategy,
                                               const GrowthAssumption& growth);

/// Mid-year weighted average remaining maturity, sum_i (i - 1/2) theta_i.
double equilibrium_wam(const PortfolioDistribution& distribution);

/// True iff g > WAC*, the regime in which the closed forms above are the
/// genuine limits of mechanical debt rolling. Callers should treat false
/// as a warning that the asymptotic formulas lose validity.
bool check_growth_dominance(const StrategyMetrics& m, const GrowthAssumption& growth);

}  // namespace debtflow
