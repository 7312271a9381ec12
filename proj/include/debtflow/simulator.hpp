/**
 * @file simulator.hpp
 * @brief Finite-horizon debt-rolling simulator (the brute-force oracle)
 *
 * Runs the yearly financing identity
 *
 *   N_t = D_t + I_t + M_t
 *
 * exactly: maturing principal M_t and interest I_t are refinanced along
 * with the deficit D_t, and the gross issuance N_t is split across tenors
 * by the strategy fractions. Interest on tenor-j debt issued in year s is
 * paid in years s+1 .. s+j at the rate fixed at issue, so outstanding face
 * is tracked per original tenor as well as per remaining tenor.
 */

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "debtflow/asymptotics.hpp"
#include "debtflow/market.hpp"
#include "debtflow/strategy.hpp"

namespace debtflow {

/// Optional starting stock: a distribution over remaining tenor plus its
/// total size. Holdings with i years remaining are booked as if issued at
/// original tenor i (their coupon is the curve rate at i).
struct InitialPortfolio {
    PortfolioDistribution distribution;
    double stock = 0.0;  // z_0 >= 0
};

struct SimulationConfig {
    Strategy strategy;
    GrowthAssumption growth;
    RateCurve rates;
    double initial_deficit = 100.0;  // D_0 > 0
    int horizon = 300;               // H >= 1
    std::optional<InitialPortfolio> initial_portfolio;
    /// Nominal deficits replacing the geometric path in specific years (1-based).
    std::map<int, double> deficit_overrides;
    /// Deflate all currency state by gamma each year. Leaves every ratio
    /// series unchanged and keeps magnitudes bounded on long horizons.
    bool renormalize = false;
};

/// One simulated year. Currency quantities are in nominal units, or in
/// gamma^(t-1)-deflated units when the run renormalizes.
struct YearRecord {
    double deficit = 0.0;         // D_t
    double interest = 0.0;        // I_t
    double maturing = 0.0;        // M_t
    double gross_issuance = 0.0;  // N_t = D_t + I_t + M_t
    double stock = 0.0;           // z_t = z_{t-1} + D_t + I_t
    double wac = 0.0;             // I_t / z_{t-1}; NaN when z_{t-1} = 0
    double rr = 0.0;              // q_{1,t} / z_t
    double wam = 0.0;             // sum_i (i - 1/2) theta_{i,t}
    std::vector<double> issuance_by_tenor;  // N_{t,j} over the strategy grid
    std::vector<double> theta;              // Q_t / z_t over remaining tenor 1..T
};

class SimulationState {
public:
    explicit SimulationState(std::vector<YearRecord> years) : years_(std::move(years)) {}

    int horizon() const noexcept { return static_cast<int>(years_.size()); }
    const std::vector<YearRecord>& years() const noexcept { return years_; }
    /// 1-based year access.
    const YearRecord& at(int year) const;

private:
    std::vector<YearRecord> years_;
};

/// Runs the recursion over the full horizon. Throws horizon_too_large if
/// currency magnitudes overflow double range (mitigate with renormalize).
SimulationState run(const SimulationConfig& config);

struct EmpiricalMetrics {
    double wac;
    double rr;
    double wam;
};

/// Realized (wac, rr, wam) in a given 1-based year. Throws zero_stock for
/// year 1 of a run started from an empty portfolio (wac undefined).
EmpiricalMetrics empirical_metrics_at(const SimulationState& state, int year);

}  // namespace debtflow
