#include "debtflow/asymptotics.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

double CostWeights::at(int tenor) const {
    if (!grid.contains(tenor)) return 0.0;
    return weights[grid.index_of(tenor)];
}

double RolloverKernel::at(int tenor) const { return taus[grid.index_of(tenor)]; }

PortfolioDistribution::PortfolioDistribution(std::vector<double> theta)
    : theta_(std::move(theta)) {
    if (theta_.empty()) fail(errc::invalid_argument, "distribution must be nonempty");
    double sum = 0.0;
    for (double v : theta_) {
        if (!std::isfinite(v) || v < 0.0)
            fail(errc::invalid_argument, "distribution entries must be finite and >= 0");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        fail(errc::invalid_argument,
             "distribution sums to " + std::to_string(sum) + ", expected 1 within 1e-9");
    for (double& v : theta_) v /= sum;
}

double PortfolioDistribution::at(int current_tenor) const {
    if (current_tenor < 1 || current_tenor > max_tenor())
        fail(errc::invalid_argument, "current tenor out of range");
    return theta_[static_cast<std::size_t>(current_tenor - 1)];
}

namespace {

// 1 - gamma^-j, evaluated as -expm1(-j log1p(g)) so that tiny g keeps
// full relative precision.
double one_minus_gamma_pow_neg(int j, double g) {
    return -std::expm1(-static_cast<double>(j) * std::log1p(g));
}

// gamma^j - 1 with the same care.
double gamma_pow_minus_one(int j, double g) {
    return std::expm1(static_cast<double>(j) * std::log1p(g));
}

}  // namespace

double rollover_tau(int tenor, const GrowthAssumption& growth) {
    if (tenor < 1) fail(errc::invalid_argument, "tenor must be >= 1");
    if (growth.is_zero()) return 1.0 / static_cast<double>(tenor);
    return growth.g() / gamma_pow_minus_one(tenor, growth.g());
}

RolloverKernel rollover_kernel(const TenorGrid& grid, const GrowthAssumption& growth) {
    std::vector<double> taus(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        taus[i] = rollover_tau(grid.tenors()[i], growth);
    return RolloverKernel{grid, std::move(taus)};
}

CostWeights cost_weights(const Strategy& strategy, const GrowthAssumption& growth) {
    const TenorGrid& grid = strategy.grid();
    std::vector<double> w(grid.size());
    double denom = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        int j = grid.tenors()[i];
        double adj = growth.is_zero() ? static_cast<double>(j)
                                      : one_minus_gamma_pow_neg(j, growth.g());
        w[i] = strategy.fractions()[i] * adj;
        denom += w[i];
    }
    // denom > 0: the strategy has a positive fraction somewhere and every
    // adjustment factor is positive.
    for (double& v : w) v /= denom;
    return CostWeights{grid, std::move(w)};
}

StrategyMetrics metrics(const Strategy& strategy, const GrowthAssumption& growth,
                        const RateCurve& rates) {
    CostWeights w = cost_weights(strategy, growth);
    const TenorGrid& grid = strategy.grid();

    double wac = 0.0, t_wac = 0.0, rr = 0.0, t_raw = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        int j = grid.tenors()[i];
        wac += w.weights[i] * rates.rate_at(j);
        t_wac += w.weights[i] * static_cast<double>(j);
        rr += w.weights[i] * rollover_tau(j, growth);
        t_raw += strategy.fractions()[i] * static_cast<double>(j);
    }
    return StrategyMetrics{rr, wac, t_wac, t_raw - 0.5};
}

PortfolioDistribution equilibrium_distribution(const Strategy& strategy,
                                               const GrowthAssumption& growth) {
    const TenorGrid& grid = strategy.grid();
    int T = grid.max_tenor();
    std::vector<double> f(static_cast<std::size_t>(T), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        f[static_cast<std::size_t>(grid.tenors()[i] - 1)] = strategy.fractions()[i];

    // Back-substitute (gamma I - S) y = f: y_i = (f_i + y_{i+1}) / gamma.
    // At gamma = 1 this is the exact suffix sum.
    double gamma = growth.gamma();
    std::vector<double> y(static_cast<std::size_t>(T), 0.0);
    double carry = 0.0;
    for (int i = T - 1; i >= 0; --i) {
        carry = (f[static_cast<std::size_t>(i)] + carry) / gamma;
        y[static_cast<std::size_t>(i)] = carry;
    }
    double norm = std::accumulate(y.begin(), y.end(), 0.0);
    for (double& v : y) v /= norm;
    return PortfolioDistribution(std::move(y));
}

double equilibrium_wam(const PortfolioDistribution& distribution) {
    double wam = 0.0;
    for (int i = 1; i <= distribution.max_tenor(); ++i)
        wam += (static_cast<double>(i) - 0.5) * distribution.at(i);
    return wam;
}

bool check_growth_dominance(const StrategyMetrics& m, const GrowthAssumption& growth) {
    return growth.g() > m.wac_star;
}

}  // namespace debtflow
