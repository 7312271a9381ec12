#include "debtflow/simulator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

const YearRecord& SimulationState::at(int year) const {
    if (year < 1 || year > horizon())
        fail(errc::invalid_argument, "year " + std::to_string(year) + " outside 1.." +
                                         std::to_string(horizon()));
    return years_[static_cast<std::size_t>(year - 1)];
}

namespace {

void validate(const SimulationConfig& config) {
    if (!(config.initial_deficit > 0.0) || !std::isfinite(config.initial_deficit))
        fail(errc::invalid_argument, "initial_deficit must be positive and finite");
    if (config.horizon < 1) fail(errc::invalid_argument, "horizon must be >= 1");
    if (config.initial_portfolio) {
        if (config.initial_portfolio->stock < 0.0)
            fail(errc::invalid_argument, "initial stock must be >= 0");
        if (config.initial_portfolio->distribution.max_tenor() > config.strategy.grid().max_tenor())
            fail(errc::invalid_argument,
                 "initial portfolio extends beyond the grid's max tenor");
    }
    for (const auto& [year, amount] : config.deficit_overrides) {
        if (year < 1) fail(errc::invalid_argument, "deficit override years are 1-based");
        if (!std::isfinite(amount) || amount < 0.0)
            fail(errc::invalid_argument, "deficit overrides must be finite and >= 0");
    }
    // Certain overflow of the nominal deficit path is detectable up front.
    if (!config.renormalize) {
        double log10_peak = std::log10(config.initial_deficit) +
                            static_cast<double>(config.horizon - 1) *
                                std::log10(config.growth.gamma());
        if (log10_peak > 306.0)
            fail(errc::horizon_too_large,
                 "deficit path overflows double range by year " +
                     std::to_string(config.horizon) + "; enable renormalize");
    }
}

}  // namespace

SimulationState run(const SimulationConfig& config) {
    validate(config);

    const TenorGrid& grid = config.strategy.grid();
    const int T = grid.max_tenor();
    const std::size_t n = static_cast<std::size_t>(T);
    const double gamma = config.growth.gamma();

    // Outstanding face by (original tenor, remaining tenor), both 1-based.
    std::vector<double> face(n * n, 0.0);
    auto cell = [&](int orig, int rem) -> double& {
        return face[static_cast<std::size_t>(orig - 1) * n + static_cast<std::size_t>(rem - 1)];
    };

    std::vector<double> rate_by_tenor(n);
    for (int j = 1; j <= T; ++j)
        rate_by_tenor[static_cast<std::size_t>(j - 1)] = config.rates.rate_at(j);

    double stock = 0.0;
    if (config.initial_portfolio && config.initial_portfolio->stock > 0.0) {
        const auto& init = *config.initial_portfolio;
        for (int i = 1; i <= init.distribution.max_tenor(); ++i)
            cell(i, i) = init.distribution.at(i) * init.stock;
        stock = init.stock;
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<YearRecord> years;
    years.reserve(static_cast<std::size_t>(config.horizon));

    for (int t = 1; t <= config.horizon; ++t) {
        // Interest accrues on everything outstanding at the start of the
        // year, including the tranche maturing this year (final coupon).
        double interest = 0.0;
        for (int orig = 1; orig <= T; ++orig) {
            double outstanding = 0.0;
            for (int rem = 1; rem <= orig; ++rem) outstanding += cell(orig, rem);
            interest += rate_by_tenor[static_cast<std::size_t>(orig - 1)] * outstanding;
        }

        double maturing = 0.0;
        for (int orig = 1; orig <= T; ++orig) maturing += cell(orig, 1);
        for (int orig = 1; orig <= T; ++orig) {
            for (int rem = 1; rem < orig; ++rem) cell(orig, rem) = cell(orig, rem + 1);
            cell(orig, orig) = 0.0;
        }

        double deficit;
        auto override_it = config.deficit_overrides.find(t);
        if (config.renormalize) {
            deficit = override_it != config.deficit_overrides.end()
                          ? override_it->second * std::pow(gamma, -(t - 1))
                          : config.initial_deficit;
        } else {
            deficit = override_it != config.deficit_overrides.end()
                          ? override_it->second
                          : config.initial_deficit * std::pow(gamma, t - 1);
        }

        double gross = deficit + interest + maturing;  // the financing identity
        YearRecord rec;
        rec.deficit = deficit;
        rec.interest = interest;
        rec.maturing = maturing;
        rec.gross_issuance = gross;
        rec.issuance_by_tenor.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            int j = grid.tenors()[i];
            double amount = config.strategy.fractions()[i] * gross;
            rec.issuance_by_tenor[i] = amount;
            cell(j, j) += amount;
        }

        double prev_stock = stock;
        stock = prev_stock + deficit + interest;
        rec.stock = stock;
        if (!std::isfinite(stock))
            fail(errc::horizon_too_large,
                 "currency quantities overflowed in year " + std::to_string(t) +
                     "; enable renormalize");

        rec.wac = prev_stock > 0.0 ? interest / prev_stock : nan;
        rec.theta.resize(n);
        double q1 = 0.0, wam = 0.0;
        for (int rem = 1; rem <= T; ++rem) {
            double q = 0.0;
            for (int orig = rem; orig <= T; ++orig) q += cell(orig, rem);
            double share = stock > 0.0 ? q / stock : nan;
            rec.theta[static_cast<std::size_t>(rem - 1)] = share;
            if (rem == 1) q1 = q;
            wam += (static_cast<double>(rem) - 0.5) * share;
        }
        rec.rr = stock > 0.0 ? q1 / stock : nan;
        rec.wam = wam;
        years.push_back(std::move(rec));

        if (config.renormalize) {
            for (double& v : face) v /= gamma;
            stock /= gamma;
        }
    }

    return SimulationState(std::move(years));
}

EmpiricalMetrics empirical_metrics_at(const SimulationState& state, int year) {
    const YearRecord& rec = state.at(year);
    if (std::isnan(rec.wac))
        fail(errc::zero_stock, "no stock outstanding entering year " + std::to_string(year));
    return EmpiricalMetrics{rec.wac, rec.rr, rec.wam};
}

}  // namespace debtflow
