#include "debtflow/policy_window.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

PolicyWindow::PolicyWindow(TenorGrid grid, std::vector<double> lower, std::vector<double> upper)
    : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {}

PolicyWindow::PolicyWindow(const std::map<int, double>& lower,
                           const std::map<int, double>& upper, const TenorGrid& grid)
    : grid_(grid), lower_(grid.size(), 0.0), upper_(grid.size(), 1.0) {
    for (const auto& [tenor, value] : lower) {
        if (!grid_.contains(tenor))
            fail(errc::unknown_tenor,
                 "window lower bound at tenor " + std::to_string(tenor) + " not on the grid");
        lower_[grid_.index_of(tenor)] = value;
    }
    for (const auto& [tenor, value] : upper) {
        if (!grid_.contains(tenor))
            fail(errc::unknown_tenor,
                 "window upper bound at tenor " + std::to_string(tenor) + " not on the grid");
        upper_[grid_.index_of(tenor)] = value;
    }
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        int tenor = grid_.tenors()[i];
        if (lower_[i] < 0.0 || upper_[i] > 1.0 || lower_[i] > upper_[i])
            fail(errc::invalid_argument, "window bounds at tenor " + std::to_string(tenor) +
                                             " violate 0 <= L <= U <= 1");
    }
}

PolicyWindow PolicyWindow::full(const TenorGrid& grid) {
    return PolicyWindow(grid, std::vector<double>(grid.size(), 0.0),
                        std::vector<double>(grid.size(), 1.0));
}

PolicyWindow PolicyWindow::pin(const Strategy& strategy) {
    return PolicyWindow(strategy.grid(), strategy.fractions(), strategy.fractions());
}

PolicyWindow PolicyWindow::around(const Strategy& strategy, double margin) {
    if (margin < 0.0) fail(errc::invalid_argument, "window margin must be >= 0");
    std::vector<double> lower(strategy.grid().size());
    std::vector<double> upper(strategy.grid().size());
    for (std::size_t i = 0; i < lower.size(); ++i) {
        lower[i] = std::max(0.0, strategy.fractions()[i] - margin);
        upper[i] = std::min(1.0, strategy.fractions()[i] + margin);
    }
    return PolicyWindow(strategy.grid(), std::move(lower), std::move(upper));
}

bool PolicyWindow::empty() const noexcept {
    double lo = std::accumulate(lower_.begin(), lower_.end(), 0.0);
    double hi = std::accumulate(upper_.begin(), upper_.end(), 0.0);
    return lo > 1.0 + 1e-12 || hi < 1.0 - 1e-12;
}

bool PolicyWindow::contains(const Strategy& strategy, double tol) const {
    if (!(strategy.grid() == grid_)) return false;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        double f = strategy.fractions()[i];
        if (f < lower_[i] - tol || f > upper_[i] + tol) return false;
    }
    return true;
}

}  // namespace debtflow
