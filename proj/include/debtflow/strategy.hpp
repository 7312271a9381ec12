/**
 * @file strategy.hpp
 * @brief Issuance strategy: fractions of gross new borrowing by tenor
 */

#pragma once

#include <map>
#include <vector>

#include "debtflow/tenor_grid.hpp"

namespace debtflow {

/// Issuance fractions f over a tenor grid. Nonnegative, sum to one
/// (maintained to 1e-9 internally), stored densely over the grid so
/// that vector shapes are stable across strategies.
class Strategy {
public:
    /// Fraction for `tenor` (zero where the strategy allocates nothing).
    double fraction(int tenor) const;

    /// Dense fractions aligned with grid().tenors().
    const std::vector<double>& fractions() const noexcept { return fractions_; }

    const TenorGrid& grid() const noexcept { return grid_; }

    /// All grid tenors and their fractions, including zeros.
    std::map<int, double> as_map() const;

    /// Concentrated issuance at a single tenor (e_j).
    static Strategy single(int tenor, const TenorGrid& grid);

    friend Strategy validate_strategy(const std::map<int, double>& fractions,
                                      const TenorGrid& grid);

private:
    Strategy(TenorGrid grid, std::vector<double> dense);

    TenorGrid grid_;
    std::vector<double> fractions_;
};

/// Validates and normalizes raw fractions into a Strategy.
///
/// Rejects negative entries and tenors outside the grid. The sum may
/// deviate from 1 by at most 1e-2 (tabulated fractions are commonly
/// rounded to three digits); within that band the fractions are divided
/// by their sum, beyond it the input is rejected as sum_far_from_one.
Strategy validate_strategy(const std::map<int, double>& fractions, const TenorGrid& grid);

}  // namespace debtflow
