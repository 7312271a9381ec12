/**
 * @file policy_window.hpp
 * @brief Box constraints L <= f <= U on issuance fractions
 */

#pragma once

#include <map>
#include <vector>

#include "debtflow/strategy.hpp"
#include "debtflow/tenor_grid.hpp"

namespace debtflow {

/// Admissible-set box bounds on issuance fractions, dense over a grid.
///
/// Tenors missing from `lower` default to 0 and tenors missing from
/// `upper` default to 1; to exclude a tenor entirely set its upper
/// bound to 0. Requires 0 <= L_j <= U_j <= 1 per tenor. A window with
/// sum(L) > 1 or sum(U) < 1 is structurally empty (no strategy fits);
/// that is reported by empty(), not rejected here, so the optimizer
/// can surface it as an infeasible solve.
class PolicyWindow {
public:
    PolicyWindow(const std::map<int, double>& lower, const std::map<int, double>& upper,
                 const TenorGrid& grid);

    /// The unconstrained simplex: L = 0, U = 1 everywhere.
    static PolicyWindow full(const TenorGrid& grid);

    /// Degenerate window pinning exactly one strategy: L = U = f.
    static PolicyWindow pin(const Strategy& strategy);

    /// f +/- margin per tenor, clamped to [0, 1].
    static PolicyWindow around(const Strategy& strategy, double margin);

    const TenorGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }

    bool empty() const noexcept;
    bool contains(const Strategy& strategy, double tol = 1e-9) const;

private:
    PolicyWindow(TenorGrid grid, std::vector<double> lower, std::vector<double> upper);

    TenorGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

}  // namespace debtflow
