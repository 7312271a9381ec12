#include "debtflow/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "debtflow/error.hpp"
#include "debtflow/simplex.hpp"

namespace debtflow {

const char* to_string(SolveStatus status) noexcept {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

std::vector<double> growth_adjustment(const TenorGrid& grid, const GrowthAssumption& growth) {
    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        int j = grid.tenors()[i];
        d[i] = growth.is_zero() ? 1.0 / static_cast<double>(j)
                                : 1.0 / -std::expm1(-j * std::log1p(growth.g()));
    }
    return d;
}

// Builds the weight-space LP shared by optimize_constrained and the
// dominant-direction solves.
lp::Problem build_problem(const PolicyWindow& window, const GrowthAssumption& growth,
                          const std::vector<double>& objective,
                          const std::vector<double>& budget_coeffs, double budget_rhs) {
    const TenorGrid& grid = window.grid();
    const std::size_t n = grid.size();
    std::vector<double> d = growth_adjustment(grid, growth);

    lp::Problem problem;
    problem.objective = objective;

    lp::Constraint simplex_row;
    simplex_row.coeffs.assign(n, 1.0);
    simplex_row.type = lp::ConstraintType::equal;
    simplex_row.rhs = 1.0;
    simplex_row.name = "weights_sum";
    problem.constraints.push_back(std::move(simplex_row));

    lp::Constraint budget;
    budget.coeffs = budget_coeffs;
    budget.type = lp::ConstraintType::less_equal;
    budget.rhs = budget_rhs;
    budget.name = "risk_budget";
    problem.constraints.push_back(std::move(budget));

    // L_j sum_k d_k w_k <= d_j w_j <= U_j sum_k d_k w_k; rows for vacuous
    // bounds (L = 0, U = 1) are omitted.
    for (std::size_t j = 0; j < n; ++j) {
        int tenor = grid.tenors()[j];
        if (window.lower()[j] > 0.0) {
            lp::Constraint row;
            row.coeffs.assign(n, 0.0);
            for (std::size_t k = 0; k < n; ++k) row.coeffs[k] = window.lower()[j] * d[k];
            row.coeffs[j] -= d[j];
            row.rhs = 0.0;
            row.name = "lower[" + std::to_string(tenor) + "]";
            problem.constraints.push_back(std::move(row));
        }
        if (window.upper()[j] < 1.0) {
            lp::Constraint row;
            row.coeffs.assign(n, 0.0);
            for (std::size_t k = 0; k < n; ++k) row.coeffs[k] = -window.upper()[j] * d[k];
            row.coeffs[j] += d[j];
            row.rhs = 0.0;
            row.name = "upper[" + std::to_string(tenor) + "]";
            problem.constraints.push_back(std::move(row));
        }
    }
    return problem;
}

// Weight vector to normalized fractions via f_j proportional to d_j w_j.
Strategy weights_to_strategy(const std::vector<double>& w, const TenorGrid& grid,
                             const GrowthAssumption& growth) {
    std::vector<double> d = growth_adjustment(grid, growth);
    std::map<int, double> f;
    double norm = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) norm += d[i] * w[i];
    for (std::size_t i = 0; i < grid.size(); ++i)
        f[grid.tenors()[i]] = d[i] * w[i] / norm;
    return validate_strategy(f, grid);
}

std::vector<double> clean_weights(std::vector<double> w) {
    double sum = 0.0;
    for (double& v : w) {
        if (v < 0.0) {
            if (v < -1e-8) fail(errc::numerical_failure, "negative weight from LP");
            v = 0.0;
        }
        sum += v;
    }
    if (sum <= 0.0) fail(errc::numerical_failure, "LP returned a zero weight vector");
    for (double& v : w) v /= sum;
    return w;
}

std::vector<double> rate_vector(const TenorGrid& grid, const RateCurve& rates) {
    std::vector<double> r(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) r[i] = rates.rate_at(grid.tenors()[i]);
    return r;
}

std::vector<double> tau_vector(const TenorGrid& grid, const GrowthAssumption& growth) {
    std::vector<double> t(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        t[i] = rollover_tau(grid.tenors()[i], growth);
    return t;
}

}  // namespace

OptimizationResult optimize_constrained(const PolicyWindow& window, double risk_budget,
                                        const GrowthAssumption& growth,
                                        const RateCurve& rates) {
    if (!std::isfinite(risk_budget) || risk_budget <= 0.0)
        fail(errc::risk_out_of_range, "rollover budget must be positive");
    if (window.empty()) return OptimizationResult{SolveStatus::infeasible, {}, {}, {}, {}};

    const TenorGrid& grid = window.grid();
    lp::Problem problem = build_problem(window, growth, rate_vector(grid, rates),
                                        tau_vector(grid, growth), risk_budget);
    lp::Solution sol = lp::solve(problem);
    if (sol.status == lp::Status::infeasible)
        return OptimizationResult{SolveStatus::infeasible, {}, {}, {}, {}};
    if (sol.status == lp::Status::unbounded)
        return OptimizationResult{SolveStatus::unbounded, {}, {}, {}, {}};

    std::vector<double> w = clean_weights(sol.x);
    Strategy f = weights_to_strategy(w, grid, growth);
    StrategyMetrics m = metrics(f, growth, rates);
    if (!window.contains(f, 1e-8))
        fail(errc::numerical_failure, "LP optimum violates the policy window");

    OptimizationResult result;
    result.status = SolveStatus::optimal;
    result.optimal_w = CostWeights{grid, std::move(w)};
    result.optimal_f = std::move(f);
    result.metrics = m;
    result.binding_constraints = std::move(sol.binding);
    return result;
}

std::pair<Strategy, Strategy> dominant_directions(const Strategy& current,
                                                  const PolicyWindow& window,
                                                  const GrowthAssumption& growth,
                                                  const RateCurve& rates) {
    if (!window.contains(current, 1e-9))
        fail(errc::invalid_argument, "current strategy lies outside the policy window");
    const TenorGrid& grid = window.grid();
    StrategyMetrics base = metrics(current, growth, rates);

    auto solve_direction = [&](const std::vector<double>& objective,
                               const std::vector<double>& budget_coeffs,
                               double budget_rhs) -> Strategy {
        lp::Problem problem =
            build_problem(window, growth, objective, budget_coeffs, budget_rhs);
        lp::Solution sol = lp::solve(problem);
        if (sol.status != lp::Status::optimal)
            fail(errc::infeasible,
                 "direction solve reported " +
                     std::string(sol.status == lp::Status::infeasible ? "infeasible"
                                                                      : "unbounded") +
                     " although the current strategy is feasible");
        return weights_to_strategy(clean_weights(sol.x), grid, growth);
    };

    // Budgets get a whisker of slack so the current strategy itself stays
    // strictly feasible under floating-point round-off.
    Strategy cost_dominant = solve_direction(rate_vector(grid, rates),
                                             tau_vector(grid, growth), base.rr_star + 1e-12);
    Strategy risk_dominant = solve_direction(tau_vector(grid, growth),
                                             rate_vector(grid, rates), base.wac_star + 1e-12);
    return {std::move(cost_dominant), std::move(risk_dominant)};
}

}  // namespace debtflow
