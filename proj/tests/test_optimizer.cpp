#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "debtflow/error.hpp"
#include "debtflow/io.hpp"
#include "debtflow/optimizer.hpp"
#include "support/oracles.hpp"

using namespace debtflow;

namespace {

const std::map<int, double> kFY2016{{1, 0.423}, {2, 0.134}, {3, 0.077}, {5, 0.131},
                                    {7, 0.098}, {10, 0.089}, {30, 0.049}};

RateCurve curve() { return io::default_assumptions().rates; }

Strategy fy2016() { return validate_strategy(kFY2016, TenorGrid::standard()); }

}  // namespace

TEST_CASE("unconstrained solve recovers single-tenor frontier points") {
    TenorGrid grid = TenorGrid::standard();
    PolicyWindow window = PolicyWindow::full(grid);
    GrowthAssumption g8(0.08);
    RateCurve r = curve();
    for (int j : grid.tenors()) {
        double budget = rollover_tau(j, g8);
        OptimizationResult result = optimize_constrained(window, budget, g8, r);
        REQUIRE(result.status == SolveStatus::optimal);
        CHECK(std::abs(result.optimal_f->fraction(j) - 1.0) < 1e-8);
        CHECK(result.metrics->wac_star == doctest::Approx(r.rate_at(j)).epsilon(1e-8));
    }
}

TEST_CASE("pinning the window reproduces the pinned strategy") {
    Strategy target = fy2016();
    PolicyWindow pinned = PolicyWindow::pin(target);
    OptimizationResult result =
        optimize_constrained(pinned, 1.0, GrowthAssumption(0.08), curve());
    REQUIRE(result.status == SolveStatus::optimal);
    for (std::size_t i = 0; i < target.grid().size(); ++i)
        CHECK(result.optimal_f->fractions()[i] ==
              doctest::Approx(target.fractions()[i]).epsilon(1e-8));
    CHECK(result.metrics->wac_star == doctest::Approx(0.0439).epsilon(2e-3));
}

TEST_CASE("excluding the sweet-spot tenor costs money and binds its bound") {
    TenorGrid grid = TenorGrid::standard();
    GrowthAssumption g8(0.08);
    RateCurve r = curve();
    double budget = rollover_tau(5, g8);

    PolicyWindow no5({}, {{5, 0.0}}, grid);
    OptimizationResult constrained = optimize_constrained(no5, budget, g8, r);
    REQUIRE(constrained.status == SolveStatus::optimal);
    CHECK(constrained.metrics->wac_star > 0.0422 + 1e-6);
    CHECK(std::find(constrained.binding_constraints.begin(),
                    constrained.binding_constraints.end(),
                    "upper[5]") != constrained.binding_constraints.end());
    CHECK(constrained.optimal_f->fraction(5) <= 1e-10);
}

TEST_CASE("infeasible windows and budgets") {
    TenorGrid grid = TenorGrid::standard();
    GrowthAssumption g8(0.08);
    RateCurve r = curve();

    // Upper bounds cannot reach a full allocation.
    std::map<int, double> tight;
    for (int tenor : grid.tenors()) tight[tenor] = 0.05;
    CHECK(optimize_constrained(PolicyWindow({}, tight, grid), 0.5, g8, r).status ==
          SolveStatus::infeasible);

    // Budget below the least-rolling strategy on the grid.
    CHECK(optimize_constrained(PolicyWindow::full(grid), 0.5 * rollover_tau(30, g8), g8,
                               r).status == SolveStatus::infeasible);

    using debtflow::testing::thrown_code;
    CHECK(thrown_code([&] {
              optimize_constrained(PolicyWindow::full(grid), -0.1, g8, r);
          }) == errc::risk_out_of_range);
}

TEST_CASE("optimum satisfies the declared invariants") {
    TenorGrid grid = TenorGrid::standard();
    GrowthAssumption g8(0.08);
    RateCurve r = curve();
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> budget_draw(rollover_tau(30, g8), 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Strategy center = validate_strategy(testing::random_simplex(rng, grid), grid);
        PolicyWindow window = PolicyWindow::around(center, 0.10);
        double budget = std::max(budget_draw(rng),
                                 metrics(center, g8, r).rr_star);  // keep it feasible
        OptimizationResult result = optimize_constrained(window, budget, g8, r);
        REQUIRE(result.status == SolveStatus::optimal);

        // Window respected and budget respected.
        CHECK(window.contains(*result.optimal_f, 1e-8));
        CHECK(result.metrics->rr_star <= budget + 1e-8);

        // f* is the growth-adjusted renormalization of w*.
        double norm = 0.0;
        std::vector<double> expected(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            int j = grid.tenors()[i];
            double d = 1.0 / -std::expm1(-j * std::log1p(0.08));
            expected[i] = d * result.optimal_w->weights[i];
            norm += expected[i];
        }
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(result.optimal_f->fractions()[i] ==
                  doctest::Approx(expected[i] / norm).epsilon(1e-9));

        // tau . w* equals the metrics' rollover.
        double tau_dot_w = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            tau_dot_w += rollover_tau(grid.tenors()[i], g8) * result.optimal_w->weights[i];
        CHECK(std::abs(tau_dot_w - result.metrics->rr_star) < 1e-8);
    }
}

TEST_CASE("solves are deterministic") {
    TenorGrid grid = TenorGrid::standard();
    GrowthAssumption g8(0.08);
    RateCurve r = curve();
    PolicyWindow window = PolicyWindow::around(fy2016(), 0.05);
    OptimizationResult a = optimize_constrained(window, 0.25, g8, r);
    OptimizationResult b = optimize_constrained(window, 0.25, g8, r);
    REQUIRE(a.status == SolveStatus::optimal);
    CHECK(a.optimal_f->fractions() == b.optimal_f->fractions());
    CHECK(a.binding_constraints == b.binding_constraints);
}

TEST_CASE("dominant directions") {
    TenorGrid grid = TenorGrid::standard();
    GrowthAssumption g8(0.08);
    RateCurve r = curve();

    SUBCASE("a frontier point cannot be improved on the open simplex") {
        PolicyWindow window = PolicyWindow::full(grid);
        Strategy e5 = Strategy::single(5, grid);
        auto [cost_dir, risk_dir] = dominant_directions(e5, window, g8, r);
        StrategyMetrics base = metrics(e5, g8, r);
        CHECK(metrics(cost_dir, g8, r).wac_star == doctest::Approx(base.wac_star).epsilon(1e-9));
        CHECK(std::abs(cost_dir.fraction(5) - 1.0) < 1e-8);
    }

    SUBCASE("bills-only can shed risk through a longer tenor at no cost on a flat curve") {
        // On an upward-sloping curve e_1 is already the cheapest point, so
        // an at-no-extra-cost risk improvement needs a flat stretch.
        RateCurve flat(std::map<int, double>{{1, 0.03}, {2, 0.03}});
        TenorGrid two(2, {1, 2});
        PolicyWindow window = PolicyWindow::full(two);
        Strategy bills = Strategy::single(1, two);
        auto [cost_dir, risk_dir] = dominant_directions(bills, window, g8, flat);
        CHECK(risk_dir.fraction(2) > 0.99);
        CHECK(metrics(risk_dir, g8, flat).rr_star < 1.0);
    }

    SUBCASE("FY2016 inside a +/-5pp window improves in both directions") {
        Strategy current = fy2016();
        PolicyWindow window = PolicyWindow::around(current, 0.05);
        StrategyMetrics base = metrics(current, g8, r);
        auto [cost_dir, risk_dir] = dominant_directions(current, window, g8, r);

        StrategyMetrics cheap = metrics(cost_dir, g8, r);
        CHECK(cheap.wac_star < base.wac_star - 1e-6);
        CHECK(cheap.rr_star <= base.rr_star + 1e-8);

        StrategyMetrics safe = metrics(risk_dir, g8, r);
        CHECK(safe.rr_star < base.rr_star - 1e-6);
        CHECK(safe.wac_star <= base.wac_star + 1e-8);

        // Regression fixtures for the two directions (recorded values).
        CHECK(cheap.wac_star == doctest::Approx(0.0426324).epsilon(1e-5));
        CHECK(safe.rr_star == doctest::Approx(0.2224020).epsilon(1e-5));
    }

    SUBCASE("a strategy outside the window is rejected") {
        PolicyWindow window = PolicyWindow::pin(fy2016());
        Strategy other = Strategy::single(5, grid);
        using debtflow::testing::thrown_code;
        CHECK(thrown_code([&] { dominant_directions(other, window, g8, r); }) ==
              errc::invalid_argument);
    }
}
