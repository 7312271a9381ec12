#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "debtflow/error.hpp"
#include "debtflow/frontier.hpp"
#include "debtflow/io.hpp"
#include "debtflow/optimizer.hpp"
#include "support/oracles.hpp"

using namespace debtflow;

namespace {
RateCurve curve() { return io::default_assumptions().rates; }
}

TEST_CASE("sweet spot tenor") {
    CHECK(sweet_spot_tenor(0.2, GrowthAssumption(0.0)) == 5.0);
    CHECK(sweet_spot_tenor(1.0, GrowthAssumption(0.08)) == doctest::Approx(1.0).epsilon(1e-12));

    // Inverse of the kernel at every tenor and growth rate.
    TenorGrid grid = TenorGrid::standard();
    for (double g : {0.04, 0.08, 0.12}) {
        GrowthAssumption growth(g);
        for (int j : grid.tenors())
            CHECK(std::abs(sweet_spot_tenor(rollover_tau(j, growth), growth) - j) < 1e-9);
    }

    using debtflow::testing::thrown_code;
    CHECK(thrown_code([] { sweet_spot_tenor(0.0, GrowthAssumption(0.08)); }) ==
          errc::risk_out_of_range);
    CHECK(thrown_code([] { sweet_spot_tenor(1.5, GrowthAssumption(0.08)); }) ==
          errc::risk_out_of_range);
}

TEST_CASE("frontier points") {
    TenorGrid grid = TenorGrid::full(30);
    RateCurve r = curve();
    GrowthAssumption g8(0.08);

    SUBCASE("integral budget concentrates on a single tenor") {
        double budget = rollover_tau(7, g8);
        FrontierPoint p = frontier_point(budget, g8, r, grid);
        CHECK(p.lower_tenor == 7);
        CHECK(p.blend_alpha == 1.0);
        CHECK(p.strategy.fraction(7) == 1.0);
        CHECK(p.metrics.t_wac == doctest::Approx(7.0).epsilon(1e-12));
    }

    SUBCASE("midpoint kernel budget blends evenly in weight space at g = 0") {
        GrowthAssumption g0(0.0);
        double budget = 0.5 * (rollover_tau(2, g0) + rollover_tau(3, g0));
        FrontierPoint p = frontier_point(budget, g0, r, grid);
        CHECK(p.lower_tenor == 2);
        CHECK(p.blend_alpha == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("budget 0.3 at 8% growth blends tenors 3 and 4") {
        FrontierPoint p = frontier_point(0.3, g8, r, grid);
        CHECK(p.lower_tenor == 3);
        CHECK(p.strategy.fraction(3) + p.strategy.fraction(4) == doctest::Approx(1.0));
        CHECK(std::abs(p.metrics.rr_star - 0.3) < 1e-9);
    }

    SUBCASE("budgets below the longest tenor's rollover are infeasible") {
        using debtflow::testing::thrown_code;
        CHECK(thrown_code([&] {
                  frontier_point(0.5 * rollover_tau(30, g8), g8, r, grid);
              }) == errc::risk_below_longest_tenor);
    }

    SUBCASE("blend invariant and metric round-trip on random budgets") {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> uni(rollover_tau(30, g8), 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            double budget = uni(rng);
            FrontierPoint p = frontier_point(budget, g8, r, grid);
            double tau_lo = rollover_tau(p.lower_tenor, g8);
            if (p.blend_alpha < 1.0) {
                double tau_hi = rollover_tau(p.lower_tenor + 1, g8);
                CHECK(std::abs(p.blend_alpha * tau_lo + (1.0 - p.blend_alpha) * tau_hi -
                               budget) < 1e-9);
                CHECK(tau_hi <= budget + 1e-12);
                CHECK(budget <= tau_lo + 1e-12);
            }
            CHECK(std::abs(p.metrics.rr_star - budget) < 1e-9);
        }
    }
}

TEST_CASE("no random strategy undercuts a single-tenor point at its risk level") {
    TenorGrid grid = TenorGrid::standard();
    RateCurve r = curve();
    std::mt19937_64 rng(101);
    for (double g : {0.0, 0.08}) {
        GrowthAssumption growth(g);
        REQUIRE(verify_convexity_condition(r, growth, &grid).single_tenor_optimal);
        std::vector<std::pair<double, double>> bars;  // (tau_j, r_j)
        for (int j : grid.tenors()) bars.emplace_back(rollover_tau(j, growth), r.rate_at(j));
        for (int trial = 0; trial < 2000; ++trial) {
            Strategy s = validate_strategy(testing::random_simplex(rng, grid), grid);
            StrategyMetrics m = metrics(s, growth, r);
            for (auto [tau_j, r_j] : bars)
                if (m.rr_star <= tau_j) CHECK(m.wac_star >= r_j - 1e-9);
        }
    }
}

TEST_CASE("frontier cost is monotone in the risk budget") {
    TenorGrid grid = TenorGrid::full(30);
    RateCurve r = curve();
    GrowthAssumption g8(0.08);
    double prev_wac = 1e300, prev_twac = 1e300;
    for (double budget = 0.01; budget <= 1.0; budget += 0.005) {
        FrontierPoint p = frontier_point(budget, g8, r, grid);
        // Loosening the budget can only cheapen the frontier.
        CHECK(p.metrics.wac_star <= prev_wac + 1e-12);
        CHECK(p.metrics.t_wac <= prev_twac + 1e-12);
        prev_wac = p.metrics.wac_star;
        prev_twac = p.metrics.t_wac;
    }
}

TEST_CASE("frontier points agree with the constrained optimizer") {
    RateCurve r = curve();
    GrowthAssumption g8(0.08);
    std::mt19937_64 rng(67);

    SUBCASE("exact agreement on a grid that passes the curve check") {
        TenorGrid grid = TenorGrid::standard();
        REQUIRE(verify_convexity_condition(r, g8, &grid).single_tenor_optimal);
        PolicyWindow window = PolicyWindow::full(grid);
        std::uniform_real_distribution<double> uni(rollover_tau(30, g8), 1.0);
        for (int trial = 0; trial < 15; ++trial) {
            double budget = uni(rng);
            FrontierPoint p = frontier_point(budget, g8, r, grid);
            OptimizationResult lp = optimize_constrained(window, budget, g8, r);
            REQUIRE(lp.status == SolveStatus::optimal);
            CHECK(lp.metrics->wac_star == doctest::Approx(p.metrics.wac_star).epsilon(1e-9));
        }
    }

    SUBCASE("on the dense grid the LP can only improve on the adjacent blend") {
        // Interpolated to every integer tenor, this curve has a concave
        // corner at 10y, so near it a barbell undercuts the neighboring
        // single tenors and the analytic blend is an upper bound.
        TenorGrid grid = TenorGrid::full(30);
        PolicyWindow window = PolicyWindow::full(grid);
        std::uniform_real_distribution<double> uni(rollover_tau(30, g8), 1.0);
        for (int trial = 0; trial < 10; ++trial) {
            double budget = uni(rng);
            FrontierPoint p = frontier_point(budget, g8, r, grid);
            OptimizationResult lp = optimize_constrained(window, budget, g8, r);
            REQUIRE(lp.status == SolveStatus::optimal);
            CHECK(lp.metrics->wac_star <= p.metrics.wac_star + 1e-12);
        }
        OptimizationResult at10 =
            optimize_constrained(window, rollover_tau(10, g8), g8, r);
        REQUIRE(at10.status == SolveStatus::optimal);
        CHECK(at10.metrics->wac_star < r.rate_at(10) - 1e-4);  // the 9/11 barbell wins
    }
}

TEST_CASE("convexity report") {
    GrowthAssumption g8(0.08);

    SUBCASE("the default grid and long-run average curve support single-tenor optimality") {
        TenorGrid grid = TenorGrid::standard();
        ConvexityReport report = verify_convexity_condition(curve(), g8, &grid);
        CHECK(report.single_tenor_optimal);
        CHECK(report.hull_margin > 0.0);
        // The sufficient curvature bound is conservative for this mildly
        // concave curve; it reports a small negative slack even though no
        // dominating blend exists.
        CHECK(report.bound_margin < 0.1);
    }

    SUBCASE("a linear curve satisfies even the curvature bound") {
        std::map<int, double> knots;
        for (int j = 1; j <= 30; ++j) knots[j] = 0.03 + 0.001 * j;
        ConvexityReport report = verify_convexity_condition(RateCurve(knots), g8);
        CHECK(report.single_tenor_optimal);
        CHECK(report.bound_margin >= 0.0);
    }

    SUBCASE("steep-then-flat curves are flagged: barbells dominate the middle") {
        std::map<int, double> corner{{1, 0.01}, {2, 0.02}, {3, 0.03}, {4, 0.04},
                                     {5, 0.05}, {6, 0.05}, {10, 0.05}, {30, 0.05}};
        ConvexityReport report = verify_convexity_condition(RateCurve(corner), g8);
        CHECK_FALSE(report.single_tenor_optimal);
        CHECK(report.hull_margin < 0.0);
        CHECK(report.bound_margin < 0.0);
    }

    SUBCASE("including a 20y bucket exposes a dominated 10y point on this curve") {
        TenorGrid with20(30, {1, 2, 3, 5, 7, 10, 20, 30});
        ConvexityReport report = verify_convexity_condition(curve(), g8, &with20);
        CHECK_FALSE(report.single_tenor_optimal);
        CHECK(report.hull_worst_tenor == 10);
    }
}
