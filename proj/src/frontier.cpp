#include "debtflow/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "debtflow/error.hpp"

namespace debtflow {

namespace {

// Monotone piecewise-cubic (Fritsch-Carlson) interpolant with analytic
// second derivative. Flat-extends outside the node range.
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)), m_(x_.size(), 0.0) {
        std::size_t n = x_.size();
        if (n < 2) {
            if (n == 1) m_[0] = 0.0;
            return;
        }
        std::vector<double> h(n - 1), d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            d[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                m_[i] = 0.0;
            } else {
                double w1 = 2.0 * h[i] + h[i - 1];
                double w2 = h[i] + 2.0 * h[i - 1];
                m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
    }

    double value(double s) const {
        auto [i, u, h] = locate(s);
        double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
        double h10 = u * (1.0 - u) * (1.0 - u);
        double h01 = u * u * (3.0 - 2.0 * u);
        double h11 = u * u * (u - 1.0);
        return h00 * y_[i] + h * h10 * m_[i] + h01 * y_[i + 1] + h * h11 * m_[i + 1];
    }

    double second_derivative(double s) const {
        auto [i, u, h] = locate(s);
        double a = (12.0 * u - 6.0) * (y_[i] - y_[i + 1]) / (h * h);
        double b = ((6.0 * u - 4.0) * m_[i] + (6.0 * u - 2.0) * m_[i + 1]) / h;
        return a + b;
    }

private:
    struct Segment {
        std::size_t i;
        double u;
        double h;
    };
    Segment locate(double s) const {
        std::size_t n = x_.size();
        if (n < 2) return {0, 0.0, 1.0};
        std::size_t i = 0;
        while (i + 2 < n && s > x_[i + 1]) ++i;
        double h = x_[i + 1] - x_[i];
        double u = std::clamp((s - x_[i]) / h, 0.0, 1.0);
        return {i, u, h};
    }

    std::vector<double> x_, y_, m_;
};

// tau extended to continuous tenor, with second derivative.
double tau_continuous(double s, const GrowthAssumption& growth) {
    if (growth.is_zero()) return 1.0 / s;
    return growth.g() / std::expm1(s * std::log1p(growth.g()));
}

double tau_second_derivative(double s, const GrowthAssumption& growth) {
    if (growth.is_zero()) return 2.0 / (s * s * s);
    double lg = std::log1p(growth.g());
    double gs = std::exp(s * lg);
    double em = gs - 1.0;
    return growth.g() * lg * lg * gs * (gs + 1.0) / (em * em * em);
}

}  // namespace

double sweet_spot_tenor(double risk_budget, const GrowthAssumption& growth) {
    if (!(risk_budget > 0.0) || risk_budget > 1.0 + 1e-12)
        fail(errc::risk_out_of_range,
             "rollover budget must lie in (0, 1], got " + std::to_string(risk_budget));
    if (growth.is_zero()) return 1.0 / risk_budget;
    return std::log1p(growth.g() / risk_budget) / std::log1p(growth.g());
}

FrontierPoint frontier_point(double risk_budget, const GrowthAssumption& growth,
                             const RateCurve& rates, const TenorGrid& grid) {
    if (!(risk_budget > 0.0) || risk_budget > 1.0 + 1e-12)
        fail(errc::risk_out_of_range,
             "rollover budget must lie in (0, 1], got " + std::to_string(risk_budget));
    double tau_longest = rollover_tau(grid.longest(), growth);
    if (risk_budget < tau_longest - 1e-12)
        fail(errc::risk_below_longest_tenor,
             "budget " + std::to_string(risk_budget) + " is below tau(" +
                 std::to_string(grid.longest()) + ") = " + std::to_string(tau_longest) +
                 "; no strategy on the grid rolls that little");

    // tau is strictly decreasing along the grid; find the bracketing pair.
    const auto& tenors = grid.tenors();
    std::size_t hi = 0;
    while (hi + 1 < tenors.size() && rollover_tau(tenors[hi], growth) > risk_budget + 1e-12)
        ++hi;

    double tau_hi = rollover_tau(tenors[hi], growth);
    if (std::abs(tau_hi - risk_budget) <= 1e-12 || hi == 0) {
        Strategy strategy = Strategy::single(tenors[hi], grid);
        StrategyMetrics m = metrics(strategy, growth, rates);
        return FrontierPoint{risk_budget, tenors[hi], 1.0, std::move(strategy), m};
    }

    std::size_t lo = hi - 1;
    double tau_lo = rollover_tau(tenors[lo], growth);
    double alpha = (risk_budget - tau_hi) / (tau_lo - tau_hi);
    // Blend in weight space, then map back to fractions through the
    // growth adjustment f_j proportional to d_j w_j.
    auto d = [&](int j) {
        return growth.is_zero() ? 1.0 / static_cast<double>(j)
                                : 1.0 / -std::expm1(-j * std::log1p(growth.g()));
    };
    double f_lo = alpha * d(tenors[lo]);
    double f_hi = (1.0 - alpha) * d(tenors[hi]);
    double norm = f_lo + f_hi;
    Strategy strategy =
        validate_strategy({{tenors[lo], f_lo / norm}, {tenors[hi], f_hi / norm}}, grid);
    StrategyMetrics m = metrics(strategy, growth, rates);
    return FrontierPoint{risk_budget, tenors[lo], alpha, std::move(strategy), m};
}

std::vector<FrontierPoint> frontier_sweep(const std::vector<double>& risk_budgets,
                                          const GrowthAssumption& growth,
                                          const RateCurve& rates, const TenorGrid& grid) {
    std::vector<FrontierPoint> points;
    points.reserve(risk_budgets.size());
    for (double r : risk_budgets) points.push_back(frontier_point(r, growth, rates, grid));
    return points;
}

ConvexityReport verify_convexity_condition(const RateCurve& rates,
                                           const GrowthAssumption& growth,
                                           const TenorGrid* grid) {
    std::vector<int> nodes;
    if (grid) {
        nodes = grid->tenors();
    } else {
        for (const auto& [tenor, rate] : rates.knots()) nodes.push_back(tenor);
    }
    if (nodes.size() < 2)
        fail(errc::invalid_argument, "convexity check needs at least two tenors");

    std::vector<double> xs(nodes.size()), ys(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        xs[i] = static_cast<double>(nodes[i]);
        ys[i] = rates.rate_at(nodes[i]);
    }
    MonotoneCubic r(xs, ys);

    ConvexityReport report;

    // Exact probe on the node tenors: for each j, the cheapest two-node
    // blend whose kernel value matches tau_j. A blend beating r_j is a
    // concrete dominating barbell.
    std::vector<double> node_tau(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        node_tau[i] = rollover_tau(nodes[i], growth);
    report.hull_margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        double best = std::numeric_limits<double>::infinity();
        // Single competitors that roll no more than tenor j does.
        for (std::size_t b = j + 1; b < nodes.size(); ++b) best = std::min(best, ys[b]);
        // Two-node blends matching tau_j exactly (node a is the short leg).
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                if (a == j || b == j) continue;
                if (node_tau[a] < node_tau[j] || node_tau[b] > node_tau[j]) continue;
                double span = node_tau[a] - node_tau[b];
                double alpha = span > 0.0 ? (node_tau[j] - node_tau[b]) / span : 1.0;
                best = std::min(best, alpha * ys[a] + (1.0 - alpha) * ys[b]);
            }
        }
        if (best == std::numeric_limits<double>::infinity()) continue;
        double margin = best - ys[j];
        if (margin < report.hull_margin) {
            report.hull_margin = margin;
            report.hull_worst_tenor = nodes[j];
        }
    }
    report.single_tenor_optimal = report.hull_margin >= -1e-12;

    // Sufficient curvature bound on a dense grid. Conservative by nature.
    const double step = 0.1;
    const double lo = xs.front(), hi = xs.back();
    const int count = static_cast<int>(std::round((hi - lo) / step)) + 1;
    std::vector<double> sv(count), rv(count), tv(count), r2(count), t2(count);
    for (int i = 0; i < count; ++i) {
        double s = std::min(lo + step * i, hi);
        sv[i] = s;
        rv[i] = r.value(s);
        tv[i] = tau_continuous(s, growth);
        r2[i] = r.second_derivative(s);
        t2[i] = tau_second_derivative(s, growth);
    }
    report.bound_margin = std::numeric_limits<double>::infinity();
    for (int ji = 0; ji < count; ++ji) {
        for (int ti = ji + 1; ti < count; ++ti) {
            double dr = rv[ti] - rv[ji];
            if (dr <= 1e-12) continue;  // bound needs an increasing curve
            double coef = dr / (tv[ji] - tv[ti]);
            for (int si = 0; si < count; ++si) {
                double slack = r2[si] + coef * t2[si];
                if (slack < report.bound_margin) {
                    report.bound_margin = slack;
                    report.bound_worst_j = sv[ji];
                    report.bound_worst_t = sv[ti];
                    report.bound_worst_s = sv[si];
                }
            }
        }
    }
    return report;
}

}  // namespace debtflow
