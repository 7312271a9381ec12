#include "debtflow/market.hpp"

#include <cmath>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

GrowthAssumption::GrowthAssumption(double g) : g_(g) {
    if (!std::isfinite(g) || g < 0.0)
        fail(errc::invalid_argument, "growth rate must be finite and >= 0, got " +
                                         std::to_string(g));
}

RateCurve::RateCurve(std::map<int, double> knots) : knots_(std::move(knots)) {
    if (knots_.empty()) fail(errc::empty_curve, "rate curve has no knots");
    for (const auto& [tenor, rate] : knots_) {
        if (tenor < 1)
            fail(errc::invalid_argument, "curve knot at tenor " + std::to_string(tenor) +
                                             " (tenors start at 1)");
        if (!std::isfinite(rate))
            fail(errc::invalid_argument,
                 "rate at tenor " + std::to_string(tenor) + " is not finite");
    }
}

double RateCurve::rate_at(int tenor) const {
    if (knots_.empty()) fail(errc::empty_curve, "rate curve has no knots");
    if (tenor < 1) fail(errc::invalid_argument, "tenor must be >= 1");
    auto upper = knots_.lower_bound(tenor);
    if (upper != knots_.end() && upper->first == tenor) return upper->second;
    if (upper == knots_.end()) return knots_.rbegin()->second;  // flat beyond last knot
    if (upper == knots_.begin()) return upper->second;          // flat before first knot
    auto lower = std::prev(upper);
    double span = static_cast<double>(upper->first - lower->first);
    double alpha = static_cast<double>(tenor - lower->first) / span;
    return lower->second + alpha * (upper->second - lower->second);
}

}  // namespace debtflow
