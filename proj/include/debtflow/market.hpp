/**
 * @file market.hpp
 * @brief Market environment: deficit growth assumption and static yield curve
 */

#pragma once

#include <map>

namespace debtflow {

/// Constant per-year deficit growth rate g >= 0 (deficits scale as (1+g)^t).
///
/// g == 0 is handled by dedicated limit formulas downstream, never by
/// perturbing g, so the exact-zero case is meaningful here.
class GrowthAssumption {
public:
    explicit GrowthAssumption(double g);

    double g() const noexcept { return g_; }
    double gamma() const noexcept { return 1.0 + g_; }
    bool is_zero() const noexcept { return g_ == 0.0; }

private:
    double g_;
};

/// Static annual yield curve over integer tenors.
///
/// Knot rates are exact; between knots the rate is linearly interpolated
/// in tenor, and beyond the first/last knot it extrapolates flat.
class RateCurve {
public:
    explicit RateCurve(std::map<int, double> knots);

    /// Rate at an integer tenor >= 1.
    double rate_at(int tenor) const;

    const std::map<int, double>& knots() const noexcept { return knots_; }

private:
    std::map<int, double> knots_;
};

inline double rate_at(const RateCurve& curve, int tenor) { return curve.rate_at(tenor); }

}  // namespace debtflow
