#include "debtflow/strategy.hpp"

#include <cmath>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

namespace {
// Raw inputs are commonly table values rounded to three digits, so the
// acceptance band is generous; anything inside it is renormalized.
constexpr double kInputSumTolerance = 1e-2;
}  // namespace

Strategy::Strategy(TenorGrid grid, std::vector<double> dense)
    : grid_(std::move(grid)), fractions_(std::move(dense)) {}

double Strategy::fraction(int tenor) const {
    if (!grid_.contains(tenor)) return 0.0;
    return fractions_[grid_.index_of(tenor)];
}

std::map<int, double> Strategy::as_map() const {
    std::map<int, double> out;
    for (std::size_t i = 0; i < fractions_.size(); ++i) out[grid_.tenors()[i]] = fractions_[i];
    return out;
}

Strategy Strategy::single(int tenor, const TenorGrid& grid) {
    return validate_strategy({{tenor, 1.0}}, grid);
}

Strategy validate_strategy(const std::map<int, double>& fractions, const TenorGrid& grid) {
    std::vector<double> dense(grid.size(), 0.0);
    double sum = 0.0;
    for (const auto& [tenor, value] : fractions) {
        if (!grid.contains(tenor))
            fail(errc::unknown_tenor,
                 "strategy allocates to tenor " + std::to_string(tenor) + " not on the grid");
        if (!std::isfinite(value))
            fail(errc::invalid_argument, "fraction at tenor " + std::to_string(tenor) +
                                             " is not finite");
        if (value < 0.0)
            fail(errc::negative_fraction, "fraction at tenor " + std::to_string(tenor) +
                                              " is negative (" + std::to_string(value) + ")");
        dense[grid.index_of(tenor)] = value;
        sum += value;
    }
    if (std::abs(sum - 1.0) > kInputSumTolerance)
        fail(errc::sum_far_from_one,
             "fractions sum to " + std::to_string(sum) + ", expected 1 within " +
                 std::to_string(kInputSumTolerance));
    for (double& v : dense) v /= sum;
    return Strategy(grid, std::move(dense));
}

}  // namespace debtflow
