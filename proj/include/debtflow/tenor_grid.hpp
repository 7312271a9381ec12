/**
 * @file tenor_grid.hpp
 * @brief Integer tenor grid on which strategies are defined
 */

#pragma once

#include <cstddef>
#include <vector>

namespace debtflow {

/// Ordered set of issuable integer tenors (years) within [1, max_tenor].
///
/// Tenor 1 is always present: all bills are aggregated into the 1-year
/// bucket before they reach this layer.
class TenorGrid {
public:
    /// Validates: tenors nonempty, strictly increasing, within [1, max_tenor],
    /// and containing tenor 1.
    TenorGrid(int max_tenor, std::vector<int> tenors);

    /// Every integer tenor 1..max_tenor.
    static TenorGrid full(int max_tenor);

    /// The customary nominal-coupon grid {1, 2, 3, 5, 7, 10, 30}.
    static TenorGrid standard();

    int max_tenor() const noexcept { return max_tenor_; }
    const std::vector<int>& tenors() const noexcept { return tenors_; }
    std::size_t size() const noexcept { return tenors_.size(); }
    int longest() const noexcept { return tenors_.back(); }

    bool contains(int tenor) const noexcept;
    /// Position of `tenor` in tenors(); throws unknown_tenor if absent.
    std::size_t index_of(int tenor) const;

    bool operator==(const TenorGrid&) const = default;

private:
    int max_tenor_;
    std::vector<int> tenors_;
};

}  // namespace debtflow
