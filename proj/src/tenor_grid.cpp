#include "debtflow/tenor_grid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

TenorGrid::TenorGrid(int max_tenor, std::vector<int> tenors)
    : max_tenor_(max_tenor), tenors_(std::move(tenors)) {
    if (max_tenor_ < 1) fail(errc::invalid_argument, "max_tenor must be >= 1");
    if (tenors_.empty()) fail(errc::invalid_argument, "tenor grid must be nonempty");
    if (!std::is_sorted(tenors_.begin(), tenors_.end(), std::less_equal<>{}))
        fail(errc::invalid_argument, "tenors must be strictly increasing");
    if (tenors_.front() != 1)
        fail(errc::invalid_argument, "tenor 1 (the bill bucket) must be present");
    if (tenors_.back() > max_tenor_)
        fail(errc::invalid_argument,
             "tenor " + std::to_string(tenors_.back()) + " exceeds max_tenor " +
                 std::to_string(max_tenor_));
}

TenorGrid TenorGrid::full(int max_tenor) {
    std::vector<int> all(static_cast<std::size_t>(max_tenor < 1 ? 1 : max_tenor));
    std::iota(all.begin(), all.end(), 1);
    return TenorGrid(max_tenor, std::move(all));
}

TenorGrid TenorGrid::standard() { return TenorGrid(30, {1, 2, 3, 5, 7, 10, 30}); }

bool TenorGrid::contains(int tenor) const noexcept {
    return std::binary_search(tenors_.begin(), tenors_.end(), tenor);
}

std::size_t TenorGrid::index_of(int tenor) const {
    auto it = std::lower_bound(tenors_.begin(), tenors_.end(), tenor);
    if (it == tenors_.end() || *it != tenor)
        fail(errc::unknown_tenor, "tenor " + std::to_string(tenor) + " is not on the grid");
    return static_cast<std::size_t>(it - tenors_.begin());
}

}  // namespace debtflow
