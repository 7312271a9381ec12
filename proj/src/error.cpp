#include "debtflow/error.hpp"

namespace debtflow {

const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::negative_fraction: return "NegativeFraction";
        case errc::sum_far_from_one: return "SumFarFromOne";
        case errc::unknown_tenor: return "UnknownTenor";
        case errc::empty_curve: return "EmptyCurve";
        case errc::zero_stock: return "ZeroStock";
        case errc::horizon_too_large: return "HorizonTooLarge";
        case errc::risk_out_of_range: return "RiskOutOfRange";
        case errc::risk_below_longest_tenor: return "RiskBelowLongestTenor";
        case errc::infeasible: return "Infeasible";
        case errc::empty_window: return "EmptyWindow";
        case errc::all_excluded: return "AllExcluded";
        case errc::zero_total_flow: return "ZeroTotalFlow";
        case errc::negative_flow: return "NegativeFlow";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
        case errc::numerical_failure: return "NumericalFailure";
    }
    return "UnknownError";
}

}  // namespace debtflow
