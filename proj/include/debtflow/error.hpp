/**
 * @file error.hpp
 * @brief Error codes and the exception type shared by all modules
 */

#pragma once

#include <stdexcept>
#include <string>

namespace debtflow {

enum class errc {
    // strategy / domain validation
    negative_fraction,
    sum_far_from_one,
    unknown_tenor,
    empty_curve,
    // simulator
    zero_stock,
    horizon_too_large,
    // frontier / optimizer
    risk_out_of_range,
    risk_below_longest_tenor,
    infeasible,
    // ingestion
    empty_window,
    all_excluded,
    zero_total_flow,
    negative_flow,
    // general
    invalid_argument,
    parse_error,
    numerical_failure,
};

const char* to_string(errc code) noexcept;

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace debtflow
