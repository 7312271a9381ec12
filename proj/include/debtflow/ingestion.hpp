/**
 * @file ingestion.hpp
 * @brief From auction records and prevailing issue sizes to strategies
 */

#pragma once

#include <chrono>
#include <map>
#include <span>
#include <vector>

#include "debtflow/strategy.hpp"
#include "debtflow/tenor_grid.hpp"

namespace debtflow {

using Date = std::chrono::year_month_day;

enum class SecurityClass { bill, note_bond, tips, frn };

const char* to_string(SecurityClass c) noexcept;

/// One auctioned security. tenor_bucket is the integer-year bucket the
/// security is aggregated into (bills always bucket 1; TIPS and FRNs sit
/// with their nominal counterparts).
struct IssuanceRecord {
    Date issue_date;
    Date maturity_date;
    int tenor_bucket = 0;
    double face = 0.0;
    SecurityClass security_class = SecurityClass::note_bond;
};

/// Validates dates ordered, face > 0, and bucket consistent with the
/// date span within +/- 1 year (bills must be bucket 1).
void validate_record(const IssuanceRecord& record);

/// Empirical issuance fractions over a fiscal year: face summed by bucket
/// over records issued within [fy_start, fy_end], normalized. Bills that
/// also matured by fy_end are excluded; they net out of the year's
/// borrowing requirement rather than financing it.
Strategy fiscal_year_fractions(std::span<const IssuanceRecord> records, Date fy_start,
                               Date fy_end, const TenorGrid& grid);

/// Per-tenor auction cadence and sizes for coupon tenors.
struct TenorFlow {
    int new_issues_per_year = 0;
    double new_issue_size = 0.0;
    int reopenings_per_year = 0;
    double reopening_size = 0.0;
};

/// Prevailing auction pattern. Bill flow (tenor 1) is a trailing yearly
/// average rather than a spot size, since bill sizes swing intra-year as
/// the fiscal shock absorber.
struct AuctionPattern {
    double bills_trailing_avg = 0.0;
    std::map<int, TenorFlow> coupons;  // tenor (>= 2) -> cadence and sizes
};

/// Implied yearly gross flow at one tenor.
double yearly_flow(const AuctionPattern& pattern, int tenor);

/// Strategy implied by the pattern: per-tenor yearly flows, normalized.
Strategy spot_fractions(const AuctionPattern& pattern, const TenorGrid& grid);

/// How an incremental funding gap is allocated across tenor flows.
enum class ScenarioPolicy {
    bills_only,        // whole gap to the bill bucket
    twist_short,       // 60/25/15 across tenors 1/2/3
    coupons_pro_rata,  // proportional to current coupon (tenor >= 2) flows
};

const char* to_string(ScenarioPolicy policy) noexcept;

/// Year-by-year strategy trajectory: each year's funding gap permanently
/// raises tenor flows per the policy (gaps accumulate), after which the
/// implied fractions are recomputed. A negative gap may not push any
/// tenor flow below zero (negative_flow).
std::vector<Strategy> scenario_path(const AuctionPattern& base, ScenarioPolicy policy,
                                    std::span<const double> funding_gap_by_year,
                                    const TenorGrid& grid);

}  // namespace debtflow
