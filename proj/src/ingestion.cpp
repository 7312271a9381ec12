#include "debtflow/ingestion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "debtflow/error.hpp"

namespace debtflow {

const char* to_string(SecurityClass c) noexcept {
    switch (c) {
        case SecurityClass::bill: return "bill";
        case SecurityClass::note_bond: return "note_bond";
        case SecurityClass::tips: return "tips";
        case SecurityClass::frn: return "frn";
    }
    return "unknown";
}

const char* to_string(ScenarioPolicy policy) noexcept {
    switch (policy) {
        case ScenarioPolicy::bills_only: return "bills_only";
        case ScenarioPolicy::twist_short: return "twist_short";
        case ScenarioPolicy::coupons_pro_rata: return "coupons_pro_rata";
    }
    return "unknown";
}

namespace {

double years_between(const Date& from, const Date& to) {
    auto days = std::chrono::sys_days(to) - std::chrono::sys_days(from);
    return static_cast<double>(days.count()) / 365.25;
}

}  // namespace

void validate_record(const IssuanceRecord& record) {
    if (!(record.maturity_date > record.issue_date))
        fail(errc::invalid_argument, "maturity date must follow issue date");
    if (!(record.face > 0.0) || !std::isfinite(record.face))
        fail(errc::invalid_argument, "face must be positive");
    if (record.security_class == SecurityClass::bill) {
        if (record.tenor_bucket != 1)
            fail(errc::invalid_argument, "bills belong to tenor bucket 1");
        return;
    }
    double span = years_between(record.issue_date, record.maturity_date);
    if (std::abs(span - record.tenor_bucket) > 1.0)
        fail(errc::invalid_argument,
             "tenor bucket " + std::to_string(record.tenor_bucket) +
                 " inconsistent with a " + std::to_string(span) + "-year span");
}

Strategy fiscal_year_fractions(std::span<const IssuanceRecord> records, Date fy_start,
                               Date fy_end, const TenorGrid& grid) {
    if (!(fy_end > fy_start)) fail(errc::invalid_argument, "fiscal year range is inverted");

    std::map<int, double> face_by_bucket;
    bool any_in_window = false;
    for (const IssuanceRecord& rec : records) {
        validate_record(rec);
        if (rec.issue_date < fy_start || rec.issue_date > fy_end) continue;
        any_in_window = true;
        // Bills that matured inside the fiscal year net out of the year's
        // borrowing requirement; only live issuance is counted.
        if (rec.security_class == SecurityClass::bill && !(rec.maturity_date > fy_end))
            continue;
        if (!grid.contains(rec.tenor_bucket))
            fail(errc::unknown_tenor,
                 "record bucket " + std::to_string(rec.tenor_bucket) + " not on the grid");
        face_by_bucket[rec.tenor_bucket] += rec.face;
    }
    if (!any_in_window) fail(errc::empty_window, "no records issued inside the fiscal year");
    if (face_by_bucket.empty())
        fail(errc::all_excluded, "every in-window record was an intra-year bill");

    double total = 0.0;
    for (const auto& [bucket, face] : face_by_bucket) total += face;
    std::map<int, double> fractions;
    for (const auto& [bucket, face] : face_by_bucket) fractions[bucket] = face / total;
    return validate_strategy(fractions, grid);
}

double yearly_flow(const AuctionPattern& pattern, int tenor) {
    if (tenor == 1) return pattern.bills_trailing_avg;
    auto it = pattern.coupons.find(tenor);
    if (it == pattern.coupons.end()) return 0.0;
    const TenorFlow& flow = it->second;
    return flow.new_issues_per_year * flow.new_issue_size +
           flow.reopenings_per_year * flow.reopening_size;
}

namespace {

void validate_pattern(const AuctionPattern& pattern) {
    if (pattern.bills_trailing_avg < 0.0)
        fail(errc::invalid_argument, "bill trailing average must be >= 0");
    for (const auto& [tenor, flow] : pattern.coupons) {
        if (tenor < 2)
            fail(errc::invalid_argument,
                 "coupon flows start at tenor 2; bills are the trailing average");
        if (flow.new_issues_per_year < 0 || flow.reopenings_per_year < 0 ||
            flow.new_issue_size < 0.0 || flow.reopening_size < 0.0)
            fail(errc::invalid_argument,
                 "auction counts and sizes must be >= 0 at tenor " + std::to_string(tenor));
    }
}

Strategy flows_to_strategy(const std::map<int, double>& flows, const TenorGrid& grid) {
    double total = 0.0;
    for (const auto& [tenor, flow] : flows) total += flow;
    if (total <= 0.0) fail(errc::zero_total_flow, "all tenor flows are zero");
    std::map<int, double> fractions;
    for (const auto& [tenor, flow] : flows) {
        if (!grid.contains(tenor))
            fail(errc::unknown_tenor,
                 "pattern tenor " + std::to_string(tenor) + " not on the grid");
        fractions[tenor] = flow / total;
    }
    return validate_strategy(fractions, grid);
}

std::map<int, double> base_flows(const AuctionPattern& pattern) {
    std::map<int, double> flows;
    flows[1] = pattern.bills_trailing_avg;
    for (const auto& [tenor, flow] : pattern.coupons) {
        (void)flow;
        flows[tenor] = yearly_flow(pattern, tenor);
    }
    return flows;
}

}  // namespace

Strategy spot_fractions(const AuctionPattern& pattern, const TenorGrid& grid) {
    validate_pattern(pattern);
    return flows_to_strategy(base_flows(pattern), grid);
}

std::vector<Strategy> scenario_path(const AuctionPattern& base, ScenarioPolicy policy,
                                    std::span<const double> funding_gap_by_year,
                                    const TenorGrid& grid) {
    validate_pattern(base);
    std::map<int, double> flows = base_flows(base);
    if (policy == ScenarioPolicy::twist_short) {
        for (int tenor : {1, 2, 3})
            if (!grid.contains(tenor))
                fail(errc::unknown_tenor,
                     "twist_short needs tenor " + std::to_string(tenor) + " on the grid");
        flows.try_emplace(2, 0.0);
        flows.try_emplace(3, 0.0);
    }

    std::vector<Strategy> path;
    path.reserve(funding_gap_by_year.size());
    int year = 0;
    for (double gap : funding_gap_by_year) {
        ++year;
        if (!std::isfinite(gap))
            fail(errc::invalid_argument, "funding gap in year " + std::to_string(year) +
                                             " is not finite");
        switch (policy) {
            case ScenarioPolicy::bills_only:
                flows[1] += gap;
                break;
            case ScenarioPolicy::twist_short:
                flows[1] += 0.60 * gap;
                flows[2] += 0.25 * gap;
                flows[3] += 0.15 * gap;
                break;
            case ScenarioPolicy::coupons_pro_rata: {
                double coupon_total = 0.0;
                for (const auto& [tenor, flow] : flows)
                    if (tenor >= 2) coupon_total += flow;
                if (coupon_total <= 0.0 && gap != 0.0)
                    fail(errc::zero_total_flow,
                         "no coupon flow to scale pro rata in year " + std::to_string(year));
                if (coupon_total > 0.0) {
                    double scale = gap / coupon_total;
                    for (auto& [tenor, flow] : flows)
                        if (tenor >= 2) flow += scale * flow;
                }
                break;
            }
        }
        for (const auto& [tenor, flow] : flows)
            if (flow < 0.0)
                fail(errc::negative_flow, "year " + std::to_string(year) +
                                              " drives tenor " + std::to_string(tenor) +
                                              " flow below zero");
        path.push_back(flows_to_strategy(flows, grid));
    }
    return path;
}

}  // namespace debtflow
