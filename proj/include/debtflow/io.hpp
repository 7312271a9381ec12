/**
 * @file io.hpp
 * @brief File formats: assumptions, strategies, windows, patterns, CSV
 *
 * All JSON parse errors are rethrown as parse_error with the offending
 * line and column; CSV readers report 1-based line numbers.
 */

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "debtflow/ingestion.hpp"
#include "debtflow/market.hpp"
#include "debtflow/policy_window.hpp"
#include "debtflow/simulator.hpp"
#include "debtflow/strategy.hpp"

namespace debtflow::io {

/// Deficit growth plus curve, as read from an assumptions file:
/// {"g": 0.08, "rates": [{"tenor": 1, "rate": 0.0324}, ...]}
struct Assumptions {
    GrowthAssumption growth;
    RateCurve rates;
};

/// Built-in defaults: g = 8% and the 1981-2017 average Treasury curve.
Assumptions default_assumptions();

Assumptions read_assumptions(const std::string& path);
Assumptions parse_assumptions(const std::string& text, const std::string& origin = "<string>");
void write_assumptions(const Assumptions& assumptions, const std::string& path);

/// Strategy files are a plain {"tenor": fraction} object. The grid is
/// implied: the strategy's tenors plus the mandatory bill bucket.
Strategy read_strategy(const std::string& path);
Strategy parse_strategy(const std::string& text, const std::string& origin = "<string>");
std::string strategy_to_json(const Strategy& strategy);
void write_strategy(const Strategy& strategy, const std::string& path);

/// Window files: {"lower": {"tenor": L}, "upper": {"tenor": U}}.
PolicyWindow read_policy_window(const std::string& path);
PolicyWindow parse_policy_window(const std::string& text, const std::string& origin = "<string>");

/// Auction pattern files:
/// {"bills_trailing_avg": x, "coupons": {"tenor": {"new_issues_per_year": n,
///  "new_issue_size": s, "reopenings_per_year": m, "reopening_size": t}}}
AuctionPattern read_auction_pattern(const std::string& path);
AuctionPattern parse_auction_pattern(const std::string& text, const std::string& origin = "<string>");

/// Simulation config files; strategy may be inline or "strategy_file".
/// Missing g/rates fall back to the supplied assumptions.
SimulationConfig read_simulation_config(const std::string& path, const Assumptions& fallback);
SimulationConfig parse_simulation_config(const std::string& text, const Assumptions& fallback,
                                         const std::string& origin = "<string>");

/// Funding-gap files: {"gaps": [g1, g2, ...]} or a bare JSON array.
std::vector<double> read_gaps(const std::string& path);

/// Issuance records CSV with header
/// issue_date,maturity_date,tenor_bucket,face,security_class
/// (ISO dates; face in millions; class one of bill|note_bond|tips|frn).
std::vector<IssuanceRecord> read_records_csv(const std::string& path);
std::vector<IssuanceRecord> parse_records_csv(std::istream& in, const std::string& origin);

Date parse_date(const std::string& iso);
std::string format_date(const Date& date);

SecurityClass parse_security_class(const std::string& name);

/// Provenance sidecar written next to every output file.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::string assumptions_source;  // path, "builtin", or "overridden"
    double g = 0.0;
    std::vector<std::string> outputs;
    std::string tool_version;
};

/// Writes <output_path>.manifest.json (adds a timestamp; the data file
/// itself stays byte-reproducible).
void write_manifest_sidecar(const std::string& output_path, const RunManifest& manifest);

}  // namespace debtflow::io
