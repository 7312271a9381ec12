#include "debtflow/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "debtflow/error.hpp"
#include "debtflow/version.hpp"

namespace debtflow::io {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, path + ": cannot open for writing");
    out << text;
    if (!out) fail(errc::parse_error, path + ": write failed");
}

// nlohmann reports byte offsets; convert to line:column for messages.
std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::parse_error, origin + " (" + locate(text, e.byte) + "): " + e.what());
    }
}

double require_number(const json& j, const std::string& key, const std::string& origin) {
    if (!j.contains(key)) fail(errc::parse_error, origin + ": missing field '" + key + "'");
    if (!j[key].is_number()) fail(errc::parse_error, origin + ": '" + key + "' must be a number");
    return j[key].get<double>();
}

int tenor_from_key(const std::string& key, const std::string& origin) {
    int tenor = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), tenor);
    if (ec != std::errc{} || ptr != key.data() + key.size())
        fail(errc::parse_error, origin + ": tenor key '" + key + "' is not an integer");
    return tenor;
}

std::map<int, double> tenor_map(const json& j, const std::string& origin) {
    if (!j.is_object()) fail(errc::parse_error, origin + ": expected a {tenor: value} object");
    std::map<int, double> out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number())
            fail(errc::parse_error, origin + ": value for tenor '" + key + "' must be a number");
        out[tenor_from_key(key, origin)] = value.get<double>();
    }
    return out;
}

TenorGrid implied_grid(const std::map<int, double>& fractions) {
    std::vector<int> tenors;
    if (!fractions.count(1)) tenors.push_back(1);  // bill bucket is always on the grid
    for (const auto& [tenor, f] : fractions) {
        (void)f;
        tenors.push_back(tenor);
    }
    std::sort(tenors.begin(), tenors.end());
    int max_tenor = tenors.back();
    return TenorGrid(max_tenor, std::move(tenors));
}

}  // namespace

Assumptions default_assumptions() {
    // Long-horizon averages: post-1980 mean Treasury curve and the trend
    // growth of primary deficits over the same era.
    return Assumptions{GrowthAssumption(0.08),
                       RateCurve({{1, 0.0324},
                                  {2, 0.0356},
                                  {3, 0.0379},
                                  {5, 0.0422},
                                  {7, 0.0454},
                                  {10, 0.0479},
                                  {20, 0.0488},
                                  {30, 0.0539}})};
}

Assumptions parse_assumptions(const std::string& text, const std::string& origin) {
    json j = parse_json(text, origin);
    double g = require_number(j, "g", origin);
    if (!j.contains("rates") || !j["rates"].is_array())
        fail(errc::parse_error, origin + ": missing 'rates' array");
    std::map<int, double> knots;
    for (const auto& entry : j["rates"]) {
        if (!entry.is_object() || !entry.contains("tenor") || !entry.contains("rate"))
            fail(errc::parse_error, origin + ": each rate entry needs {tenor, rate}");
        knots[entry["tenor"].get<int>()] = entry["rate"].get<double>();
    }
    return Assumptions{GrowthAssumption(g), RateCurve(std::move(knots))};
}

Assumptions read_assumptions(const std::string& path) {
    return parse_assumptions(read_file(path), path);
}

void write_assumptions(const Assumptions& assumptions, const std::string& path) {
    json rates = json::array();
    for (const auto& [tenor, rate] : assumptions.rates.knots())
        rates.push_back({{"tenor", tenor}, {"rate", rate}});
    json j{{"g", assumptions.growth.g()}, {"rates", rates}};
    write_file(path, j.dump(2) + "\n");
}

Strategy parse_strategy(const std::string& text, const std::string& origin) {
    json j = parse_json(text, origin);
    std::map<int, double> fractions = tenor_map(j, origin);
    if (fractions.empty()) fail(errc::parse_error, origin + ": strategy has no tenors");
    return validate_strategy(fractions, implied_grid(fractions));
}

Strategy read_strategy(const std::string& path) { return parse_strategy(read_file(path), path); }

std::string strategy_to_json(const Strategy& strategy) {
    json j = json::object();
    for (const auto& [tenor, fraction] : strategy.as_map())
        if (fraction != 0.0) j[std::to_string(tenor)] = fraction;
    return j.dump(2);
}

void write_strategy(const Strategy& strategy, const std::string& path) {
    write_file(path, strategy_to_json(strategy) + "\n");
}

PolicyWindow parse_policy_window(const std::string& text, const std::string& origin) {
    json j = parse_json(text, origin);
    if (!j.is_object()) fail(errc::parse_error, origin + ": expected {lower, upper}");
    std::map<int, double> lower, upper;
    if (j.contains("lower")) lower = tenor_map(j["lower"], origin + " lower");
    if (j.contains("upper")) upper = tenor_map(j["upper"], origin + " upper");
    if (lower.empty() && upper.empty())
        fail(errc::parse_error, origin + ": window needs 'lower' and/or 'upper'");
    std::map<int, double> merged = lower;
    merged.insert(upper.begin(), upper.end());
    return PolicyWindow(lower, upper, implied_grid(merged));
}

PolicyWindow read_policy_window(const std::string& path) {
    return parse_policy_window(read_file(path), path);
}

AuctionPattern parse_auction_pattern(const std::string& text, const std::string& origin) {
    json j = parse_json(text, origin);
    AuctionPattern pattern;
    pattern.bills_trailing_avg = require_number(j, "bills_trailing_avg", origin);
    if (j.contains("coupons")) {
        if (!j["coupons"].is_object())
            fail(errc::parse_error, origin + ": 'coupons' must map tenor to cadence");
        for (const auto& [key, value] : j["coupons"].items()) {
            int tenor = tenor_from_key(key, origin);
            TenorFlow flow;
            flow.new_issues_per_year =
                static_cast<int>(require_number(value, "new_issues_per_year", origin));
            flow.new_issue_size = require_number(value, "new_issue_size", origin);
            if (value.contains("reopenings_per_year"))
                flow.reopenings_per_year = value["reopenings_per_year"].get<int>();
            if (value.contains("reopening_size"))
                flow.reopening_size = value["reopening_size"].get<double>();
            pattern.coupons[tenor] = flow;
        }
    }
    return pattern;
}

AuctionPattern read_auction_pattern(const std::string& path) {
    return parse_auction_pattern(read_file(path), path);
}

SimulationConfig parse_simulation_config(const std::string& text, const Assumptions& fallback,
                                         const std::string& origin) {
    json j = parse_json(text, origin);
    if (!j.is_object()) fail(errc::parse_error, origin + ": expected a config object");

    Strategy strategy = [&] {
        if (j.contains("strategy_file")) return read_strategy(j["strategy_file"].get<std::string>());
        if (!j.contains("strategy"))
            fail(errc::parse_error, origin + ": needs 'strategy' or 'strategy_file'");
        std::map<int, double> fractions = tenor_map(j["strategy"], origin + " strategy");
        return validate_strategy(fractions, implied_grid(fractions));
    }();

    GrowthAssumption growth =
        j.contains("g") ? GrowthAssumption(j["g"].get<double>()) : fallback.growth;
    RateCurve rates = fallback.rates;
    if (j.contains("rates")) {
        std::map<int, double> knots = tenor_map(j["rates"], origin + " rates");
        rates = RateCurve(std::move(knots));
    }

    SimulationConfig config{std::move(strategy), growth, std::move(rates), 0.0, 0, {}, {},
                            false};
    config.initial_deficit = require_number(j, "initial_deficit", origin);
    config.horizon = static_cast<int>(require_number(j, "horizon", origin));
    if (j.contains("renormalize")) config.renormalize = j["renormalize"].get<bool>();
    if (j.contains("deficit_overrides"))
        for (const auto& [key, value] : j["deficit_overrides"].items())
            config.deficit_overrides[tenor_from_key(key, origin)] = value.get<double>();
    if (j.contains("initial_portfolio")) {
        const json& ip = j["initial_portfolio"];
        double stock = require_number(ip, "stock", origin + " initial_portfolio");
        std::map<int, double> theta = tenor_map(ip["theta"], origin + " initial_portfolio");
        int max_tenor = theta.empty() ? 1 : theta.rbegin()->first;
        std::vector<double> dense(static_cast<std::size_t>(max_tenor), 0.0);
        for (const auto& [tenor, share] : theta) {
            if (tenor < 1) fail(errc::parse_error, origin + ": theta tenors are 1-based");
            dense[static_cast<std::size_t>(tenor - 1)] = share;
        }
        config.initial_portfolio =
            InitialPortfolio{PortfolioDistribution(std::move(dense)), stock};
    }
    return config;
}

SimulationConfig read_simulation_config(const std::string& path, const Assumptions& fallback) {
    return parse_simulation_config(read_file(path), fallback, path);
}

std::vector<double> read_gaps(const std::string& path) {
    json j = parse_json(read_file(path), path);
    const json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("gaps") && j["gaps"].is_array())
        arr = &j["gaps"];
    else
        fail(errc::parse_error, path + ": expected an array or {\"gaps\": [...]} ");
    std::vector<double> gaps;
    for (const auto& v : *arr) {
        if (!v.is_number()) fail(errc::parse_error, path + ": gaps must be numbers");
        gaps.push_back(v.get<double>());
    }
    return gaps;
}

Date parse_date(const std::string& iso) {
    int y = 0, m = 0, d = 0, consumed = 0;
    if (std::sscanf(iso.c_str(), "%d-%d-%d%n", &y, &m, &d, &consumed) != 3 ||
        consumed != static_cast<int>(iso.size()))
        fail(errc::parse_error, "date '" + iso + "' is not ISO yyyy-mm-dd");
    Date date{std::chrono::year(y), std::chrono::month(static_cast<unsigned>(m)),
              std::chrono::day(static_cast<unsigned>(d))};
    if (!date.ok()) fail(errc::parse_error, "date '" + iso + "' is not a valid calendar day");
    return date;
}

std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

SecurityClass parse_security_class(const std::string& name) {
    if (name == "bill") return SecurityClass::bill;
    if (name == "note_bond") return SecurityClass::note_bond;
    if (name == "tips") return SecurityClass::tips;
    if (name == "frn") return SecurityClass::frn;
    fail(errc::parse_error, "unknown security class '" + name +
                                "' (expected bill|note_bond|tips|frn)");
}

std::vector<IssuanceRecord> parse_records_csv(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    auto where = [&] { return origin + ":" + std::to_string(lineno); };

    if (!std::getline(in, line)) fail(errc::parse_error, origin + ": empty file");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string expected = "issue_date,maturity_date,tenor_bucket,face,security_class";
    if (line != expected)
        fail(errc::parse_error, where() + ": header must be '" + expected + "'");

    std::vector<IssuanceRecord> records;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            fail(errc::parse_error,
                 where() + ": expected 5 fields, got " + std::to_string(fields.size()));
        try {
            IssuanceRecord rec;
            rec.issue_date = parse_date(fields[0]);
            rec.maturity_date = parse_date(fields[1]);
            rec.tenor_bucket = std::stoi(fields[2]);
            rec.face = std::stod(fields[3]);
            rec.security_class = parse_security_class(fields[4]);
            validate_record(rec);
            records.push_back(rec);
        } catch (const Error& e) {
            fail(e.code() == errc::parse_error ? errc::parse_error : errc::invalid_argument,
                 where() + ": " + e.what());
        } catch (const std::exception& e) {
            fail(errc::parse_error, where() + ": " + e.what());
        }
    }
    return records;
}

std::vector<IssuanceRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    return parse_records_csv(in, path);
}

void write_manifest_sidecar(const std::string& output_path, const RunManifest& manifest) {
    json j;
    j["command"] = manifest.command;
    j["inputs"] = manifest.inputs;
    j["assumptions"] = {{"source", manifest.assumptions_source}, {"g", manifest.g}};
    j["outputs"] = manifest.outputs;
    j["tool_version"] = manifest.tool_version.empty() ? kVersion : manifest.tool_version;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = stamp;
    write_file(output_path + ".manifest.json", j.dump(2) + "\n");
}

}  // namespace debtflow::io
