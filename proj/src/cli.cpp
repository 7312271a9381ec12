#include "debtflow/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "debtflow/asymptotics.hpp"
#include "debtflow/error.hpp"
#include "debtflow/frontier.hpp"
#include "debtflow/ingestion.hpp"
#include "debtflow/io.hpp"
#include "debtflow/market.hpp"
#include "debtflow/optimizer.hpp"
#include "debtflow/simulator.hpp"
#include "debtflow/version.hpp"

namespace debtflow::cli {

namespace {

using nlohmann::json;

/// Metrics are printed to six significant digits.
std::string fmt6(double value) {
    if (std::isnan(value)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

/// Time-series columns keep more digits so downstream plots do not lose
/// convergence detail.
std::string fmt12(double value) {
    if (std::isnan(value)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

json number6(double value) { return json::parse(fmt6(value)); }

struct CommonOptions {
    std::string assumptions_path;
    std::optional<double> g_override;
    std::string rates_override;  // file path or inline "tenor=rate,..."
    std::string output_path;
    bool strict = false;
};

struct ResolvedAssumptions {
    io::Assumptions assumptions;
    std::string source;
    std::vector<std::string> extra_inputs;
};

RateCurve parse_inline_rates(const std::string& spec) {
    std::map<int, double> knots;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(errc::parse_error, "--rates entry '" + item + "' must be tenor=rate");
        knots[std::stoi(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
    }
    if (knots.empty()) fail(errc::parse_error, "--rates spec is empty");
    return RateCurve(std::move(knots));
}

ResolvedAssumptions resolve_assumptions(const CommonOptions& opts) {
    ResolvedAssumptions resolved{io::default_assumptions(), "builtin", {}};
    if (!opts.assumptions_path.empty()) {
        resolved.assumptions = io::read_assumptions(opts.assumptions_path);
        resolved.source = opts.assumptions_path;
        resolved.extra_inputs.push_back(opts.assumptions_path);
    } else if (const char* env = std::getenv("DEBTFLOW_ASSUMPTIONS"); env && *env) {
        resolved.assumptions = io::read_assumptions(env);
        resolved.source = env;
        resolved.extra_inputs.push_back(env);
    }
    if (opts.g_override) {
        resolved.assumptions.growth = GrowthAssumption(*opts.g_override);
        resolved.source += "+overrides";
    }
    if (!opts.rates_override.empty()) {
        if (opts.rates_override.find('=') != std::string::npos) {
            resolved.assumptions.rates = parse_inline_rates(opts.rates_override);
        } else {
            resolved.assumptions.rates = io::read_assumptions(opts.rates_override).rates;
            resolved.extra_inputs.push_back(opts.rates_override);
        }
        if (resolved.source.find("+overrides") == std::string::npos)
            resolved.source += "+overrides";
    }
    return resolved;
}

/// Emits to stdout, or to the file (with a manifest sidecar) when
/// --output was given.
void emit(const std::string& text, const CommonOptions& opts, const std::string& command,
          std::vector<std::string> inputs, const ResolvedAssumptions& resolved,
          std::ostream& out) {
    if (opts.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.output_path, std::ios::binary);
    if (!file) fail(errc::parse_error, opts.output_path + ": cannot open for writing");
    file << text;
    file.close();
    io::RunManifest manifest;
    manifest.command = command;
    for (const auto& extra : resolved.extra_inputs) inputs.push_back(extra);
    manifest.inputs = std::move(inputs);
    manifest.assumptions_source = resolved.source;
    manifest.g = resolved.assumptions.growth.g();
    manifest.outputs = {opts.output_path};
    manifest.tool_version = kVersion;
    io::write_manifest_sidecar(opts.output_path, manifest);
}

/// Non-fatal by default: the closed forms lose validity when g <= WAC*.
/// --strict escalates to exit 3.
bool warn_dominance(const StrategyMetrics& m, const GrowthAssumption& growth,
                    const CommonOptions& opts, std::ostream& err) {
    if (check_growth_dominance(m, growth)) return false;
    err << "warning: growth dominance violated (g = " << fmt6(growth.g())
        << " <= WAC* = " << fmt6(m.wac_star)
        << "); asymptotic metrics lose validity" << (opts.strict ? " [strict]" : "")
        << "\n";
    return opts.strict;
}

json metrics_to_json(const StrategyMetrics& m) {
    return json{{"rr_star", number6(m.rr_star)},
                {"wac_star", number6(m.wac_star)},
                {"t_wac", number6(m.t_wac)},
                {"nwam", number6(m.nwam)},
                {"nwam_months", number6(m.nwam * 12.0)}};
}

int cmd_metrics(const std::string& strategy_path, const CommonOptions& opts,
                std::ostream& out, std::ostream& err) {
    ResolvedAssumptions resolved = resolve_assumptions(opts);
    Strategy strategy = io::read_strategy(strategy_path);
    StrategyMetrics m = metrics(strategy, resolved.assumptions.growth, resolved.assumptions.rates);
    PortfolioDistribution theta =
        equilibrium_distribution(strategy, resolved.assumptions.growth);

    json j = metrics_to_json(m);
    j["equilibrium_wam"] = number6(equilibrium_wam(theta));
    j["growth_dominance_ok"] =
        check_growth_dominance(m, resolved.assumptions.growth);
    json theta_json = json::object();
    for (int i = 1; i <= theta.max_tenor(); ++i)
        theta_json[std::to_string(i)] = number6(theta.at(i));
    j["theta_star"] = theta_json;

    emit(j.dump(2) + "\n", opts, "metrics", {strategy_path}, resolved, out);
    bool escalate = warn_dominance(m, resolved.assumptions.growth, opts, err);
    return escalate ? kExitModelError : kExitOk;
}

int cmd_simulate(const std::string& config_path, const CommonOptions& opts, std::ostream& out,
                 std::ostream& err) {
    ResolvedAssumptions resolved = resolve_assumptions(opts);
    SimulationConfig config =
        io::read_simulation_config(config_path, resolved.assumptions);
    if (opts.g_override) config.growth = GrowthAssumption(*opts.g_override);
    if (!opts.rates_override.empty()) config.rates = resolved.assumptions.rates;
    SimulationState state = run(config);

    const int T = config.strategy.grid().max_tenor();
    std::ostringstream csv;
    csv << "year,D,I,M,N,z,wac,rr,wam";
    for (int i = 1; i <= T; ++i) csv << ",theta_" << i;
    csv << "\n";
    for (int t = 1; t <= state.horizon(); ++t) {
        const YearRecord& rec = state.at(t);
        csv << t << ',' << fmt12(rec.deficit) << ',' << fmt12(rec.interest) << ','
            << fmt12(rec.maturing) << ',' << fmt12(rec.gross_issuance) << ','
            << fmt12(rec.stock) << ',' << fmt12(rec.wac) << ',' << fmt12(rec.rr) << ','
            << fmt12(rec.wam);
        for (int i = 1; i <= T; ++i)
            csv << ',' << fmt12(rec.theta[static_cast<std::size_t>(i - 1)]);
        csv << "\n";
    }
    emit(csv.str(), opts, "simulate", {config_path}, resolved, out);

    StrategyMetrics m = metrics(config.strategy, config.growth, config.rates);
    bool escalate = warn_dominance(m, config.growth, opts, err);
    return escalate ? kExitModelError : kExitOk;
}

std::vector<double> parse_risk_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1)
            fail(errc::parse_error, "--rgrid must be lo:hi:count or a comma list");
        for (int i = 0; i < count; ++i)
            grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        return grid;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
    if (grid.empty()) fail(errc::parse_error, "--rgrid spec is empty");
    return grid;
}

int cmd_frontier(const std::string& rgrid_spec, int max_tenor, const CommonOptions& opts,
                 std::ostream& out, std::ostream& /*err*/) {
    ResolvedAssumptions resolved = resolve_assumptions(opts);
    TenorGrid grid = TenorGrid::full(max_tenor);
    std::vector<double> budgets = parse_risk_grid(rgrid_spec);
    std::vector<FrontierPoint> points = frontier_sweep(
        budgets, resolved.assumptions.growth, resolved.assumptions.rates, grid);

    std::ostringstream csv;
    csv << "R,j_lower,alpha,t_wac,wac_star";
    for (int j : grid.tenors()) csv << ",f_" << j;
    csv << "\n";
    for (const FrontierPoint& p : points) {
        csv << fmt12(p.risk_budget) << ',' << p.lower_tenor << ',' << fmt12(p.blend_alpha)
            << ',' << fmt12(p.metrics.t_wac) << ',' << fmt12(p.metrics.wac_star);
        for (double f : p.strategy.fractions()) csv << ',' << fmt12(f);
        csv << "\n";
    }
    emit(csv.str(), opts, "frontier", {}, resolved, out);
    return kExitOk;
}

int cmd_optimize(const std::string& window_path, double risk_budget,
                 const std::string& current_path, const CommonOptions& opts,
                 std::ostream& out, std::ostream& err) {
    ResolvedAssumptions resolved = resolve_assumptions(opts);
    PolicyWindow window = io::read_policy_window(window_path);
    OptimizationResult result = optimize_constrained(
        window, risk_budget, resolved.assumptions.growth, resolved.assumptions.rates);

    json j;
    j["status"] = to_string(result.status);
    j["risk_budget"] = number6(risk_budget);
    bool escalate = false;
    if (result.status == SolveStatus::optimal) {
        json fractions = json::object();
        for (const auto& [tenor, f] : result.optimal_f->as_map())
            fractions[std::to_string(tenor)] = number6(f);
        j["optimal_f"] = fractions;
        json weights = json::object();
        for (std::size_t i = 0; i < window.grid().size(); ++i)
            weights[std::to_string(window.grid().tenors()[i])] =
                number6(result.optimal_w->weights[i]);
        j["optimal_w"] = weights;
        j["metrics"] = metrics_to_json(*result.metrics);
        j["binding_constraints"] = result.binding_constraints;
        escalate =
            warn_dominance(*result.metrics, resolved.assumptions.growth, opts, err) || escalate;
    }

    if (!current_path.empty() && result.status == SolveStatus::optimal) {
        Strategy current = io::read_strategy(current_path);
        // The window file defines the grid; re-express the strategy on it.
        Strategy on_grid = validate_strategy(current.as_map(), window.grid());
        auto [cost_dir, risk_dir] =
            dominant_directions(on_grid, window, resolved.assumptions.growth,
                                resolved.assumptions.rates);
        auto strategy_json = [&](const Strategy& s) {
            json obj = json::object();
            for (const auto& [tenor, f] : s.as_map()) obj[std::to_string(tenor)] = number6(f);
            return json{{"fractions", obj},
                        {"metrics", metrics_to_json(metrics(
                                        s, resolved.assumptions.growth,
                                        resolved.assumptions.rates))}};
        };
        j["current"] = strategy_json(on_grid);
        j["cost_dominant"] = strategy_json(cost_dir);
        j["risk_dominant"] = strategy_json(risk_dir);
    }

    std::vector<std::string> inputs{window_path};
    if (!current_path.empty()) inputs.push_back(current_path);
    emit(j.dump(2) + "\n", opts, "optimize", inputs, resolved, out);
    if (result.status != SolveStatus::optimal) return kExitModelError;
    return escalate ? kExitModelError : kExitOk;
}

struct FiscalYearSpec {
    int first = 0;
    int last = 0;
};

FiscalYearSpec parse_fy_spec(const std::string& spec) {
    FiscalYearSpec fy;
    if (spec.find(':') != std::string::npos) {
        if (std::sscanf(spec.c_str(), "%d:%d", &fy.first, &fy.last) != 2 || fy.last < fy.first)
            fail(errc::parse_error, "--fy must be a year or first:last");
    } else {
        fy.first = fy.last = std::stoi(spec);
    }
    return fy;
}

int cmd_history(const std::string& records_path, const std::string& fy_spec,
                const std::string& fy_start_mmdd, const std::vector<std::string>& exclude,
                const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    ResolvedAssumptions resolved = resolve_assumptions(opts);
    std::vector<IssuanceRecord> records = io::read_records_csv(records_path);
    for (const std::string& name : exclude) {
        SecurityClass cls = io::parse_security_class(name);
        std::erase_if(records, [&](const IssuanceRecord& r) { return r.security_class == cls; });
    }
    if (records.empty()) fail(errc::empty_window, "no records left to analyze");

    int start_month = 10, start_day = 1;
    if (std::sscanf(fy_start_mmdd.c_str(), "%d-%d", &start_month, &start_day) != 2 ||
        start_month < 1 || start_month > 12 || start_day < 1 || start_day > 31)
        fail(errc::parse_error, "--fy-start must be MM-DD");

    // Stable output columns: every bucket present anywhere in the file.
    std::vector<int> buckets{1};
    for (const IssuanceRecord& rec : records) buckets.push_back(rec.tenor_bucket);
    std::sort(buckets.begin(), buckets.end());
    buckets.erase(std::unique(buckets.begin(), buckets.end()), buckets.end());
    TenorGrid grid(buckets.back(), buckets);

    FiscalYearSpec fy = parse_fy_spec(fy_spec);
    std::ostringstream csv;
    csv << "fy,rr_star,wac_star,t_wac,nwam";
    for (int j : grid.tenors()) csv << ",f_" << j;
    csv << "\n";
    bool escalate = false;
    for (int year = fy.first; year <= fy.last; ++year) {
        using namespace std::chrono;
        Date fy_end{std::chrono::year(year), month(static_cast<unsigned>(start_month)),
                    day(static_cast<unsigned>(start_day))};
        fy_end = Date{sys_days(fy_end) - days(1)};
        Date fy_start{std::chrono::year(year - 1), month(static_cast<unsigned>(start_month)),
                      day(static_cast<unsigned>(start_day))};
        Strategy strategy = fiscal_year_fractions(records, fy_start, fy_end, grid);
        StrategyMetrics m =
            metrics(strategy, resolved.assumptions.growth, resolved.assumptions.rates);
        escalate = warn_dominance(m, resolved.assumptions.growth, opts, err) || escalate;
        csv << year << ',' << fmt12(m.rr_star) << ',' << fmt12(m.wac_star) << ','
            << fmt12(m.t_wac) << ',' << fmt12(m.nwam);
        for (double f : strategy.fractions()) csv << ',' << fmt12(f);
        csv << "\n";
    }
    emit(csv.str(), opts, "history", {records_path}, resolved, out);
    return escalate ? kExitModelError : kExitOk;
}

int cmd_scenario(const std::string& pattern_path, const std::string& policy_name,
                 const std::string& gaps_path, const CommonOptions& opts, std::ostream& out,
                 std::ostream& err) {
    ResolvedAssumptions resolved = resolve_assumptions(opts);
    AuctionPattern pattern = io::read_auction_pattern(pattern_path);
    std::vector<double> gaps = io::read_gaps(gaps_path);

    ScenarioPolicy policy;
    if (policy_name == "bills_only")
        policy = ScenarioPolicy::bills_only;
    else if (policy_name == "twist_short")
        policy = ScenarioPolicy::twist_short;
    else if (policy_name == "coupons_pro_rata")
        policy = ScenarioPolicy::coupons_pro_rata;
    else
        fail(errc::parse_error, "--policy must be bills_only|twist_short|coupons_pro_rata");

    std::vector<int> tenors{1, 2, 3};
    for (const auto& [tenor, flow] : pattern.coupons) {
        (void)flow;
        tenors.push_back(tenor);
    }
    std::sort(tenors.begin(), tenors.end());
    tenors.erase(std::unique(tenors.begin(), tenors.end()), tenors.end());
    TenorGrid grid(tenors.back(), tenors);

    std::vector<Strategy> path = scenario_path(pattern, policy, gaps, grid);
    std::ostringstream csv;
    csv << "year,rr_star,wac_star,t_wac,nwam";
    for (int j : grid.tenors()) csv << ",f_" << j;
    csv << "\n";
    bool escalate = false;
    for (std::size_t k = 0; k < path.size(); ++k) {
        StrategyMetrics m =
            metrics(path[k], resolved.assumptions.growth, resolved.assumptions.rates);
        escalate = warn_dominance(m, resolved.assumptions.growth, opts, err) || escalate;
        csv << (k + 1) << ',' << fmt12(m.rr_star) << ',' << fmt12(m.wac_star) << ','
            << fmt12(m.t_wac) << ',' << fmt12(m.nwam);
        for (double f : path[k].fractions()) csv << ',' << fmt12(f);
        csv << "\n";
    }
    emit(csv.str(), opts, "scenario", {pattern_path, gaps_path}, resolved, out);
    return escalate ? kExitModelError : kExitOk;
}

int exit_code_for(errc code) {
    switch (code) {
        case errc::infeasible:
        case errc::risk_out_of_range:
        case errc::risk_below_longest_tenor:
        case errc::zero_stock:
        case errc::horizon_too_large:
        case errc::numerical_failure:
            return kExitModelError;
        default:
            return kExitInputError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"debtflow: issuance-strategy cost/risk analytics"};
    app.set_version_flag("--version", std::string(kVersion));

    CommonOptions opts;
    app.add_option("--assumptions", opts.assumptions_path,
                   "Assumptions JSON (default: $DEBTFLOW_ASSUMPTIONS, then built-in)");
    app.add_option("--g", opts.g_override, "Override deficit growth rate");
    app.add_option("--rates", opts.rates_override,
                   "Override rates: a JSON file or inline tenor=rate,...");
    app.add_option("-o,--output", opts.output_path,
                   "Write to a file (adds a .manifest.json sidecar)");
    app.add_flag("--strict", opts.strict, "Escalate validity warnings to exit code 3");
    app.require_subcommand(1);
    // Global options may appear after the subcommand.
    app.fallthrough();

    std::string strategy_path, config_path, window_path, current_path;
    std::string records_path, fy_spec, fy_start = "10-01";
    std::string pattern_path, policy_name, gaps_path, rgrid_spec;
    std::vector<std::string> exclude_classes;
    double risk_budget = 1.0;
    int max_tenor = 30;

    CLI::App* metrics_cmd = app.add_subcommand("metrics", "Strategy -> (R, C) metrics JSON");
    metrics_cmd->add_option("strategy", strategy_path, "Strategy JSON file")->required();

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Debt-rolling time series CSV from a config");
    simulate_cmd->add_option("config", config_path, "Simulation config JSON")->required();

    CLI::App* frontier_cmd =
        app.add_subcommand("frontier", "Efficient frontier sweep CSV over risk budgets");
    frontier_cmd->add_option("--rgrid", rgrid_spec, "lo:hi:count or comma list")->required();
    frontier_cmd->add_option("--max-tenor", max_tenor, "Longest tenor on the grid");

    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "Window-constrained minimum-cost strategy JSON");
    optimize_cmd->add_option("window", window_path, "Policy window JSON")->required();
    optimize_cmd->add_option("--risk", risk_budget, "Rollover budget R")->required();
    optimize_cmd->add_option("--current", current_path,
                             "Current strategy for dominant directions");

    CLI::App* history_cmd =
        app.add_subcommand("history", "Per-fiscal-year empirical (R, C) trajectory CSV");
    history_cmd->add_option("records", records_path, "Issuance records CSV")->required();
    history_cmd->add_option("--fy", fy_spec, "Fiscal year or first:last")->required();
    history_cmd->add_option("--fy-start", fy_start, "Fiscal year start (MM-DD)");
    history_cmd->add_option("--exclude-class", exclude_classes,
                            "Drop a security class before analysis");

    CLI::App* scenario_cmd =
        app.add_subcommand("scenario", "Forward funding-gap trajectory CSV");
    scenario_cmd->add_option("pattern", pattern_path, "Auction pattern JSON")->required();
    scenario_cmd->add_option("--policy", policy_name, "bills_only|twist_short|coupons_pro_rata")
        ->required();
    scenario_cmd->add_option("--gaps", gaps_path, "Funding gaps JSON")->required();

    try {
        // CLI11's vector overload consumes arguments from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (metrics_cmd->parsed()) return cmd_metrics(strategy_path, opts, out, err);
        if (simulate_cmd->parsed()) return cmd_simulate(config_path, opts, out, err);
        if (frontier_cmd->parsed())
            return cmd_frontier(rgrid_spec, max_tenor, opts, out, err);
        if (optimize_cmd->parsed())
            return cmd_optimize(window_path, risk_budget, current_path, opts, out, err);
        if (history_cmd->parsed())
            return cmd_history(records_path, fy_spec, fy_start, exclude_classes, opts, out, err);
        if (scenario_cmd->parsed())
            return cmd_scenario(pattern_path, policy_name, gaps_path, opts, out, err);
        err << "error: no subcommand\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace debtflow::cli
