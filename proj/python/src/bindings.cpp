#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "debtflow/asymptotics.hpp"
#include "debtflow/error.hpp"
#include "debtflow/frontier.hpp"
#include "debtflow/ingestion.hpp"
#include "debtflow/io.hpp"
#include "debtflow/market.hpp"
#include "debtflow/optimizer.hpp"
#include "debtflow/policy_window.hpp"
#include "debtflow/simulator.hpp"
#include "debtflow/version.hpp"

namespace py = pybind11;
using namespace debtflow;

namespace {

GrowthAssumption as_growth(double g) { return GrowthAssumption(g); }

RateCurve as_curve(const std::map<int, double>& knots) { return RateCurve(knots); }

TenorGrid grid_for(const std::map<int, double>& fractions) {
    std::vector<int> tenors;
    if (!fractions.count(1)) tenors.push_back(1);
    for (const auto& [tenor, f] : fractions) {
        (void)f;
        tenors.push_back(tenor);
    }
    std::sort(tenors.begin(), tenors.end());
    return TenorGrid(tenors.back(), tenors);
}

Strategy as_strategy(const std::map<int, double>& fractions) {
    return validate_strategy(fractions, grid_for(fractions));
}

py::dict metrics_dict(const StrategyMetrics& m) {
    py::dict d;
    d["rr_star"] = m.rr_star;
    d["wac_star"] = m.wac_star;
    d["t_wac"] = m.t_wac;
    d["nwam"] = m.nwam;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Issuance-strategy cost/risk analytics";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "DebtflowError");

    m.def(
        "validate_strategy",
        [](const std::map<int, double>& fractions) { return as_strategy(fractions).as_map(); },
        py::arg("fractions"),
        "Validate and normalize issuance fractions; returns the dense map.");

    m.def(
        "metrics",
        [](const std::map<int, double>& fractions, double g,
           const std::map<int, double>& rates) {
            return metrics_dict(metrics(as_strategy(fractions), as_growth(g), as_curve(rates)));
        },
        py::arg("fractions"), py::arg("g"), py::arg("rates"),
        "Asymptotic metrics (rr_star, wac_star, t_wac, nwam) of a strategy.");

    m.def(
        "cost_weights",
        [](const std::map<int, double>& fractions, double g) {
            Strategy s = as_strategy(fractions);
            CostWeights w = cost_weights(s, as_growth(g));
            std::map<int, double> out;
            for (std::size_t i = 0; i < w.grid.size(); ++i)
                out[w.grid.tenors()[i]] = w.weights[i];
            return out;
        },
        py::arg("fractions"), py::arg("g"),
        "Growth-adjusted portfolio weights w by tenor.");

    m.def(
        "rollover_tau",
        [](int tenor, double g) { return rollover_tau(tenor, as_growth(g)); },
        py::arg("tenor"), py::arg("g"), "Rollover kernel value tau at one tenor.");

    m.def(
        "equilibrium_distribution",
        [](const std::map<int, double>& fractions, double g) {
            return equilibrium_distribution(as_strategy(fractions), as_growth(g)).theta();
        },
        py::arg("fractions"), py::arg("g"),
        "Steady-state portfolio shares by remaining tenor (list, tenor 1 first).");

    m.def(
        "equilibrium_wam",
        [](const std::map<int, double>& fractions, double g) {
            return equilibrium_wam(equilibrium_distribution(as_strategy(fractions), as_growth(g)));
        },
        py::arg("fractions"), py::arg("g"),
        "Mid-year weighted average maturity of the steady-state portfolio.");

    m.def(
        "check_growth_dominance",
        [](const std::map<int, double>& fractions, double g,
           const std::map<int, double>& rates) {
            StrategyMetrics m_ =
                metrics(as_strategy(fractions), as_growth(g), as_curve(rates));
            return check_growth_dominance(m_, as_growth(g));
        },
        py::arg("fractions"), py::arg("g"), py::arg("rates"),
        "True iff g > WAC*, the validity condition for the closed forms.");

    m.def(
        "sweet_spot_tenor",
        [](double risk, double g) { return sweet_spot_tenor(risk, as_growth(g)); },
        py::arg("risk"), py::arg("g"),
        "Continuous cost-optimal tenor for a rollover budget.");

    m.def(
        "frontier_point",
        [](double risk, double g, const std::map<int, double>& rates, int max_tenor) {
            FrontierPoint p = frontier_point(risk, as_growth(g), as_curve(rates),
                                             TenorGrid::full(max_tenor));
            py::dict d;
            d["risk_budget"] = p.risk_budget;
            d["lower_tenor"] = p.lower_tenor;
            d["blend_alpha"] = p.blend_alpha;
            d["fractions"] = p.strategy.as_map();
            d["metrics"] = metrics_dict(p.metrics);
            return d;
        },
        py::arg("risk"), py::arg("g"), py::arg("rates"), py::arg("max_tenor") = 30,
        "Lowest-cost strategy for a rollover budget on the full integer grid.");

    m.def(
        "optimize_constrained",
        [](const std::map<int, double>& lower, const std::map<int, double>& upper,
           double risk, double g, const std::map<int, double>& rates) {
            std::map<int, double> merged = lower;
            merged.insert(upper.begin(), upper.end());
            TenorGrid grid = grid_for(merged);
            OptimizationResult r = optimize_constrained(PolicyWindow(lower, upper, grid),
                                                        risk, as_growth(g), as_curve(rates));
            py::dict d;
            d["status"] = std::string(to_string(r.status));
            if (r.status == SolveStatus::optimal) {
                d["optimal_f"] = r.optimal_f->as_map();
                d["metrics"] = metrics_dict(*r.metrics);
                d["binding_constraints"] = r.binding_constraints;
            }
            return d;
        },
        py::arg("lower"), py::arg("upper"), py::arg("risk"), py::arg("g"), py::arg("rates"),
        "Window-constrained minimum-WAC* strategy at a rollover budget.");

    m.def(
        "simulate",
        [](const std::map<int, double>& fractions, double g,
           const std::map<int, double>& rates, double initial_deficit, int horizon,
           bool renormalize) {
            SimulationConfig config{as_strategy(fractions), as_growth(g), as_curve(rates)};
            config.initial_deficit = initial_deficit;
            config.horizon = horizon;
            config.renormalize = renormalize;
            SimulationState state = run(config);
            py::dict d;
            std::vector<double> wac, rr, wam, stock;
            for (const YearRecord& rec : state.years()) {
                wac.push_back(rec.wac);
                rr.push_back(rec.rr);
                wam.push_back(rec.wam);
                stock.push_back(rec.stock);
            }
            d["wac"] = wac;
            d["rr"] = rr;
            d["wam"] = wam;
            d["stock"] = stock;
            d["theta_final"] = state.at(state.horizon()).theta;
            return d;
        },
        py::arg("fractions"), py::arg("g"), py::arg("rates"),
        py::arg("initial_deficit") = 100.0, py::arg("horizon") = 300,
        py::arg("renormalize") = true,
        "Debt-rolling simulation; per-year wac/rr/wam/stock series and the "
        "final tenor distribution.");

    m.def(
        "dominant_directions",
        [](const std::map<int, double>& current, const std::map<int, double>& lower,
           const std::map<int, double>& upper, double g,
           const std::map<int, double>& rates) {
            std::map<int, double> merged = lower;
            merged.insert(upper.begin(), upper.end());
            for (const auto& [tenor, f] : current) {
                (void)f;
                merged.emplace(tenor, 0.0);
            }
            TenorGrid grid = grid_for(merged);
            Strategy on_grid = validate_strategy(current, grid);
            auto [cost_dir, risk_dir] = dominant_directions(
                on_grid, PolicyWindow(lower, upper, grid), as_growth(g), as_curve(rates));
            py::dict d;
            d["cost_dominant"] = cost_dir.as_map();
            d["risk_dominant"] = risk_dir.as_map();
            return d;
        },
        py::arg("current"), py::arg("lower"), py::arg("upper"), py::arg("g"),
        py::arg("rates"),
        "Cost- and risk-dominant strategies reachable from `current` inside the window.");

    m.def(
        "verify_convexity_condition",
        [](const std::map<int, double>& rates, double g) {
            ConvexityReport rep = verify_convexity_condition(as_curve(rates), as_growth(g));
            py::dict d;
            d["single_tenor_optimal"] = rep.single_tenor_optimal;
            d["hull_margin"] = rep.hull_margin;
            d["hull_worst_tenor"] = rep.hull_worst_tenor;
            d["bound_margin"] = rep.bound_margin;
            return d;
        },
        py::arg("rates"), py::arg("g"),
        "Probe whether single-tenor issuance can be dominated under this curve.");

    m.def(
        "spot_fractions",
        [](double bills_trailing_avg,
           const std::map<int, std::map<std::string, double>>& coupons) {
            AuctionPattern pattern;
            pattern.bills_trailing_avg = bills_trailing_avg;
            std::vector<int> tenors{1};
            for (const auto& [tenor, fields] : coupons) {
                TenorFlow flow;
                if (auto it = fields.find("new_issues_per_year"); it != fields.end())
                    flow.new_issues_per_year = static_cast<int>(it->second);
                if (auto it = fields.find("new_issue_size"); it != fields.end())
                    flow.new_issue_size = it->second;
                if (auto it = fields.find("reopenings_per_year"); it != fields.end())
                    flow.reopenings_per_year = static_cast<int>(it->second);
                if (auto it = fields.find("reopening_size"); it != fields.end())
                    flow.reopening_size = it->second;
                pattern.coupons[tenor] = flow;
                tenors.push_back(tenor);
            }
            std::sort(tenors.begin(), tenors.end());
            tenors.erase(std::unique(tenors.begin(), tenors.end()), tenors.end());
            int max_tenor = tenors.back();
            return spot_fractions(pattern, TenorGrid(max_tenor, tenors)).as_map();
        },
        py::arg("bills_trailing_avg"), py::arg("coupons"),
        "Strategy implied by prevailing auction sizes and cadence.");

    m.def(
        "fiscal_year_fractions",
        [](const std::vector<std::map<std::string, py::object>>& records,
           const std::string& fy_start, const std::string& fy_end) {
            std::vector<IssuanceRecord> parsed;
            std::vector<int> tenors{1};
            for (const auto& rec : records) {
                IssuanceRecord r;
                r.issue_date = io::parse_date(rec.at("issue_date").cast<std::string>());
                r.maturity_date = io::parse_date(rec.at("maturity_date").cast<std::string>());
                r.tenor_bucket = rec.at("tenor_bucket").cast<int>();
                r.face = rec.at("face").cast<double>();
                r.security_class =
                    io::parse_security_class(rec.at("security_class").cast<std::string>());
                parsed.push_back(r);
                tenors.push_back(r.tenor_bucket);
            }
            std::sort(tenors.begin(), tenors.end());
            tenors.erase(std::unique(tenors.begin(), tenors.end()), tenors.end());
            int max_tenor = tenors.back();
            return fiscal_year_fractions(parsed, io::parse_date(fy_start),
                                         io::parse_date(fy_end),
                                         TenorGrid(max_tenor, tenors))
                .as_map();
        },
        py::arg("records"), py::arg("fy_start"), py::arg("fy_end"),
        "Empirical issuance fractions over a fiscal year from auction records "
        "(dicts with ISO issue_date/maturity_date, tenor_bucket, face, security_class).");

    m.def("default_assumptions", [] {
        io::Assumptions a = io::default_assumptions();
        py::dict d;
        d["g"] = a.growth.g();
        d["rates"] = a.rates.knots();
        return d;
    });
}
