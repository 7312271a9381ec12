#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "debtflow/error.hpp"
#include "debtflow/io.hpp"
#include "support/oracles.hpp"

using namespace debtflow;
using debtflow::testing::thrown_code;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("assumptions files") {
    io::Assumptions defaults = io::default_assumptions();
    CHECK(defaults.growth.g() == 0.08);
    CHECK(defaults.rates.rate_at(10) == 0.0479);

    io::Assumptions from_file = io::read_assumptions("data/assumptions_default.json");
    CHECK(from_file.growth.g() == defaults.growth.g());
    CHECK(from_file.rates.knots() == defaults.rates.knots());

    CHECK(thrown_code([] { io::parse_assumptions("{\"rates\": []}"); }) == errc::parse_error);
    CHECK(thrown_code([] { io::parse_assumptions("{\"g\": 0.08}"); }) == errc::parse_error);
    CHECK(thrown_code([] { io::read_assumptions("/nonexistent/path.json"); }) ==
          errc::parse_error);

    std::string path = temp_path("debtflow_assumptions_roundtrip.json");
    io::write_assumptions(defaults, path);
    io::Assumptions back = io::read_assumptions(path);
    CHECK(back.growth.g() == defaults.growth.g());
    CHECK(back.rates.knots() == defaults.rates.knots());
    std::remove(path.c_str());
}

TEST_CASE("json parse errors carry line and column") {
    try {
        io::parse_assumptions("{\n  \"g\": 0.08,\n  \"rates\": oops\n}", "broken.json");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("strategy files") {
    Strategy fy2016 = io::read_strategy("data/fy2016_strategy.json");
    CHECK(fy2016.fraction(1) == doctest::Approx(0.423 / 1.001));
    // The implied grid always carries the bill bucket.
    Strategy longs = io::parse_strategy("{\"10\": 0.5, \"30\": 0.5}");
    CHECK(longs.grid().contains(1));
    CHECK(longs.fraction(1) == 0.0);

    std::string path = temp_path("debtflow_strategy_roundtrip.json");
    io::write_strategy(fy2016, path);
    Strategy back = io::read_strategy(path);
    for (std::size_t i = 0; i < fy2016.grid().size(); ++i)
        CHECK(back.fractions()[i] == doctest::Approx(fy2016.fractions()[i]).epsilon(1e-12));
    std::remove(path.c_str());

    CHECK(thrown_code([] { io::parse_strategy("{}"); }) == errc::parse_error);
    CHECK(thrown_code([] { io::parse_strategy("{\"x\": 1.0}"); }) == errc::parse_error);
    CHECK(thrown_code([] { io::parse_strategy("[1, 2]"); }) == errc::parse_error);
}

TEST_CASE("policy window files") {
    PolicyWindow window = io::read_policy_window("data/window_fy2016_pm5.json");
    CHECK(window.grid().tenors() == std::vector<int>{1, 2, 3, 5, 7, 10, 30});
    CHECK(window.lower()[0] == 0.373);
    CHECK(window.upper()[6] == 0.099);
    CHECK(thrown_code([] { io::parse_policy_window("{}"); }) == errc::parse_error);
}

TEST_CASE("auction pattern files") {
    AuctionPattern pattern = io::read_auction_pattern("data/auction_pattern_2017q3.json");
    CHECK(pattern.bills_trailing_avg == 1700.0);
    CHECK(yearly_flow(pattern, 30) == 156.0);
    CHECK(yearly_flow(pattern, 3) == 288.0);
    CHECK(yearly_flow(pattern, 4) == 0.0);
}

TEST_CASE("simulation config files") {
    io::Assumptions defaults = io::default_assumptions();
    SimulationConfig config =
        io::read_simulation_config("data/simulate_fy2016.json", defaults);
    CHECK(config.horizon == 300);
    CHECK(config.renormalize);
    CHECK(config.growth.g() == 0.08);
    CHECK(config.strategy.fraction(30) == doctest::Approx(0.049 / 1.001));

    std::string text = R"({
      "strategy": {"1": 1.0},
      "g": 0.0,
      "rates": {"1": 0.0},
      "initial_deficit": 100,
      "horizon": 3,
      "deficit_overrides": {"2": 0.0, "3": 0.0},
      "initial_portfolio": {"stock": 50, "theta": {"1": 0.5, "2": 0.5}}
    })";
    SimulationConfig custom = io::parse_simulation_config(text, defaults);
    CHECK(custom.growth.is_zero());
    CHECK(custom.rates.rate_at(1) == 0.0);
    CHECK(custom.deficit_overrides.at(2) == 0.0);
    REQUIRE(custom.initial_portfolio.has_value());
    CHECK(custom.initial_portfolio->stock == 50.0);
    CHECK(custom.initial_portfolio->distribution.at(2) == 0.5);
}

TEST_CASE("gaps files") {
    CHECK(io::read_gaps("data/gaps_10y.json").size() == 10);
    std::string path = temp_path("debtflow_gaps_bare.json");
    std::ofstream(path) << "[1, 2, 3]";
    CHECK(io::read_gaps(path) == std::vector<double>{1.0, 2.0, 3.0});
    std::remove(path.c_str());
}

TEST_CASE("records csv") {
    auto records = io::read_records_csv("data/fy2016_records.csv");
    CHECK(records.size() == 23);
    CHECK(records.front().security_class == SecurityClass::bill);
    CHECK(records.back().tenor_bucket == 30);

    SUBCASE("header is enforced") {
        std::istringstream in("date,face\n");
        CHECK(thrown_code([&] { io::parse_records_csv(in, "x.csv"); }) == errc::parse_error);
    }

    SUBCASE("field errors carry the line number") {
        std::istringstream in(
            "issue_date,maturity_date,tenor_bucket,face,security_class\n"
            "2016-01-01,2021-01-01,5,100,note_bond\n"
            "2016-01-01,2021-01-01,5,100,equity\n");
        try {
            io::parse_records_csv(in, "x.csv");
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("x.csv:3") != std::string::npos);
        }
    }

    SUBCASE("date validation") {
        CHECK(io::format_date(io::parse_date("2016-09-30")) == "2016-09-30");
        CHECK(thrown_code([] { io::parse_date("2016-13-01"); }) == errc::parse_error);
        CHECK(thrown_code([] { io::parse_date("yesterday"); }) == errc::parse_error);
    }
}

TEST_CASE("manifest sidecar") {
    std::string out = temp_path("debtflow_output.csv");
    std::ofstream(out) << "a,b\n";
    io::RunManifest manifest;
    manifest.command = "frontier";
    manifest.inputs = {"in.json"};
    manifest.assumptions_source = "builtin";
    manifest.g = 0.08;
    manifest.outputs = {out};
    io::write_manifest_sidecar(out, manifest);

    std::ifstream sidecar(out + ".manifest.json");
    REQUIRE(sidecar.good());
    std::stringstream buf;
    buf << sidecar.rdbuf();
    CHECK(buf.str().find("\"command\": \"frontier\"") != std::string::npos);
    CHECK(buf.str().find("\"tool_version\": \"0.1.0\"") != std::string::npos);
    CHECK(buf.str().find("generated_at") != std::string::npos);
    std::remove(out.c_str());
    std::remove((out + ".manifest.json").c_str());
}
