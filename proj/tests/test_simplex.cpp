#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "debtflow/error.hpp"
#include "debtflow/simplex.hpp"

using namespace debtflow;
using lp::Constraint;
using lp::ConstraintType;
using lp::Problem;
using lp::Status;

namespace {

Constraint le(std::vector<double> coeffs, double rhs, std::string name = "") {
    return Constraint{std::move(coeffs), ConstraintType::less_equal, rhs, std::move(name)};
}

Constraint eq(std::vector<double> coeffs, double rhs, std::string name = "") {
    return Constraint{std::move(coeffs), ConstraintType::equal, rhs, std::move(name)};
}

}  // namespace

TEST_CASE("two-variable corner solution") {
    // min -x - 2y  s.t.  x + y <= 4, x <= 3, y <= 2
    Problem p;
    p.objective = {-1.0, -2.0};
    p.constraints = {le({1, 1}, 4, "cap"), le({1, 0}, 3), le({0, 1}, 2, "ycap")};
    lp::Solution s = lp::solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.x[0] == doctest::Approx(2.0));
    CHECK(s.x[1] == doctest::Approx(2.0));
    CHECK(s.objective == doctest::Approx(-6.0));
    CHECK(s.binding == std::vector<std::string>{"cap", "ycap"});
}

TEST_CASE("equality constraints route through phase 1") {
    // min x + y  s.t.  x + y = 1, x - y <= 0  -> x = y = 1/2 is feasible,
    // but cheaper vertices exist along the line; optimum x=0, y=1? cost 1
    // everywhere on the line, so any vertex is optimal with objective 1.
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {eq({1, 1}, 1, "sum"), le({1, -1}, 0)};
    lp::Solution s = lp::solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == doctest::Approx(1.0));
    CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0));
    CHECK(s.x[0] <= s.x[1] + 1e-12);
}

TEST_CASE("infeasible systems are reported") {
    Problem p;
    p.objective = {1.0};
    p.constraints = {eq({1}, 1, "pin"), le({1}, 0.5, "cap")};
    CHECK(lp::solve(p).status == Status::infeasible);
}

TEST_CASE("unbounded problems are reported") {
    Problem p;
    p.objective = {-1.0, 0.0};
    p.constraints = {le({0, 1}, 1)};
    CHECK(lp::solve(p).status == Status::unbounded);
}

TEST_CASE("negative right-hand sides normalize to >= rows") {
    // x >= 2 expressed as -x <= -2; minimize x.
    Problem p;
    p.objective = {1.0};
    p.constraints = {le({-1}, -2, "floor")};
    lp::Solution s = lp::solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.x[0] == doctest::Approx(2.0));
}

TEST_CASE("degenerate ties resolve deterministically") {
    Problem p;
    p.objective = {-1.0, -1.0, 0.0};
    p.constraints = {le({1, 1, 1}, 1, "a"), le({1, 1, 0}, 1, "b"), le({1, 0, 1}, 1, "c")};
    lp::Solution first = lp::solve(p);
    lp::Solution second = lp::solve(p);
    REQUIRE(first.status == Status::optimal);
    CHECK(first.x == second.x);
    CHECK(first.binding == second.binding);
    CHECK(first.objective == doctest::Approx(-1.0));
}

TEST_CASE("arity mismatch is rejected") {
    Problem p;
    p.objective = {1.0, 1.0};
    p.constraints = {le({1}, 1)};
    CHECK_THROWS_AS(lp::solve(p), Error);
}
