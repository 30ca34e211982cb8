#include <doctest.h>

#include "relcycles/error.hpp"
#include "relcycles/suites.hpp"

using namespace relcycles;
using namespace relcycles::suites;

TEST_CASE("check records the first counterexample only") {
    Report r;
    r.suite = "demo";
    Check& a = r.check("a");
    a.record(true, [] { return std::string("unused"); });
    a.record(false, [] { return std::string("first"); });
    a.record(false, [] { return std::string("second"); });
    Check& b = r.check("b");
    b.attempt([]() -> bool { throw Error(ErrorKind::PreconditionFailed, "boom"); }, [] { return std::string("ctx"); });
    CHECK(&r.check("a") == &a);
    CHECK(a.checked == 3);
    CHECK(a.failures == 2);
    CHECK(a.counterexample == "first");
    CHECK(b.failures == 1);
    CHECK(b.counterexample.find("ctx (threw PreconditionFailed: boom)") == 0);
    CHECK_FALSE(r.passed());
}

TEST_CASE("report rendering") {
    Report r;
    r.suite = "demo";
    r.seed = 9;
    r.check("ok").record(true, [] { return std::string(); });
    r.results["order"] = "3";
    const std::string json = render(r, Format::Json);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("\"seed\": 9") != std::string::npos);
    CHECK(json.find("wall_seconds") == std::string::npos);
    CHECK(render(r, Format::Json, true).find("wall_seconds") != std::string::npos);
    CHECK(render(r, Format::Tsv).find("ok\t1\t0\tPASS") != std::string::npos);
    CHECK(render(r, Format::Text).find("overall: PASS") != std::string::npos);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
    CHECK(parse_field("Q").is_rationals());
    CHECK(parse_field("7").characteristic() == 7);
    CHECK_THROWS_AS(parse_field("6"), Error);
    CHECK_THROWS_AS(parse_field("5x"), Error);
}

TEST_CASE("suites are deterministic in their seed") {
    FormsConfig cfg;
    cfg.trials = 10;
    cfg.seed = 3;
    CHECK(to_json(run_forms_suite(cfg)).dump() == to_json(run_forms_suite(cfg)).dump());
    Weight1Config w;
    w.trials = 5;
    w.cycles3 = 1;
    const Report r = run_weight1_suite(w);
    CHECK(r.passed());
    CHECK(to_json(r).dump() == to_json(run_weight1_suite(w)).dump());
}
