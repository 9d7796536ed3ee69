#include <doctest.h>

#include "boolattice/cases.hpp"

using namespace boolattice;

TEST_CASE("list_cases covers the catalog") {
    auto cases = list_cases();
    CHECK(cases.size() == 7);
}

TEST_CASE("unknown case throws") {
    CHECK_THROWS_AS(run_case("no-such-case"), UnknownCase);
}

TEST_CASE("alt6-rank2 case") {
    CaseReport r = run_case("alt6-rank2");
    for (const auto& c : r.checks)
        INFO(c.what, " expected ", c.expected, " got ", c.got);
    CHECK(r.pass);
}

TEST_CASE("borel-psl32 case") {
    CaseReport r = run_case("borel-psl32");
    CHECK(r.pass);
}

TEST_CASE("ore-family case") {
    for (int ell = 1; ell <= 2; ++ell) {
        CaseReport r = run_case("ore-family", Caps{}, ell);
        CHECK(r.pass);
    }
}

TEST_CASE("fact2-exception case") {
    CaseReport r = run_case("fact2-exception");
    for (const auto& c : r.checks) {
        INFO(c.what, " expected ", c.expected, " got ", c.got);
        CHECK(c.ok);
    }
    CHECK(r.pass);
}

TEST_CASE("fig1-alt8 case") {
    CaseReport r = run_case("fig1-alt8");
    for (const auto& c : r.checks) {
        INFO(c.what, " expected ", c.expected, " got ", c.got);
        CHECK(c.ok);
    }
    CHECK(r.pass);
}

TEST_CASE("octal case") {
    CaseReport r = run_case("octal");
    for (const auto& c : r.checks) {
        INFO(c.what, " expected ", c.expected, " got ", c.got);
        CHECK(c.ok);
    }
    CHECK(r.pass);
}

TEST_CASE("case reports are deterministic") {
    CaseReport a = run_case("alt6-rank2");
    CaseReport b = run_case("alt6-rank2");
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].got == b.checks[i].got);
        CHECK(a.checks[i].ok == b.checks[i].ok);
    }
}
