#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fuzzyseq/suites.hpp"

using namespace fuzzyseq;

TEST_CASE("every suite in the catalog passes") {
    for (const std::string& name : suite_names()) {
        const SuiteReport report = theorem_suite(name);
        CAPTURE(name);
        for (const auto& check : report.checks) {
            CAPTURE(check.label);
            CAPTURE(check.observed);
            CHECK(check.passed);
        }
        CHECK(report.all_passed());
        CHECK_FALSE(report.claim.empty());
        CHECK_FALSE(report.checks.empty());
    }
}

TEST_CASE("the catalog is complete and closed") {
    const auto names = suite_names();
    CHECK(names.size() == 12);
    for (const char* expected : {"2.6", "3.6", "3.7", "3.8", "3.9", "3.11", "3.12", "3.13", "3.14",
                                 "3.15", "3.16", "3.17"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(theorem_suite("3.10"), std::invalid_argument);
    CHECK_THROWS_AS(theorem_suite("nope"), std::invalid_argument);
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
    const SuiteReport a = theorem_suite("3.6", 42);
    const SuiteReport b = theorem_suite("3.6", 42);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].label == b.checks[i].label);
        CHECK(a.checks[i].observed == b.checks[i].observed);
        CHECK(a.checks[i].passed == b.checks[i].passed);
    }
}

TEST_CASE("suites hold under a different seed") {
    for (const std::string& name : {"3.6", "3.9", "3.11", "3.16"}) {
        const SuiteReport report = theorem_suite(name, 20260809);
        CAPTURE(name);
        CHECK(report.all_passed());
    }
}
