#include "doctest.h"

#include "sphpoly/verify.hpp"

using namespace sphpoly;

TEST_CASE("a small verification run passes every named check") {
    VerifyOptions options;
    options.n_max = 19;
    options.oracle_max = 9;
    options.realize_max = 7;
    options.jset_max = 300;

    auto report = run_verification(options);
    CHECK(!report.checks.empty());
    for (const auto& check : report.checks) {
        CAPTURE(check.name);
        CAPTURE(check.detail);
        CHECK(check.passed);
    }
    CHECK(report.all_passed());
    CHECK(report.failed_count() == 0);
}

TEST_CASE("check names cover every module") {
    VerifyOptions options;
    options.n_max = 5;
    options.oracle_max = 5;
    options.realize_max = 5;
    options.jset_max = 20;

    auto report = run_verification(options);
    bool arith = false, spectrum = false, euler = false, oracle = false;
    for (const auto& check : report.checks) {
        arith = arith || check.name.starts_with("arith.");
        spectrum = spectrum || check.name.starts_with("spectrum.");
        euler = euler || check.name.starts_with("euler.");
        oracle = oracle || check.name.starts_with("oracle.");
    }
    CHECK(arith);
    CHECK(spectrum);
    CHECK(euler);
    CHECK(oracle);
}

TEST_CASE("a failed check flips the report") {
    VerifyReport report;
    report.checks.push_back({"synthetic.pass", true, ""});
    CHECK(report.all_passed());
    report.checks.push_back({"synthetic.fail", false, "injected"});
    CHECK(!report.all_passed());
    CHECK(report.failed_count() == 1);
}
