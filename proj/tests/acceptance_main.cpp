// Acceptance gate: one pass/fail line per check, nonzero exit on any failure.
// --criterion N runs a single check; --quick trades effort for speed with the
// widened bounds documented in accept.cpp.

#include <cstdio>
#include <vector>

#include <CLI11.hpp>

#include "stsdisc/accept.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    int criterion = 0;
    stsdisc::AcceptOptions options;
    app.add_option("--criterion", criterion, "check id to run, 0 = all")
        ->check(CLI::Range(0, 10))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "master seed")->capture_default_str();
    app.add_flag("--quick", options.quick, "reduced effort, widened bounds");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<stsdisc::CheckResult> results;
    if (criterion == 0) {
        results = stsdisc::run_acceptance(options);
    } else {
        results.push_back(stsdisc::run_criterion(criterion, options));
    }

    int failures = 0;
    for (const stsdisc::CheckResult& result : results) {
        failures += result.passed ? 0 : 1;
        std::printf("[%s] %2d %s: %s\n", result.passed ? "PASS" : "FAIL", result.id,
                    result.name.c_str(), result.detail.c_str());
    }
    if (results.size() > 1) {
        std::printf("%zu/%zu checks passed\n", results.size() - static_cast<std::size_t>(failures),
                    results.size());
    }
    return failures == 0 ? 0 : 1;
}
