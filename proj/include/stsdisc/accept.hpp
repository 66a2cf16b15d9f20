#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stsdisc {

struct CheckResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

// quick trades rigour for speed: reduced restart/trial/relabelling budgets
// with widened tolerances (documented per check in accept.cpp). The full
// profile is the release gate.
struct AcceptOptions {
    std::uint64_t seed = 42;
    bool quick = false;
};

// Runs one numbered check (1-10); throws DomainError for unknown ids.
CheckResult run_criterion(int id, const AcceptOptions& options);

// All ten checks in order.
std::vector<CheckResult> run_acceptance(const AcceptOptions& options);

}  // namespace stsdisc
