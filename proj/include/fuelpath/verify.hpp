#pragma once

#include <string>
#include <vector>

#include "fuelpath/dataset.hpp"

namespace fuelpath {

struct CheckResult {
    int criterion;       // 1..11
    std::string name;
    double value;
    std::string expected; // human-readable bound, e.g. "0.808 +/- 0.005"
    bool passed;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.passed) ++n;
        return n;
    }
};

namespace verify {

/// Every acceptance criterion, evaluated against the given dataset.
VerifyReport run_all(const Dataset& ds);

} // namespace verify
} // namespace fuelpath
