// Acceptance suite: evaluates every acceptance criterion against the
// shipped dataset and prints one line per criterion (sub-check detail on
// failure). Exit code 0 only when everything passes.
#include <cstdio>
#include <map>
#include <vector>

#include "fuelpath/dataset.hpp"
#include "fuelpath/verify.hpp"

int main() {
    fuelpath::Dataset ds;
    try {
        ds = fuelpath::load_dataset(fuelpath::builtin_dataset_json());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "dataset load failed: %s\n", e.what());
        return 1;
    }

    const auto report = fuelpath::verify::run_all(ds);

    static const char* kTitles[] = {
        "",
        "derating factors vs annuity oracle",
        "hydrogen LCOF golden numbers",
        "hydrogen CI reproduction and carbon-ledger balance",
        "SLF LCOF golden numbers (baseline scenario)",
        "45Z duration thresholds for P11 and P13",
        "competitiveness-frontier narrative and winner set",
        "subsidy regression (slope, P4 total, P4 bonus)",
        "LSCM classifications against the SCC range",
        "biomass-efficiency incentive study",
        "derivation oracles",
        "property suites",
    };

    std::map<int, std::vector<const fuelpath::CheckResult*>> by_criterion;
    for (const auto& c : report.checks) by_criterion[c.criterion].push_back(&c);

    int failed_criteria = 0;
    for (const auto& [criterion, checks] : by_criterion) {
        bool ok = true;
        for (const auto* c : checks) ok &= c->passed;
        std::printf("[%s] criterion %2d: %s (%zu checks)\n", ok ? "PASS" : "FAIL",
                    criterion, kTitles[criterion], checks.size());
        if (!ok) {
            ++failed_criteria;
            for (const auto* c : checks)
                if (!c->passed)
                    std::printf("         %s = %.6g, expected %s\n", c->name.c_str(),
                                c->value, c->expected.c_str());
        }
    }
    std::printf("%d/%zu criteria passed (%d of %zu checks failed)\n",
                static_cast<int>(by_criterion.size()) - failed_criteria,
                by_criterion.size(), report.failures(), report.checks.size());
    return failed_criteria == 0 ? 0 : 1;
}
