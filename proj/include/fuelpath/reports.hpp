#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuelpath/analysis.hpp"

namespace fuelpath {

enum class ReportFormat { csv, json };

/// Report options mirroring the CLI surface.
struct RunConfig {
    FuelCreditScenario scenario;
    bool scenario_rins_set = false;   // explicit RINs => single frontier grid
    double fossil_price = 2.2;
    WhatIf what_if;
    ReportFormat format = ReportFormat::csv;
    std::vector<std::string> pathway_filter; // empty = all
};

/// name -> file content; callers decide where the files land.
using FileBundle = std::vector<std::pair<std::string, std::string>>;

namespace reports {

FileBundle lcof_report(const Dataset& ds, const RunConfig& cfg);
FileBundle sweep_report(const Dataset& ds, const RunConfig& cfg);
FileBundle lscm_report(const Dataset& ds, const RunConfig& cfg);

/// Fixed-point decimal used everywhere in emitted files (4 places).
std::string format_value(double v);

} // namespace reports
} // namespace fuelpath
