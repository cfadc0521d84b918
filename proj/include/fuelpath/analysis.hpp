#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuelpath/lcof.hpp"

namespace fuelpath {

struct SweepPoint {
    int z45_years;
    std::map<std::string, double> lcof_by_pathway; // $/gal
};

struct RinScenario {
    double d5 = 0.0;
    double d3 = 0.0;
    double d6 = 0.0; // assumed equal to d5 in the shipped panels
};

struct FrontierCell {
    int z45_years;
    double lcfs_price;
    std::string winner; // pathway id or "FOSSIL"
    std::map<std::string, double> lcof_by_pathway;
};

struct FrontierGrid {
    RinScenario rins;
    double fossil_price;
    std::vector<FrontierCell> cells;
};

struct SubsidyFit {
    double slope_usd_per_t;
    double intercept_usd_per_kg;
};

struct BreakevenCo2Sale {
    double price_revenue_only;   // buyer pays delivery; seller keeps T&S cost
    double price_avoided_ts;     // sold share also avoids its T&S cost
    double sold_fraction;        // of total captured CO2
};

/// One row of the biomass-efficiency incentive study (per tonne of biomass).
struct EfficiencyCase {
    double eta;
    double energy_slf_mmbtu;
    double ci_kg_per_mmbtu;
    double credit_45z;
    double revenue_slf;
    double biomass;
    double fixed;
    double vom;
    double co2_ts;
    double net_value() const {
        return credit_45z + revenue_slf - biomass - fixed - vom - co2_ts;
    }
};

struct FixedReductionRequirement {
    int n_pct_per_10pts;        // minimal integer n% per 10 efficiency points
    double total_reduction;     // at eta = 0.2, i.e. 3n
    double continuous_total;    // exact (non-integer) solution
};

namespace analysis {

/// LCOF vs 45Z duration for every SLF pathway (baseline otherwise).
std::vector<SweepPoint> sweep_45z_duration(const Dataset& ds,
                                           const std::vector<int>& durations);

/// Smallest duration on the given grid at which a pathway's LCOF reaches
/// `price`; -1 when it never does.
int min_duration_to_reach(const Dataset& ds, const std::string& pathway_id,
                          double price, const std::vector<int>& durations);

/// Winner map over the 45Z-duration x LCFS-price grid for one RIN scenario.
/// Ties break toward fossil, then the lowest pathway index.
FrontierGrid competitiveness_frontier(const Dataset& ds, const RinScenario& rins,
                                      const std::vector<int>& durations,
                                      const std::vector<double>& lcfs_prices,
                                      double fossil_price);

/// The four shipped RIN scenarios of the frontier panels.
std::vector<RinScenario> shipped_rin_scenarios();

/// Least-squares line through (CI reduction, levelized subsidy) points.
SubsidyFit fit_subsidy_line(const std::vector<std::pair<double, double>>& points);

/// The reforming-pathway points (P1-P3) against the modeled P1 CI.
std::vector<std::pair<double, double>> reforming_subsidy_points(const Dataset& ds);

/// Sale price of excess biogenic CO2 (95% of captured) equating P6's LCOF
/// with P1's; bisection to 0.01 $/t; both T&S conventions reported.
BreakevenCo2Sale breakeven_biogenic_co2_price(const Dataset& ds);

/// Per-tonne-of-biomass value stack for each gasifier efficiency.
std::vector<EfficiencyCase> efficiency_incentive_analysis(const std::vector<double>& etas,
                                                          double n_pct);

/// Minimal integer fixed-cost reduction slope for the 20%-efficiency design
/// to match the 50% design's net value.
FixedReductionRequirement required_fixed_reduction_at_eta02();

} // namespace analysis
} // namespace fuelpath
