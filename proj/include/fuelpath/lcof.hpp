#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuelpath/dataset.hpp"
#include "fuelpath/emissions.hpp"

namespace fuelpath {

enum class CostLabel {
    capital,
    fom,
    vom,
    feedstock,
    co2_transport_storage,
    coproduct_electricity,
    dac_co2_net,
    credit_45v,
    credit_45q,
    credit_45z,
    rfs,
    lcfs,
};

std::string to_string(CostLabel label);

/// Itemized cost/revenue stack per unit of product. Credits are <= 0,
/// costs >= 0 except the electricity co-product which can be either sign.
struct LcofBreakdown {
    std::string pathway_id;
    std::string unit; // "USD/kg" or "USD/gal"
    std::vector<std::pair<CostLabel, double>> items;

    double net() const {
        double s = 0.0;
        for (const auto& [l, v] : items) s += v;
        return s;
    }
    double gross() const {
        double s = 0.0;
        for (const auto& [l, v] : items)
            if (v > 0.0 || l == CostLabel::coproduct_electricity) s += v;
        return s;
    }
    double item(CostLabel l) const {
        for (const auto& [k, v] : items)
            if (k == l) return v;
        return 0.0;
    }
};

/// Counterfactual switches for explicit what-if analyses. All off by
/// default; the baseline never applies them.
struct WhatIf {
    bool p6_dual_credit = false;              // 45V + 45Q simultaneously
    std::optional<double> p6_co2_sale_price;  // $/t on 95% of captured CO2
};

struct H2Result {
    LcofBreakdown breakdown;      // $/kg H2
    double ci_kg = 0.0;           // kgCO2e/kg
    double captured_kg_per_gj = 0.0;
    double credit_45v_per_kg = 0.0; // derated candidates
    double credit_45q_per_kg = 0.0;
    Instrument selected = Instrument::v45;
    double methane_fee_per_kg = 0.0;
    double elec_mwh_per_kg = 0.0; // 45Y-eligible electricity input
};

struct SlfResult {
    LcofBreakdown breakdown;      // $/gal
    double ci_gj_hhv = 0.0;       // physical lifecycle CI
    double ci_mmbtu_lhv = 0.0;
    double z45_ci_mmbtu_lhv = 0.0;
    double z45_credit_full = 0.0; // $/gal at DF = 1
};

struct MitigationResult {
    std::string pathway_id;
    double total_subsidy = 0.0;   // $/unit product
    double ci_delta = 0.0;        // kgCO2e/unit product
    double lscm = 0.0;            // $/t CO2e
    double lscm_undiscounted = 0.0;
};

namespace lcof {

/// Capital + fixed O&M per GJ of output: (capex*crf + fom)/(8760*cf*0.0036),
/// plus variable O&M.
struct UnitCost {
    double capital;
    double fom;
    double vom;
    double total() const { return capital + fom + vom; }
};
UnitCost annualized_unit_cost(const TechnologySpec& tech, const FinancialParams& fin);

/// Hydrogen levelized cost, itemized, $/kg.
H2Result lcof_h2(const Dataset& ds, const Pathway& p, const WhatIf& what_if = {});

/// SLF levelized cost, itemized, $/gal, under a fuel-credit scenario.
/// The baseline scenario (all defaults) grants no 45Z/RFS/LCFS.
SlfResult lcof_slf(const Dataset& ds, const Pathway& p,
                   const FuelCreditScenario& scenario = {},
                   const WhatIf& what_if = {});

/// Levelized subsidy per tonne of CO2 mitigated vs the fossil
/// benchmark; 45Z is granted for the full asset life. Throws no_mitigation
/// when the pathway does not beat the benchmark CI.
MitigationResult lscm(const Dataset& ds, const Pathway& p, const WhatIf& what_if = {});

} // namespace lcof
} // namespace fuelpath
