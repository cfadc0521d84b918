#pragma once

namespace fuelpath::derivations {

/// Syngas mole-balance factor for integrated vs two-facility biomass-FTS:
/// 300 mol syngas -> deep WGS (10 CO + 290 H2) -> 80% PSA recovery -> 232 H2,
/// fed 3:1 H2:CO2 to RWGS -> 154.7 H2 + 77.3 CO, i.e. 232/300 of the
/// integrated facility's FTS feed.
double integrated_mole_balance_factor();

/// IFI of the integrated biomass-FTS facility from the separate-facility
/// intensities: bg_ifi * rwgs_ifi * mole-balance factor.
double derive_integrated_ifi(double bg_ifi, double rwgs_ifi);

/// Integrated-facility unit cost: bg_cost * rwgs_ifi * factor + rwgs_cost.
/// Applies to CAPEX ($/kW), FOM ($/kW-yr) and VOM ($/GJ) alike.
double derive_integrated_cost(double bg_cost, double rwgs_cost, double rwgs_ifi,
                              double factor);

struct EthanolToJetParams {
    double ifi;          // MJ ethanol / MJ fuel
    double capex;        // $/kW
    double fom;          // $/kW-yr
    double vom;          // $/GJ
    double scale_factor; // plant scale-up vs reference
    double output_gj_per_hr;
    double output_kw;
};

/// Ethanol-to-jet plant parameters from the reference 200 ton/day design,
/// scaled to the 45.9 Mgal/yr FTS block and costed by the 0.68 power law.
EthanolToJetParams derive_ethanol_to_jet_params();

/// Generic power-law equipment scaling: ref_cost * (size/ref_size)^exponent.
double powerlaw_cost(double ref_cost, double ref_size, double size, double exponent);

struct CompressionCost {
    double tpc_coal_case;   // M$
    double tpc_gas_case;    // M$
    double capex_per_t;     // $/t CO2
    double opex_per_t;      // $/t CO2
    double total_per_t;     // $/t CO2
};

/// CO2 compression + dehydration cost at the corn-ethanol plant: mean of two
/// power-law TPC estimates annualized at CRF 0.131 over 29.9 t/hr, plus
/// 76.3 kWh/t of electricity at 60 $/MWh.
CompressionCost derive_compression_cost();

struct EthanolCcsCi {
    double carbon_content;    // kgCO2/GJ ethanol
    double capturable;        // kgCO2/GJ, fermentation stoichiometry
    double net_ci;            // kgCO2e/GJ
};

/// Corn-ethanol-with-CCS upstream CI: half the ethanol carbon (fermentation
/// CO2) is capturable; 50 - 32 = 18 on the rounded intermediate.
EthanolCcsCi derive_ethanol_ccs_ci(double capture_fraction = 1.0);

} // namespace fuelpath::derivations
