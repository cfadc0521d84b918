#pragma once

#include <string>
#include <vector>

#include "fuelpath/dataset.hpp"

namespace fuelpath {

enum class CiBasis { per_kg_h2, per_gj_hhv, per_gj_lhv, per_mmbtu_lhv, per_gal_slf };

struct CarbonIntensity {
    double value = 0.0;
    CiBasis basis = CiBasis::per_gj_hhv;
};

/// All modeled carbon flows of one pathway, per GJ of product (HHV).
/// sources == sinks to machine precision by construction; the ledger test
/// asserts it independently.
struct CarbonLedger {
    double feed_carbon = 0.0;      // carbon in feedstock(s) into the chain
    double external_co2 = 0.0;     // DAC or fermentation CO2 handled
    double vented_fossil = 0.0;
    double vented_biogenic = 0.0;
    double stored = 0.0;
    double product_carbon = 0.0;
    double upstream_emissions = 0.0; // supply-chain CO2e, outside the balance

    double sources() const { return feed_carbon + external_co2; }
    double sinks() const { return vented_fossil + vented_biogenic + stored + product_carbon; }
};

namespace emissions {

/// Lifecycle CI of a hydrogen pathway, kgCO2e/kg H2 (GWP-100, attributional).
double h2_ci(const Dataset& ds, const Pathway& p);

/// Same, per GJ_HHV of H2.
double h2_ci_per_gj(const Dataset& ds, const Pathway& p);

/// Lifecycle CI of an SLF pathway per GJ_HHV of fuel.
double slf_ci_per_gj(const Dataset& ds, const Pathway& p);

/// Lifecycle CI of an SLF pathway converted to the 45Z statutory basis,
/// kgCO2e/MMBtu_LHV (x hhv/lhv ratio, x GJ/MMBtu).
double slf_ci(const Dataset& ds, const Pathway& p);

/// CI on the 45Z emissions-rate basis: the lifecycle CI with any CO2 whose
/// storage or utilization is monetized under a 45Q claim in the chain added
/// back (no double incentive for the same negative emissions).
/// `upstream_claims_q45` says whether the upstream H2 facility's selected
/// credit is 45Q (the cost layer resolves the 45V/45Q max).
double slf_ci_45z(const Dataset& ds, const Pathway& p, bool upstream_claims_q45);

/// Explicit carbon ledger for any pathway, per GJ_HHV of product.
CarbonLedger carbon_ledger(const Dataset& ds, const Pathway& p);

/// Basis conversions for SLF carbon intensities.
double convert_slf_ci(const Dataset& ds, double value, CiBasis from, CiBasis to);

/// Corn-ethanol-with-CCS upstream CI from fermentation stoichiometry.
double ethanol_ccs_ci(double capture_fraction = 1.0);

struct AppendixCi {
    double energy_slf_mmbtu;  // per tonne biomass
    double captured_kg;       // per tonne biomass
    double ci;                // kgCO2e/MMBtu
};

/// Fuel CI of the simplified gasifier-CCS design at a given efficiency;
/// `with_lhv_factor` selects whether the fuel-energy term carries the 1.05
/// HHV/LHV factor (both conventions are exposed).
AppendixCi appendix_slf_ci(double eta, bool with_lhv_factor = true);

} // namespace emissions
} // namespace fuelpath
