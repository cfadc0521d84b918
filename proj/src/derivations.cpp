#include "fuelpath/derivations.hpp"

#include <cmath>

#include "fuelpath/errors.hpp"

namespace fuelpath::derivations {

double integrated_mole_balance_factor() {
    // 300 mol syngas to the integrated FTS. Separate route: deep WGS leaves
    // 10 CO + 290 H2; PSA recovers 80% of the H2; RWGS consumes 1/3 of that
    // H2 converting CO2 to CO, leaving a 2:1 H2:CO feed.
    const double syngas = 300.0;
    const double h2_after_wgs = 290.0;
    const double psa_recovery = 0.80;
    const double h2_to_rwgs = psa_recovery * h2_after_wgs;
    const double h2_feed = h2_to_rwgs * 2.0 / 3.0;
    const double co_feed = h2_to_rwgs * 1.0 / 3.0;
    return (h2_feed + co_feed) / syngas;
}

double derive_integrated_ifi(double bg_ifi, double rwgs_ifi) {
    if (bg_ifi <= 0.0 || rwgs_ifi <= 0.0)
        raise(errc::invariant_violation, "derive_integrated_ifi: intensities must be positive");
    return bg_ifi * rwgs_ifi * integrated_mole_balance_factor();
}

double derive_integrated_cost(double bg_cost, double rwgs_cost, double rwgs_ifi,
                              double factor) {
    if (bg_cost < 0.0 || rwgs_cost < 0.0 || rwgs_ifi <= 0.0 || factor <= 0.0)
        raise(errc::invariant_violation, "derive_integrated_cost: invalid inputs");
    return bg_cost * rwgs_ifi * factor + rwgs_cost;
}

EthanolToJetParams derive_ethanol_to_jet_params() {
    const double eth_hhv = 29.7;        // MJ/kg
    const double fuel_hhv = 45.5;       // MJ/kg
    const double mass_yield = 0.6;      // kg fuel per kg ethanol
    const double eth_tonne_per_day = 181.4;
    const double cf = 0.85;
    const double spk_share = 0.82, naphtha_share = 0.18;
    const double spk_gal_per_t = 323.6, naphtha_gal_per_t = 352.1;
    const double fts_block_mgal = 45.9; // target annual output, million gal

    EthanolToJetParams out;
    out.ifi = eth_hhv / (fuel_hhv * mass_yield);

    const double fuel_t_per_yr = eth_tonne_per_day * 365.0 * mass_yield * cf;
    const double gal_per_t = spk_share * spk_gal_per_t + naphtha_share * naphtha_gal_per_t;
    const double ref_mgal = fuel_t_per_yr * gal_per_t / 1e6;
    out.scale_factor = fts_block_mgal / ref_mgal;

    const double capex_musd = powerlaw_cost(23.3, 1.0, out.scale_factor, 0.68);
    out.output_gj_per_hr =
        eth_tonne_per_day / 24.0 * mass_yield * out.scale_factor * fuel_hhv;
    out.output_kw = out.output_gj_per_hr / 0.0036;
    out.capex = capex_musd * 1e6 / out.output_kw;

    const double fom_musd = 6.1;        // 4% of CAPEX maintenance/tax/insurance + 5 operators
    out.fom = fom_musd * 1e6 / out.output_kw;
    const double vom_musd = 13.7;       // utilities + catalysts + hydrogen
    const double annual_gj = out.output_gj_per_hr * 8760.0 * cf;
    out.vom = vom_musd * 1e6 / annual_gj;
    return out;
}

double powerlaw_cost(double ref_cost, double ref_size, double size, double exponent) {
    if (ref_size <= 0.0 || size <= 0.0)
        raise(errc::non_positive_size, "powerlaw_cost: sizes must be positive");
    if (exponent <= 0.0 || exponent > 1.0)
        raise(errc::invariant_violation, "powerlaw_cost: exponent outside (0,1]");
    return ref_cost * std::pow(size / ref_size, exponent);
}

CompressionCost derive_compression_cost() {
    const double crf = 0.131;
    const double flow_t_per_hr = 29.9;  // fermentation CO2 at the scaled plant
    const double cf = 0.85;
    const double elec_kwh_per_t = 76.3;
    const double elec_price = 60.0;     // $/MWh

    CompressionCost out;
    out.tpc_coal_case = powerlaw_cost(86.7, 581.3, flow_t_per_hr, 0.61);
    out.tpc_gas_case = powerlaw_cost(59.7, 223.9, flow_t_per_hr, 0.41);
    const double annualized_musd = (out.tpc_coal_case + out.tpc_gas_case) / 2.0 * crf;
    const double annual_t = flow_t_per_hr * 8760.0 * cf;
    out.capex_per_t = annualized_musd * 1e6 / annual_t;
    out.opex_per_t = elec_kwh_per_t * elec_price / 1000.0;
    out.total_per_t = out.capex_per_t + out.opex_per_t;
    return out;
}

EthanolCcsCi derive_ethanol_ccs_ci(double capture_fraction) {
    const double corn_ethanol_ci = 50.0;   // kgCO2e/GJ, GWP-100
    const double eth_hhv_mj_per_kg = 29.7;
    const double eth_co2_per_kg = 1.91;    // kgCO2/kg ethanol

    EthanolCcsCi out;
    out.carbon_content = eth_co2_per_kg / eth_hhv_mj_per_kg * 1000.0;
    // fermentation stoichiometry: half the ethanol carbon leaves as CO2;
    // the published intermediate uses the rounded 64 kg/GJ figure
    out.capturable = std::round(out.carbon_content) / 2.0;
    out.net_ci = corn_ethanol_ci - out.capturable * capture_fraction;
    return out;
}

} // namespace fuelpath::derivations
