#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuelpath/errors.hpp"

namespace fuelpath {

struct Pathway; // dataset.hpp

enum class Instrument { v45, q45, z45, y45, b40, methane_fee, rfs, lcfs };

enum class Q45Variant { sequestration, utilization, dac_sequestration, dac_utilization };

enum class RfsCategory { none, d3, d5, d6 };

std::string to_string(Instrument i);
std::string to_string(RfsCategory c);

/// One 45V tier: [ci_lower, ci_upper) -> $/kg H2. The lowest tier has an
/// open lower end (negative CIs qualify).
struct V45Tier {
    double ci_lower; // -inf encoded as lowest<double>
    double ci_upper;
    double rate_usd_per_kg;
};

/// Rates, tiers and durations for every modeled instrument: the IRA
/// credits plus RFS / LCFS parameters.
struct PolicySuite {
    std::vector<V45Tier> v45_tiers; // sorted by ci_lower descending
    std::map<Q45Variant, double> q45_rates;
    double z45_saf_rate = 1.75;       // $/gal SAF
    double z45_other_rate = 1.0;      // $/gal other clean fuel
    double z45_ci_pivot = 50.0;       // kgCO2e/MMBtu_LHV
    double z45_saf_fraction = 0.82;
    double y45_rate = 26.0;           // $/MWh
    double methane_fee_usd_per_t = 1500.0;
    double methane_leak_g_per_mj = 0.29;
    double embedded_methane_fee_per_gj = 0.44;
    int dur_45q = 12;
    int dur_45v = 10;
    int dur_45y = 10;
    int dur_methane = 15;
    double rfs_equivalence = 1.64;    // RIN per gallon of SLF
    double lcfs_benchmark_2030 = 80.36; // kgCO2e/GJ_LHV
    double lcfs_benchmark_2022 = 89.37;
    double lcfs_gal_energy_gj_lhv = 0.126; // LCFS statute's gallon energy

    void check(int book_life_years) const;
    double z45_blend_rate() const {
        return z45_saf_rate * z45_saf_fraction + z45_other_rate * (1.0 - z45_saf_fraction);
    }
};

/// Scenario knobs for the fuel-credit sensitivity space.
struct FuelCreditScenario {
    int z45_duration_years = 0;
    double lcfs_price = 0.0;       // $/t CO2e
    double rin_d3 = 0.0;           // $/RIN
    double rin_d5 = 0.0;
    double rin_d6 = 0.0;
    double lcfs_benchmark = 80.36; // kgCO2e/GJ_LHV

    void check(int book_life_years) const;
    double rin_price(RfsCategory c) const {
        switch (c) {
        case RfsCategory::d3: return rin_d3;
        case RfsCategory::d5: return rin_d5;
        case RfsCategory::d6: return rin_d6;
        default: return 0.0;
        }
    }
};

struct ClaimViolation {
    std::string pathway;
    std::string message;
    errc code = errc::claim_violation;
};

namespace policy {

/// 45V tier lookup, $/kg H2, un-derated. >= 4 kg CO2e/kg is ineligible (0).
double credit_45v(const PolicySuite& p, double ci_kg_per_kg);

/// 45Z per gallon, un-derated: max(0,(pivot-ci)/pivot) * blended SAF rate.
double credit_45z_per_gal(const PolicySuite& p, double ci_kg_per_mmbtu_lhv,
                          double saf_fraction);

/// 45Q revenue for a mass of CO2, un-derated.
double credit_45q(const PolicySuite& p, Q45Variant variant, double mass_t);

/// Methane emissions fee per GJ of delivered gas: g/MJ * $/t * 1e-3.
double methane_fee_per_gj(double leak_rate_g_per_mj, double fee_usd_per_t);

struct NetPrice {
    double value;
    bool floored;
};

/// Electricity price net of the derated 45Y credit, floored at zero.
NetPrice net_input_price_45y(double gross_usd_per_mwh, double rate_usd_per_mwh,
                             double derating);

/// RFS revenue per gallon of SLF at a RIN price.
double rfs_credit_per_gal(double rin_price, double equivalence);

/// LCFS credit: (benchmark - ci) * 0.126 GJ_LHV/gal * price / 1000. Exactly
/// linear; may be negative (deficit) -- callers floor as they see fit.
double lcfs_credit_per_gal(double ci_kg_per_gj_lhv, double benchmark_kg_per_gj_lhv,
                           double price_usd_per_t, double gal_energy_gj_lhv = 0.126);

/// DAC CO2 purchase cost net of derated 45Q utilization credit, $/t.
double dac_co2_net_cost(double gross_usd_per_t, double rate_45q, double derating);

/// Checks facility-level credit exclusivity (at most one of 45V/45Q/45Z),
/// 45Z only on liquid-fuel output, and RFS only on biomass-direct SLF.
/// Returns violations rather than throwing.
std::vector<ClaimViolation> validate_claims(const Pathway& chain);

} // namespace policy
} // namespace fuelpath
