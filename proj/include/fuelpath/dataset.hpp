#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuelpath/finance.hpp"
#include "fuelpath/policy.hpp"
#include "fuelpath/quantity.hpp"

namespace fuelpath {

struct Feedstock {
    std::string name;
    double price = 0.0;            // native unit below
    std::string price_unit;        // "USD/GJ_HHV" | "USD/MWh" | "USD/gal"
    double upstream_ci = 0.0;      // kgCO2e/GJ_HHV
    double carbon_content = 0.0;   // kgCO2/GJ_HHV
    bool biogenic = false;
    bool eligible_45y = false;     // renewable electricity
    double embedded_methane_fee = 0.0; // $/GJ, natural gas only
};

/// Per-technology performance and cost record.
struct TechnologySpec {
    std::string name;
    std::string product;               // "h2" | "slf"
    std::string feedstock;             // feedstock name or "hydrogen"
    double ifi = 1.0;                  // GJ_in/GJ_out HHV
    double coproduct_electricity = 0.0;// GJ_e/GJ_out, + = input, - = export
    double capture_rate = 0.0;         // of carbon available for capture
    double capex = 0.0;                // $/kW output capacity
    double fom = 0.0;                  // $/kW-yr
    double vom = 0.0;                  // $/GJ output
    double capacity_factor = 0.85;
    double co2_input = 0.0;            // kgCO2/GJ_HHV product (RWGS-FTS)
};

enum class Co2Source { none, dac, biogenic_internal, ethanol_fermentation };

struct UpstreamCcs {
    double co2_kg_per_gj_feed = 0.0;   // captured at the feed plant, per GJ feed
    double compression_cost = 0.0;     // $/t
};

/// One of the fifteen shipped production chains. Credits are grouped:
/// instruments inside one group are alternatives ("45Q or 45V"), of which
/// the engine claims the more remunerative; separate groups are claimed
/// together and subject to the facility exclusivity rule.
struct Pathway {
    std::string id;   // "P1".."P15"
    std::string name;
    std::string product;              // "h2" | "slf"
    std::string technology;
    std::vector<std::vector<Instrument>> credit_groups;
    std::string h2_source;            // upstream H2 pathway id (RWGS chains)
    Co2Source co2_source = Co2Source::none;
    double co2_handling_cost = 0.0;   // $/t on CO2 intake (biogenic chains)
    RfsCategory rfs_category = RfsCategory::none;
    std::optional<UpstreamCcs> upstream_ccs; // fermentation CCS (P15)

    bool claims(Instrument i) const {
        for (const auto& group : credit_groups)
            for (auto c : group)
                if (c == i) return true;
        return false;
    }
};

struct CIBenchmarks {
    double h2_fossil = 11.0;            // kgCO2e/kg H2
    double slf_fossil_per_gal = 10.7;   // kgCO2e/gal
    double slf_fossil_per_mmbtu = 85.0; // kgCO2e/MMBtu_LHV
};

struct SccRange {
    double low = 0.0;
    double high = 0.0;
};

struct ModelConstants {
    double h2_hhv_gj_per_t = 142.0;
    double slf_gal_lhv_gj = 0.126;     // GJ_LHV/gal, used verbatim by LCFS
    double slf_gal_lhv_mmbtu = 0.126;  // MMBtu_LHV/gal (cost-basis reading)
    double ethanol_gal_lhv_mmbtu = 0.077;
    double gj_per_mmbtu = 1.055;
    double slf_gal_per_mmbtu = 7.9;
    double ethanol_kg_per_gal = 2.987;
    double co2_transport = 19.5;       // $/t
    double co2_storage = 8.5;          // $/t
    double dac_co2_price = 280.0;      // $/t gross
    std::map<std::string, FuelProperties> fuel_properties;
    CIBenchmarks benchmarks;
    double fossil_jet_price = 2.2;     // $/gal median
    double jet_price_p10 = 1.4;
    double jet_price_p90 = 3.72;
    SccRange scc_2030{140.0, 380.0};
    SccRange scc_2040{170.0, 430.0};

    double kwh_per_gj() const { return 1000.0 / 3.6; }
    double co2_ts_cost() const { return co2_transport + co2_storage; }
    /// GJ_HHV content of one SLF gallon on the MMBtu_LHV reading.
    double slf_gal_gj_hhv() const;
};

/// Fully cross-linked, immutable-after-load model dataset.
struct Dataset {
    std::vector<Feedstock> feedstocks;
    std::vector<TechnologySpec> technologies;
    std::vector<Pathway> pathways;
    PolicySuite policy;
    FinancialParams finance;
    ModelConstants constants;

    const Feedstock& feedstock(const std::string& name) const;
    const TechnologySpec& technology(const std::string& name) const;
    const Pathway& pathway(const std::string& id) const;
    bool has_pathway(const std::string& id) const;
};

/// Parse + validate a dataset document. Throws Error with code schema /
/// invariant_violation / dangling_reference; schema errors name the field.
Dataset load_dataset(const std::string& json_text);
Dataset load_dataset_file(const std::string& path);

/// The dataset shipped with the library (same content as data/*.json).
const std::string& builtin_dataset_json();

} // namespace fuelpath
