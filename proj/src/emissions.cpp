#include "fuelpath/emissions.hpp"

#include <cmath>

#include "fuelpath/derivations.hpp"

namespace fuelpath::emissions {

double h2_ci_per_gj(const Dataset& ds, const Pathway& p) {
    if (p.product != "h2")
        raise(errc::not_hydrogen_pathway, p.id + " is not a hydrogen pathway");
    const TechnologySpec& t = ds.technology(p.technology);
    const Feedstock& f = ds.feedstock(t.feedstock);
    const double feed_carbon = t.ifi * f.carbon_content;
    const double captured = feed_carbon * t.capture_rate;
    double ci = t.ifi * f.upstream_ci;
    if (f.biogenic)
        ci -= captured;                  // stored biogenic carbon counts negative
    else
        ci += feed_carbon - captured;    // vented fossil carbon counts positive
    return ci;
}

double h2_ci(const Dataset& ds, const Pathway& p) {
    return h2_ci_per_gj(ds, p) * ds.constants.h2_hhv_gj_per_t / 1000.0;
}

CarbonLedger carbon_ledger(const Dataset& ds, const Pathway& p) {
    const TechnologySpec& t = ds.technology(p.technology);
    CarbonLedger led;

    if (p.product == "h2") {
        const Feedstock& f = ds.feedstock(t.feedstock);
        led.feed_carbon = t.ifi * f.carbon_content;
        led.stored = led.feed_carbon * t.capture_rate;
        const double vented = led.feed_carbon - led.stored;
        (f.biogenic ? led.vented_biogenic : led.vented_fossil) = vented;
        led.upstream_emissions = t.ifi * f.upstream_ci;
        return led;
    }

    led.product_carbon = ds.constants.fuel_properties.at("slf").carbon_kg_per_gj_hhv;

    if (!p.h2_source.empty()) {
        // RWGS-FTS chain: H2 plant flows scaled by the GJ_H2/GJ_SLF feed rate.
        const Pathway& up = ds.pathway(p.h2_source);
        const TechnologySpec& ut = ds.technology(up.technology);
        const Feedstock& uf = ds.feedstock(ut.feedstock);
        const double scale = t.ifi;
        led.feed_carbon = scale * ut.ifi * uf.carbon_content;
        led.upstream_emissions = scale * ut.ifi * uf.upstream_ci;
        const double captured_at_h2 = led.feed_carbon * ut.capture_rate;
        double vented = led.feed_carbon - captured_at_h2;
        double stored = captured_at_h2;
        if (p.co2_source == Co2Source::dac) {
            led.external_co2 = t.co2_input;  // atmospheric carbon into the fuel
        } else {
            // the fuel carbon is drawn from the facility's own CO2 stream
            if (stored >= t.co2_input)
                stored -= t.co2_input;
            else
                vented -= t.co2_input;
        }
        led.stored = stored;
        (uf.biogenic ? led.vented_biogenic : led.vented_fossil) = vented;
        return led;
    }

    const Feedstock& f = ds.feedstock(t.feedstock);
    led.feed_carbon = t.ifi * f.carbon_content;
    led.upstream_emissions = t.ifi * f.upstream_ci;
    const double available = led.feed_carbon - led.product_carbon;
    led.stored = available * t.capture_rate;
    (f.biogenic ? led.vented_biogenic : led.vented_fossil) = available - led.stored;
    if (p.upstream_ccs) {
        // fermentation CO2 captured at the feed plant; its CI effect already
        // sits in the feedstock's upstream CI, the ledger tracks the mass
        const double m = p.upstream_ccs->co2_kg_per_gj_feed * t.ifi;
        led.external_co2 += m;
        led.stored += m;
    }
    return led;
}

double slf_ci_per_gj(const Dataset& ds, const Pathway& p) {
    if (p.product != "slf")
        raise(errc::not_slf_pathway, p.id + " is not an SLF pathway");
    const CarbonLedger led = carbon_ledger(ds, p);

    // attributional accounting: upstream supply-chain CO2e plus vented fossil
    // carbon, minus stored biogenic carbon; biogenic venting and combustion
    // of biogenic or atmospheric product carbon are neutral
    double ci = led.upstream_emissions + led.vented_fossil;
    bool biogenic_feed;
    if (!p.h2_source.empty()) {
        const Pathway& up = ds.pathway(p.h2_source);
        biogenic_feed = ds.feedstock(ds.technology(up.technology).feedstock).biogenic;
    } else {
        biogenic_feed = ds.feedstock(ds.technology(p.technology).feedstock).biogenic;
    }
    if (biogenic_feed)
        ci -= led.stored - led.external_co2;
    return ci;
}

double convert_slf_ci(const Dataset& ds, double value, CiBasis from, CiBasis to) {
    const ModelConstants& c = ds.constants;
    const double ratio = c.fuel_properties.at("slf").hhv_lhv_ratio;
    double per_gj_hhv = value;
    switch (from) {
    case CiBasis::per_gj_hhv: break;
    case CiBasis::per_gj_lhv: per_gj_hhv = value / ratio; break;
    case CiBasis::per_mmbtu_lhv: per_gj_hhv = value / (ratio * c.gj_per_mmbtu); break;
    case CiBasis::per_gal_slf: per_gj_hhv = value / c.slf_gal_gj_hhv(); break;
    default:
        raise(errc::invariant_violation, "convert_slf_ci: unsupported source basis");
    }
    switch (to) {
    case CiBasis::per_gj_hhv: return per_gj_hhv;
    case CiBasis::per_gj_lhv: return per_gj_hhv * ratio;
    case CiBasis::per_mmbtu_lhv: return per_gj_hhv * ratio * c.gj_per_mmbtu;
    case CiBasis::per_gal_slf: return per_gj_hhv * c.slf_gal_gj_hhv();
    default:
        raise(errc::invariant_violation, "convert_slf_ci: unsupported target basis");
    }
}

double slf_ci(const Dataset& ds, const Pathway& p) {
    return convert_slf_ci(ds, slf_ci_per_gj(ds, p), CiBasis::per_gj_hhv,
                          CiBasis::per_mmbtu_lhv);
}

double slf_ci_45z(const Dataset& ds, const Pathway& p, bool upstream_claims_q45) {
    if (p.product != "slf")
        raise(errc::not_slf_pathway, p.id + " is not an SLF pathway");
    double per_gj = slf_ci_per_gj(ds, p);
    const TechnologySpec& t = ds.technology(p.technology);

    // CO2 already monetized under a 45Q claim in the chain is added back:
    // the 45Z emissions rate may not credit the same tonne twice.
    if (p.co2_source == Co2Source::dac)
        per_gj += t.co2_input;                 // DAC utilization claims 45Q
    if (upstream_claims_q45 && !p.h2_source.empty()) {
        const Pathway& up = ds.pathway(p.h2_source);
        const TechnologySpec& ut = ds.technology(up.technology);
        const Feedstock& uf = ds.feedstock(ut.feedstock);
        per_gj += t.ifi * ut.ifi * uf.carbon_content * ut.capture_rate;
    }
    if (p.upstream_ccs)
        per_gj += p.upstream_ccs->co2_kg_per_gj_feed * t.ifi;

    return convert_slf_ci(ds, per_gj, CiBasis::per_gj_hhv, CiBasis::per_mmbtu_lhv);
}

double ethanol_ccs_ci(double capture_fraction) {
    return derivations::derive_ethanol_ccs_ci(capture_fraction).net_ci;
}

AppendixCi appendix_slf_ci(double eta, bool with_lhv_factor) {
    if (eta <= 0.0 || eta > 1.0)
        raise(errc::invariant_violation, "appendix_slf_ci: eta outside (0,1]");
    AppendixCi out;
    const double biomass_mmbtu = 18.8;
    out.energy_slf_mmbtu = biomass_mmbtu * eta * (with_lhv_factor ? 1.05 : 1.0);
    const double biomass_carbon_kg = 1000.0 * 0.475 * 44.0 / 12.0;
    out.captured_kg = (biomass_carbon_kg - out.energy_slf_mmbtu * 71.0) * 0.87;
    out.ci = -out.captured_kg / out.energy_slf_mmbtu;
    return out;
}

} // namespace fuelpath::emissions
