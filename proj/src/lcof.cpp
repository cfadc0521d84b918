#include "fuelpath/lcof.hpp"

#include <algorithm>
#include <cmath>

namespace fuelpath {

std::string to_string(CostLabel label) {
    switch (label) {
    case CostLabel::capital: return "capital";
    case CostLabel::fom: return "fom";
    case CostLabel::vom: return "vom";
    case CostLabel::feedstock: return "feedstock";
    case CostLabel::co2_transport_storage: return "co2_transport_storage";
    case CostLabel::coproduct_electricity: return "coproduct_electricity";
    case CostLabel::dac_co2_net: return "dac_co2_net";
    case CostLabel::credit_45v: return "credit_45v";
    case CostLabel::credit_45q: return "credit_45q";
    case CostLabel::credit_45z: return "credit_45z";
    case CostLabel::rfs: return "rfs";
    case CostLabel::lcfs: return "lcfs";
    }
    return "?";
}

namespace lcof {

namespace {

constexpr double kGjPerKwh = 0.0036;
constexpr double kHoursPerYear = 8760.0;

double annual_gj_per_kw(double capacity_factor) {
    return kHoursPerYear * capacity_factor * kGjPerKwh;
}

double feedstock_price_per_gj(const Dataset& ds, const Feedstock& f, double df_45y) {
    if (f.price_unit == "USD/GJ_HHV") return f.price;
    if (f.price_unit == "USD/MWh") {
        double price = f.price;
        if (f.eligible_45y)
            price = policy::net_input_price_45y(price, ds.policy.y45_rate, df_45y).value;
        return price / 3.6;
    }
    if (f.price_unit == "USD/gal") {
        // ethanol: gallons to GJ_HHV via density and heating value
        const auto& props = ds.constants.fuel_properties.at("ethanol");
        const double gj_per_gal =
            ds.constants.ethanol_kg_per_gal * props.hhv_gj_per_tonne / 1000.0;
        return f.price / gj_per_gal;
    }
    raise(errc::schema, "feedstock " + f.name + ": unsupported price unit " + f.price_unit);
}

} // namespace

UnitCost annualized_unit_cost(const TechnologySpec& tech, const FinancialParams& fin) {
    if (tech.capacity_factor <= 0.0)
        raise(errc::zero_capacity_factor,
              "technology " + tech.name + ": zero capacity factor");
    const double out_gj = annual_gj_per_kw(tech.capacity_factor);
    return {tech.capex * fin.crf / out_gj, tech.fom / out_gj, tech.vom};
}

H2Result lcof_h2(const Dataset& ds, const Pathway& p, const WhatIf& what_if) {
    if (p.product != "h2")
        raise(errc::not_hydrogen_pathway, p.id + " is not a hydrogen pathway");
    auto violations = policy::validate_claims(p);
    if (!violations.empty())
        raise(violations.front().code, p.id + ": " + violations.front().message);

    const TechnologySpec& t = ds.technology(p.technology);
    const Feedstock& f = ds.feedstock(t.feedstock);
    const FinancialParams& fin = ds.finance;
    const PolicySuite& pol = ds.policy;
    const double df_45v = finance::derating_factor(fin.wacc, pol.dur_45v, fin.book_life_years);
    const double df_45q = finance::derating_factor(fin.wacc, pol.dur_45q, fin.book_life_years);
    const double df_45y = finance::derating_factor(fin.wacc, pol.dur_45y, fin.book_life_years);
    const double per_kg = ds.constants.h2_hhv_gj_per_t / 1000.0; // GJ per kg

    const UnitCost unit = annualized_unit_cost(t, fin);
    const double feed = t.ifi * feedstock_price_per_gj(ds, f, df_45y);
    const double grid_price = ds.feedstock("grid_electricity").price; // $/MWh
    const double coproduct = t.coproduct_electricity * grid_price / 3.6;
    const double captured = t.ifi * f.carbon_content * t.capture_rate; // kg/GJ
    double seq = captured * ds.constants.co2_ts_cost() / 1000.0;

    H2Result res;
    res.captured_kg_per_gj = captured;
    res.ci_kg = emissions::h2_ci(ds, p);
    res.methane_fee_per_kg = f.embedded_methane_fee * t.ifi * per_kg;
    if (f.eligible_45y)
        res.elec_mwh_per_kg = t.ifi * per_kg / 3.6;

    if (p.claims(Instrument::v45))
        res.credit_45v_per_kg = policy::credit_45v(pol, res.ci_kg) * df_45v;
    if (p.claims(Instrument::q45))
        res.credit_45q_per_kg =
            policy::credit_45q(pol, Q45Variant::sequestration, captured / 1000.0) *
            df_45q * per_kg;
    res.selected = res.credit_45q_per_kg > res.credit_45v_per_kg ? Instrument::q45
                                                                 : Instrument::v45;

    double sale_revenue = 0.0;
    if (what_if.p6_co2_sale_price && captured > 0.0) {
        // sell the excess captured CO2 (about 95%) instead of storing it;
        // T&S stays with the producer under the gross-sale convention
        const double sold = 0.95 * captured;
        sale_revenue = sold * *what_if.p6_co2_sale_price / 1000.0;
    }

    LcofBreakdown bd;
    bd.pathway_id = p.id;
    bd.unit = "USD/kg";
    bd.items = {
        {CostLabel::capital, unit.capital * per_kg},
        {CostLabel::fom, unit.fom * per_kg},
        {CostLabel::vom, unit.vom * per_kg},
        {CostLabel::feedstock, feed * per_kg},
        {CostLabel::coproduct_electricity, (coproduct - sale_revenue) * per_kg},
        {CostLabel::co2_transport_storage, seq * per_kg},
    };
    const bool dual = what_if.p6_dual_credit && p.claims(Instrument::v45) &&
                      p.claims(Instrument::q45);
    if (dual) {
        bd.items.push_back({CostLabel::credit_45v, -res.credit_45v_per_kg});
        bd.items.push_back({CostLabel::credit_45q, -res.credit_45q_per_kg});
    } else if (res.selected == Instrument::q45 && res.credit_45q_per_kg > 0.0) {
        bd.items.push_back({CostLabel::credit_45q, -res.credit_45q_per_kg});
    } else if (res.credit_45v_per_kg > 0.0) {
        bd.items.push_back({CostLabel::credit_45v, -res.credit_45v_per_kg});
    }
    res.breakdown = std::move(bd);
    return res;
}

SlfResult lcof_slf(const Dataset& ds, const Pathway& p,
                   const FuelCreditScenario& scenario, const WhatIf& what_if) {
    if (p.product != "slf")
        raise(errc::not_slf_pathway, p.id + " is not an SLF pathway");
    auto violations = policy::validate_claims(p);
    if (!violations.empty())
        raise(violations.front().code, p.id + ": " + violations.front().message);
    scenario.check(ds.finance.book_life_years);

    const TechnologySpec& t = ds.technology(p.technology);
    const FinancialParams& fin = ds.finance;
    const PolicySuite& pol = ds.policy;
    const double df_45q = finance::derating_factor(fin.wacc, pol.dur_45q, fin.book_life_years);
    const double per_gal = ds.constants.slf_gal_gj_hhv(); // GJ_HHV per gallon

    const UnitCost unit = annualized_unit_cost(t, fin);

    double feed = 0.0;
    double dac_net = 0.0;
    double co2_handling = 0.0;
    double seq = 0.0;
    double q45_revenue = 0.0; // upstream fermentation CCS
    bool upstream_claims_q45 = false;

    if (!p.h2_source.empty()) {
        const Pathway& up = ds.pathway(p.h2_source);
        const H2Result h2 = lcof_h2(ds, up, what_if);
        upstream_claims_q45 = h2.selected == Instrument::q45 && h2.credit_45q_per_kg > 0.0;
        // hydrogen feed priced at the upstream facility's net LCOF
        feed = t.ifi * h2.breakdown.net() / (ds.constants.h2_hhv_gj_per_t / 1000.0);
        if (p.co2_source == Co2Source::dac) {
            const double net = policy::dac_co2_net_cost(
                ds.constants.dac_co2_price,
                pol.q45_rates.at(Q45Variant::dac_utilization), df_45q);
            dac_net = t.co2_input / 1000.0 * net;
        } else {
            co2_handling = t.co2_input / 1000.0 * p.co2_handling_cost;
        }
    } else {
        const Feedstock& f = ds.feedstock(t.feedstock);
        feed = t.ifi * feedstock_price_per_gj(ds, f, 0.0);
        const double available = t.ifi * f.carbon_content -
                                 ds.constants.fuel_properties.at("slf").carbon_kg_per_gj_hhv;
        const double captured = available * t.capture_rate; // kg/GJ
        seq = captured * ds.constants.co2_ts_cost() / 1000.0;
        if (p.upstream_ccs) {
            const double mass = p.upstream_ccs->co2_kg_per_gj_feed * t.ifi; // kg/GJ
            co2_handling = mass / 1000.0 *
                           (p.upstream_ccs->compression_cost + ds.constants.co2_ts_cost());
            if (p.claims(Instrument::q45))
                q45_revenue = policy::credit_45q(pol, Q45Variant::sequestration,
                                                 mass / 1000.0) * df_45q;
        }
    }

    const double coproduct = t.coproduct_electricity *
                             ds.feedstock("grid_electricity").price / 3.6;

    SlfResult res;
    res.ci_gj_hhv = emissions::slf_ci_per_gj(ds, p);
    res.ci_mmbtu_lhv = emissions::convert_slf_ci(ds, res.ci_gj_hhv, CiBasis::per_gj_hhv,
                                                 CiBasis::per_mmbtu_lhv);
    res.z45_ci_mmbtu_lhv = emissions::slf_ci_45z(ds, p, upstream_claims_q45);
    res.z45_credit_full = p.claims(Instrument::z45)
                              ? policy::credit_45z_per_gal(pol, res.z45_ci_mmbtu_lhv,
                                                           pol.z45_saf_fraction)
                              : 0.0;

    double z45 = 0.0;
    if (scenario.z45_duration_years > 0)
        z45 = res.z45_credit_full *
              finance::derating_factor(fin.wacc, scenario.z45_duration_years,
                                       fin.book_life_years);

    double rfs = 0.0;
    if (p.rfs_category != RfsCategory::none)
        rfs = policy::rfs_credit_per_gal(scenario.rin_price(p.rfs_category),
                                         pol.rfs_equivalence);

    double lcfs = 0.0;
    if (scenario.lcfs_price > 0.0) {
        // CI floored at zero: the negative tail is already monetized via 45Z
        const double ci_lhv = std::max(
            0.0, emissions::convert_slf_ci(ds, res.ci_gj_hhv, CiBasis::per_gj_hhv,
                                           CiBasis::per_gj_lhv));
        lcfs = policy::lcfs_credit_per_gal(ci_lhv, scenario.lcfs_benchmark,
                                           scenario.lcfs_price,
                                           pol.lcfs_gal_energy_gj_lhv);
        lcfs = std::max(0.0, lcfs); // never charge a deficit to a pathway
    }

    LcofBreakdown bd;
    bd.pathway_id = p.id;
    bd.unit = "USD/gal";
    bd.items = {
        {CostLabel::capital, unit.capital * per_gal},
        {CostLabel::fom, unit.fom * per_gal},
        {CostLabel::vom, unit.vom * per_gal},
        {CostLabel::feedstock, feed * per_gal},
        {CostLabel::coproduct_electricity, coproduct * per_gal},
        {CostLabel::dac_co2_net, dac_net * per_gal},
        {CostLabel::co2_transport_storage, (seq + co2_handling) * per_gal},
    };
    if (q45_revenue > 0.0)
        bd.items.push_back({CostLabel::credit_45q, -q45_revenue * per_gal});
    if (z45 > 0.0) bd.items.push_back({CostLabel::credit_45z, -z45});
    if (rfs > 0.0) bd.items.push_back({CostLabel::rfs, -rfs});
    if (lcfs > 0.0) bd.items.push_back({CostLabel::lcfs, -lcfs});
    res.breakdown = std::move(bd);
    return res;
}

MitigationResult lscm(const Dataset& ds, const Pathway& p, const WhatIf& what_if) {
    const CIBenchmarks& bm = ds.constants.benchmarks;
    const FinancialParams& fin = ds.finance;
    const PolicySuite& pol = ds.policy;
    const double df_45v = finance::derating_factor(fin.wacc, pol.dur_45v, fin.book_life_years);
    const double df_45q = finance::derating_factor(fin.wacc, pol.dur_45q, fin.book_life_years);
    const double df_45y = finance::derating_factor(fin.wacc, pol.dur_45y, fin.book_life_years);

    MitigationResult out;
    out.pathway_id = p.id;

    // subsidy numerator for a hydrogen facility, $/kg: credits positive, the
    // methane fee negative. `derated` selects levelized vs statutory rates.
    auto h2_subsidy = [&](const Pathway& hp, bool dual, bool derated) {
        const H2Result r = lcof_h2(ds, hp, what_if);
        double v45 = r.credit_45v_per_kg, q45 = r.credit_45q_per_kg;
        if (!derated) {
            v45 = v45 > 0.0 ? v45 / df_45v : 0.0;
            q45 = q45 > 0.0 ? q45 / df_45q : 0.0;
        }
        double credits = dual ? v45 + q45 : std::max(v45, q45);
        credits += r.elec_mwh_per_kg * pol.y45_rate * (derated ? df_45y : 1.0);
        credits -= r.methane_fee_per_kg;
        return credits;
    };

    if (p.product == "h2") {
        const bool dual = what_if.p6_dual_credit && p.claims(Instrument::v45) &&
                          p.claims(Instrument::q45);
        const double ci = emissions::h2_ci(ds, p);
        out.ci_delta = bm.h2_fossil - ci;
        if (out.ci_delta <= 0.0)
            raise(errc::no_mitigation,
                  p.id + ": CI does not improve on the fossil benchmark");
        out.total_subsidy = h2_subsidy(p, dual, true);
        out.lscm = out.total_subsidy / (out.ci_delta / 1000.0);
        out.lscm_undiscounted = h2_subsidy(p, dual, false) / (out.ci_delta / 1000.0);
        return out;
    }

    const TechnologySpec& t = ds.technology(p.technology);
    const double per_gal = ds.constants.slf_gal_gj_hhv();
    const double kg_h2_per_gal = t.feedstock == "hydrogen"
                                     ? t.ifi / (ds.constants.h2_hhv_gj_per_t / 1000.0) * per_gal
                                     : 0.0;

    double subsidy = 0.0;
    double subsidy_undisc = 0.0;
    bool upstream_claims_q45 = false;
    if (!p.h2_source.empty()) {
        const Pathway& up = ds.pathway(p.h2_source);
        const H2Result r = lcof_h2(ds, up, what_if);
        upstream_claims_q45 = r.selected == Instrument::q45 && r.credit_45q_per_kg > 0.0;
        subsidy += h2_subsidy(up, false, true) * kg_h2_per_gal;
        subsidy_undisc += h2_subsidy(up, false, false) * kg_h2_per_gal;
        if (p.co2_source == Co2Source::dac) {
            const double rate = pol.q45_rates.at(Q45Variant::dac_utilization);
            subsidy += t.co2_input / 1000.0 * rate * df_45q * per_gal;
            subsidy_undisc += t.co2_input / 1000.0 * rate * per_gal;
        }
    }
    if (p.upstream_ccs && p.claims(Instrument::q45)) {
        const double mass = p.upstream_ccs->co2_kg_per_gj_feed * t.ifi / 1000.0; // t/GJ
        const double rate = pol.q45_rates.at(Q45Variant::sequestration);
        subsidy += mass * rate * df_45q * per_gal;
        subsidy_undisc += mass * rate * per_gal;
    }
    if (p.claims(Instrument::z45)) {
        // mitigation-subsidy convention: 45Z over the full asset life (DF = 1)
        const double z = policy::credit_45z_per_gal(
            pol, emissions::slf_ci_45z(ds, p, upstream_claims_q45), pol.z45_saf_fraction);
        subsidy += z;
        subsidy_undisc += z;
    }

    const double ci_gal = emissions::convert_slf_ci(ds, emissions::slf_ci_per_gj(ds, p),
                                                    CiBasis::per_gj_hhv, CiBasis::per_gal_slf);
    out.ci_delta = bm.slf_fossil_per_gal - ci_gal;
    if (out.ci_delta <= 0.0)
        raise(errc::no_mitigation, p.id + ": CI does not improve on the fossil benchmark");
    if (subsidy <= 0.0)
        raise(errc::no_mitigation, p.id + ": no credits claimed");
    out.total_subsidy = subsidy;
    out.lscm = subsidy / (out.ci_delta / 1000.0);
    out.lscm_undiscounted = subsidy_undisc / (out.ci_delta / 1000.0);
    return out;
}

} // namespace lcof
} // namespace fuelpath
