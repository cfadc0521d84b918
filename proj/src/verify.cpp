#include "fuelpath/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "fuelpath/analysis.hpp"
#include "fuelpath/derivations.hpp"
#include "fuelpath/emissions.hpp"
#include "fuelpath/lcof.hpp"
#include "fuelpath/reports.hpp"

namespace fuelpath::verify {

namespace {

struct Builder {
    VerifyReport report;

    void near(int criterion, const std::string& name, double value, double expected,
              double tol) {
        std::ostringstream exp;
        exp << expected << " +/- " << tol;
        report.checks.push_back(
            {criterion, name, value, exp.str(), std::abs(value - expected) <= tol});
    }
    void in_range(int criterion, const std::string& name, double value, double lo,
                  double hi) {
        std::ostringstream exp;
        exp << "[" << lo << ", " << hi << "]";
        report.checks.push_back({criterion, name, value, exp.str(),
                                 value >= lo && value <= hi});
    }
    void below(int criterion, const std::string& name, double value, double bound) {
        std::ostringstream exp;
        exp << "< " << bound;
        report.checks.push_back({criterion, name, value, exp.str(), value < bound});
    }
    void above(int criterion, const std::string& name, double value, double bound) {
        std::ostringstream exp;
        exp << "> " << bound;
        report.checks.push_back({criterion, name, value, exp.str(), value > bound});
    }
    void equals(int criterion, const std::string& name, double value, double expected) {
        std::ostringstream exp;
        exp << "== " << expected;
        report.checks.push_back(
            {criterion, name, value, exp.str(), value == expected});
    }
    void truth(int criterion, const std::string& name, bool ok) {
        report.checks.push_back({criterion, name, ok ? 1.0 : 0.0, "true", ok});
    }
};

double h2_net(const Dataset& ds, const std::string& id, const WhatIf& w = {}) {
    return lcof::lcof_h2(ds, ds.pathway(id), w).breakdown.net();
}

double slf_net(const Dataset& ds, const std::string& id,
               const FuelCreditScenario& sc = {}) {
    return lcof::lcof_slf(ds, ds.pathway(id), sc).breakdown.net();
}

Dataset without_ira_credits(const Dataset& ds) {
    Dataset zeroed = ds;
    for (auto& t : zeroed.policy.v45_tiers) t.rate_usd_per_kg = 0.0;
    for (auto& [k, v] : zeroed.policy.q45_rates) v = 0.0;
    zeroed.policy.y45_rate = 0.0;
    return zeroed;
}

void criterion_1(Builder& b, const Dataset& ds) {
    const double r = ds.finance.wacc;
    const int n = ds.finance.book_life_years;
    b.near(1, "derating factor DF(0.1,10,15)", finance::derating_factor(r, 10, n), 0.808,
           0.005);
    b.near(1, "derating factor DF(0.1,12,15)", finance::derating_factor(r, 12, n), 0.896,
           0.005);
    // brute-force annuity-sum oracle, independent of the closed forms
    auto annuity_sum = [&](int m) {
        double s = 0.0, d = 1.0;
        for (int t = 1; t <= m; ++t) {
            d /= 1.0 + r;
            s += d;
        }
        return s;
    };
    b.near(1, "DF(10) vs brute-force annuity ratio",
           finance::derating_factor(r, 10, n), annuity_sum(10) / annuity_sum(n), 1e-10);
    b.near(1, "crf x annuity == 1", finance::crf(r, n) * annuity_sum(n), 1.0, 1e-10);
}

void criterion_2(Builder& b, const Dataset& ds) {
    const std::pair<const char*, double> golden[] = {
        {"P1", 1.29}, {"P2", 1.24}, {"P3", 1.16},
        {"P4", 0.31}, {"P5", 3.09}, {"P6", 2.22},
    };
    for (const auto& [id, expected] : golden)
        b.near(2, std::string("H2 LCOF ") + id, h2_net(ds, id), expected, 0.07);
    WhatIf dual;
    dual.p6_dual_credit = true;
    b.near(2, "H2 LCOF P6 dual-credit what-if", h2_net(ds, "P6", dual), 0.84, 0.15);
}

void criterion_3(Builder& b, const Dataset& ds) {
    auto ci = [&](const char* id) { return emissions::h2_ci(ds, ds.pathway(id)); };
    b.near(3, "H2 CI P2", ci("P2"), 3.3, 0.2);
    b.near(3, "H2 CI P3", ci("P3"), 2.9, 0.2);
    b.near(3, "H2 CI P5", ci("P5"), 1.3, 0.1);
    b.near(3, "H2 CI P1", ci("P1"), 11.0, 0.3);
    double worst = 0.0;
    for (const auto& p : ds.pathways) {
        const CarbonLedger led = emissions::carbon_ledger(ds, p);
        const double scale = std::max(1.0, std::abs(led.sources()));
        worst = std::max(worst, std::abs(led.sources() - led.sinks()) / scale);
    }
    b.below(3, "carbon-ledger imbalance, worst pathway (relative)", worst, 1e-9);
}

void criterion_4(Builder& b, const Dataset& ds) {
    b.near(4, "SLF LCOF P9 baseline", slf_net(ds, "P9"), 2.9, 0.15);
    b.near(4, "SLF LCOF P7 baseline", slf_net(ds, "P7"), 4.3, 0.2);
    b.near(4, "SLF LCOF P8 baseline", slf_net(ds, "P8"), 4.2, 0.2);
    b.near(4, "SLF LCOF P14 baseline", slf_net(ds, "P14"), 3.8, 0.2);
    b.near(4, "SLF LCOF P15 baseline", slf_net(ds, "P15"), 3.6, 0.2);
    for (const char* id : {"P10", "P11", "P12", "P13"})
        b.in_range(4, std::string("SLF LCOF ") + id + " baseline", slf_net(ds, id), 4.2,
                   6.0);
}

void criterion_5(Builder& b, const Dataset& ds) {
    std::vector<int> durations;
    for (int m = 0; m <= ds.finance.book_life_years; ++m) durations.push_back(m);
    const double band_top = ds.constants.jet_price_p90;
    b.equals(5, "min 45Z duration for P11 to enter the jet band",
             analysis::min_duration_to_reach(ds, "P11", band_top, durations), 2.0);
    b.equals(5, "min 45Z duration for P13 to enter the jet band",
             analysis::min_duration_to_reach(ds, "P13", band_top, durations), 5.0);
}

void criterion_6(Builder& b, const Dataset& ds) {
    std::vector<int> durations;
    for (int m = 0; m <= ds.finance.book_life_years; ++m) durations.push_back(m);
    std::vector<double> lcfs;
    for (int L = 0; L <= 200; L += 5) lcfs.push_back(L);
    const double fossil = ds.constants.fossil_jet_price;

    auto winner_at = [](const FrontierGrid& g, int m, double L) -> std::string {
        for (const auto& c : g.cells)
            if (c.z45_years == m && c.lcfs_price == L) return c.winner;
        return "?";
    };

    std::set<std::string> winners;
    FrontierGrid panel1, panel4;
    for (const auto& rins : analysis::shipped_rin_scenarios()) {
        auto grid = analysis::competitiveness_frontier(ds, rins, durations, lcfs, fossil);
        for (const auto& c : grid.cells) winners.insert(c.winner);
        if (rins.d5 == 0.75 && rins.d3 == 1.25) panel1 = grid;
        if (rins.d5 == 1.5 && rins.d3 == 3.0) panel4 = grid;
    }

    bool fossil_region = true;
    for (int m : {0, 1})
        for (int L = 0; L < 25; L += 5)
            fossil_region &= winner_at(panel1, m, L) == "FOSSIL";
    b.truth(6, "panel (d5=0.75,d3=1.25): FOSSIL wins lcfs<25, dur<2", fossil_region);

    bool p15_region = true;
    for (int m : {0, 1})
        for (int L = 25; L <= 75; L += 5)
            p15_region &= winner_at(panel1, m, L) == "P15";
    b.truth(6, "panel (d5=0.75,d3=1.25): P15 wins lcfs 25..75, dur<2", p15_region);

    b.truth(6, "panel (d5=0.75,d3=1.25): P11 wins the high-subsidy corner",
            winner_at(panel1, 15, 200) == "P11");
    b.truth(6, "panel (d5=1.5,d3=3): P12 wins the low-subsidy corner",
            winner_at(panel4, 0, 0) == "P12");
    bool p13_region = true;
    for (int m = 10; m <= 15; ++m)
        for (int L = 150; L <= 200; L += 5)
            p13_region &= winner_at(panel4, m, L) == "P13";
    b.truth(6, "panel (d5=1.5,d3=3): P13 dominates the high-subsidy region", p13_region);

    const std::set<std::string> allowed = {"FOSSIL", "P11", "P12", "P13", "P15"};
    bool subset = true;
    for (const auto& w : winners) subset &= allowed.count(w) > 0;
    b.truth(6, "winner set over four panels within {FOSSIL,P11,P12,P13,P15}", subset);
}

void criterion_7(Builder& b, const Dataset& ds) {
    const auto fit = analysis::fit_subsidy_line(analysis::reforming_subsidy_points(ds));
    b.near(7, "reforming subsidy fit slope ($/t)", fit.slope_usd_per_t, 76.0, 5.0);
    const auto p4 = lcof::lcof_h2(ds, ds.pathway("P4"));
    const double delta = emissions::h2_ci(ds, ds.pathway("P1")) -
                         emissions::h2_ci(ds, ds.pathway("P4"));
    const double p4_total =
        std::max(p4.credit_45v_per_kg, p4.credit_45q_per_kg) / delta * 1000.0;
    b.near(7, "P4 total levelized subsidy ($/t)", p4_total, 217.0, 10.0);
    b.near(7, "P4 technology bonus over the fit ($/t)", p4_total - fit.slope_usd_per_t,
           141.0, 12.0);
}

void criterion_8(Builder& b, const Dataset& ds) {
    auto lscm_of = [&](const char* id, const WhatIf& w = {}) {
        return lcof::lscm(ds, ds.pathway(id), w).lscm;
    };
    const double scc30_low = ds.constants.scc_2030.low;
    for (const char* id : {"P2", "P3", "P5", "P6"})
        b.below(8, std::string("LSCM ") + id + " below 2030 SCC floor", lscm_of(id),
                scc30_low);
    b.in_range(8, "LSCM P4 within the 2030 SCC range", lscm_of("P4"),
               ds.constants.scc_2030.low, ds.constants.scc_2030.high);
    b.above(8, "LSCM P9 above the 2040 SCC ceiling", lscm_of("P9"),
            ds.constants.scc_2040.high);
    WhatIf dual;
    dual.p6_dual_credit = true;
    const double p6_dual = lscm_of("P6", dual);
    b.near(8, "LSCM P6 dual-credit what-if", p6_dual, 130.0, 15.0);
    b.below(8, "LSCM P6 dual-credit below 2030 SCC floor", p6_dual, scc30_low);
}

void criterion_9(Builder& b, const Dataset&) {
    const auto cases = analysis::efficiency_incentive_analysis({0.5, 0.4, 0.3, 0.2}, 0.095);
    double lo = cases.front().net_value(), hi = lo;
    for (const auto& c : cases) {
        lo = std::min(lo, c.net_value());
        hi = std::max(hi, c.net_value());
    }
    b.below(9, "net-value spread across efficiencies (n=9.5%)", hi - lo,
            0.05 * cases.front().net_value());
    b.equals(9, "biomass cost per tonne", cases.front().biomass, 121.0);
    b.equals(9, "fixed cost at eta=0.5", cases.front().fixed, 218.0);
    const auto req = analysis::required_fixed_reduction_at_eta02();
    b.in_range(9, "required fixed-cost reduction at eta=0.2", req.total_reduction, 0.30,
               1.0);
}

void criterion_10(Builder& b, const Dataset& ds) {
    namespace dv = derivations;
    b.near(10, "integrated biomass-FTS IFI", dv::derive_integrated_ifi(1.78, 1.47), 2.02,
           0.01);
    const double factor = dv::integrated_mole_balance_factor();
    b.near(10, "integrated BioFTS CAPEX",
           dv::derive_integrated_cost(2482, 1004, 1.47, factor), 3826.0, 5.0);
    b.near(10, "integrated BioFTS-CCS CAPEX",
           dv::derive_integrated_cost(2587, 1004, 1.47, factor), 3944.0, 5.0);
    const auto etoh = dv::derive_ethanol_to_jet_params();
    b.near(10, "ethanol-to-jet CAPEX ($/kW)", etoh.capex, 258.0, 2.0);
    b.near(10, "ethanol-to-jet IFI", etoh.ifi, 1.09, 0.005);
    b.near(10, "ethanol-plant CO2 compression cost ($/t)",
           dv::derive_compression_cost().total_per_t, 17.0, 0.6);
    b.equals(10, "corn-ethanol-with-CCS CI", emissions::ethanol_ccs_ci(), 18.0);
    b.near(10, "methane fee per GJ of gas",
           policy::methane_fee_per_gj(ds.policy.methane_leak_g_per_mj,
                                      ds.policy.methane_fee_usd_per_t),
           0.44, 0.01);
    const double df_45q = finance::derating_factor(ds.finance.wacc, ds.policy.dur_45q,
                                                   ds.finance.book_life_years);
    b.near(10, "net DAC CO2 cost ($/t)",
           policy::dac_co2_net_cost(ds.constants.dac_co2_price,
                                    ds.policy.q45_rates.at(Q45Variant::dac_utilization),
                                    df_45q),
           164.0, 1.0);
    const double df_45y = finance::derating_factor(ds.finance.wacc, ds.policy.dur_45y,
                                                   ds.finance.book_life_years);
    b.near(10, "net renewable electricity price ($/MWh)",
           policy::net_input_price_45y(ds.feedstock("renewable_electricity").price,
                                       ds.policy.y45_rate, df_45y)
               .value,
           21.5, 0.2);
}

void criterion_11(Builder& b, const Dataset& ds) {
    // credit-exclusivity validation across the shipped pathways
    bool all_ok = true;
    for (const auto& p : ds.pathways) all_ok &= policy::validate_claims(p).empty();
    Pathway bad = ds.pathway("P2");
    bad.credit_groups = {{Instrument::v45}, {Instrument::q45}, {Instrument::z45}};
    bad.product = "h2";
    const bool flags_bad = !policy::validate_claims(bad).empty();
    Pathway rfs_bad = ds.pathway("P9");
    rfs_bad.rfs_category = RfsCategory::d5;
    const bool flags_rfs = !policy::validate_claims(rfs_bad).empty();
    b.truth(11, "credit-exclusivity validation", all_ok && flags_bad && flags_rfs);

    // LCOF monotone non-increasing in each subsidy axis
    bool monotone = true;
    for (const auto& p : ds.pathways) {
        if (p.product != "slf") continue;
        double prev = 1e300;
        for (int m = 0; m <= ds.finance.book_life_years; ++m) {
            FuelCreditScenario sc;
            sc.z45_duration_years = m;
            const double v = slf_net(ds, p.id, sc);
            monotone &= v <= prev + 1e-12;
            prev = v;
        }
        prev = 1e300;
        for (int L = 0; L <= 200; L += 25) {
            FuelCreditScenario sc;
            sc.lcfs_price = L;
            const double v = slf_net(ds, p.id, sc);
            monotone &= v <= prev + 1e-12;
            prev = v;
        }
        prev = 1e300;
        for (double rin = 0.0; rin <= 3.0; rin += 0.5) {
            FuelCreditScenario sc;
            sc.rin_d3 = sc.rin_d5 = sc.rin_d6 = rin;
            const double v = slf_net(ds, p.id, sc);
            monotone &= v <= prev + 1e-12;
            prev = v;
        }
    }
    b.truth(11, "LCOF monotone in 45Z duration, LCFS price and RIN price", monotone);

    // credit max-selection dominance and the published selections
    bool dominance = true;
    for (const char* id : {"P2", "P3", "P6"}) {
        const auto r = lcof::lcof_h2(ds, ds.pathway(id));
        const double net = r.breakdown.net();
        const double gross = r.breakdown.gross();
        dominance &= net <= gross - r.credit_45v_per_kg + 1e-12;
        dominance &= net <= gross - r.credit_45q_per_kg + 1e-12;
    }
    dominance &= lcof::lcof_h2(ds, ds.pathway("P2")).selected == Instrument::q45;
    dominance &= lcof::lcof_h2(ds, ds.pathway("P3")).selected == Instrument::q45;
    dominance &= lcof::lcof_h2(ds, ds.pathway("P6")).selected == Instrument::v45;
    b.truth(11, "credit max-selection dominance (P2/P3 pick 45Q, P6 picks 45V)", dominance);

    // P11's 45Z-duration curve declines strictly faster than P13's
    const auto p11 = lcof::lcof_slf(ds, ds.pathway("P11"));
    const auto p13 = lcof::lcof_slf(ds, ds.pathway("P13"));
    b.truth(11, "P11 45Z curve declines faster than P13's",
            p11.z45_credit_full > p13.z45_credit_full);

    // subsidy-on/off ordering reversal between the 2-facility and
    // integrated biomass routes
    const Dataset unsub = without_ira_credits(ds);
    const bool with_credits = slf_net(ds, "P10") < slf_net(ds, "P12") &&
                              slf_net(ds, "P11") < slf_net(ds, "P13");
    const bool without = slf_net(unsub, "P12") < slf_net(unsub, "P10") &&
                         slf_net(unsub, "P13") < slf_net(unsub, "P11");
    b.truth(11, "subsidies reverse the P10/P12 and P11/P13 orderings",
            with_credits && without);

    // hydrogen ordering with credits applied
    b.truth(11, "H2 LCOF ordering P4 < P3 < P2 < P1 < P6 < P5",
            h2_net(ds, "P4") < h2_net(ds, "P3") && h2_net(ds, "P3") < h2_net(ds, "P2") &&
                h2_net(ds, "P2") < h2_net(ds, "P1") &&
                h2_net(ds, "P1") < h2_net(ds, "P6") &&
                h2_net(ds, "P6") < h2_net(ds, "P5"));

    // byte-identical repeated report generation
    RunConfig cfg;
    auto once = [&]() {
        std::string all;
        for (const auto& [name, content] : reports::lcof_report(ds, cfg))
            all += name + content;
        for (const auto& [name, content] : reports::sweep_report(ds, cfg))
            all += name + content;
        for (const auto& [name, content] : reports::lscm_report(ds, cfg))
            all += name + content;
        return all;
    };
    b.truth(11, "repeated report generation is byte-identical", once() == once());
}

} // namespace

VerifyReport run_all(const Dataset& ds) {
    Builder b;
    criterion_1(b, ds);
    criterion_2(b, ds);
    criterion_3(b, ds);
    criterion_4(b, ds);
    criterion_5(b, ds);
    criterion_6(b, ds);
    criterion_7(b, ds);
    criterion_8(b, ds);
    criterion_9(b, ds);
    criterion_10(b, ds);
    criterion_11(b, ds);
    return b.report;
}

} // namespace fuelpath::verify
