#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fuelpath/analysis.hpp"
#include "fuelpath/reports.hpp"

using namespace fuelpath;

namespace {

const Dataset& ds() {
    static Dataset d = load_dataset(builtin_dataset_json());
    return d;
}

std::vector<int> all_durations() {
    std::vector<int> out;
    for (int m = 0; m <= 15; ++m) out.push_back(m);
    return out;
}

} // namespace

TEST_CASE("45Z sweep duration thresholds against the jet band top") {
    CHECK(analysis::min_duration_to_reach(ds(), "P11", 3.72, all_durations()) == 2);
    CHECK(analysis::min_duration_to_reach(ds(), "P13", 3.72, all_durations()) == 5);
    // already inside the band without any 45Z
    CHECK(analysis::min_duration_to_reach(ds(), "P9", 3.72, all_durations()) == 0);
    CHECK(analysis::min_duration_to_reach(ds(), "P15", 3.72, all_durations()) == 0);
    // never reaches it on 45Z alone
    CHECK(analysis::min_duration_to_reach(ds(), "P10", 3.72, all_durations()) == -1);
    CHECK(analysis::min_duration_to_reach(ds(), "P12", 3.72, all_durations()) == -1);
}

TEST_CASE("45Z sweep curves are monotone and P14 is flat") {
    const auto sweep = analysis::sweep_45z_duration(ds(), all_durations());
    CHECK(sweep.size() == 16);
    for (const auto& [id, v0] : sweep.front().lcof_by_pathway) {
        double prev = 1e300;
        for (const auto& pt : sweep) {
            const double v = pt.lcof_by_pathway.at(id);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
    CHECK(sweep.front().lcof_by_pathway.at("P14") ==
          sweep.back().lcof_by_pathway.at("P14"));
    // degenerate single-point sweep reproduces the baseline
    const auto single = analysis::sweep_45z_duration(ds(), {0});
    CHECK(single.size() == 1);
    CHECK(single.front().lcof_by_pathway.at("P9") ==
          doctest::Approx(sweep.front().lcof_by_pathway.at("P9")));
}

TEST_CASE("P11's curve declines strictly faster than P13's") {
    const auto sweep = analysis::sweep_45z_duration(ds(), all_durations());
    for (size_t i = 1; i < sweep.size(); ++i) {
        const double d11 = sweep[i - 1].lcof_by_pathway.at("P11") -
                           sweep[i].lcof_by_pathway.at("P11");
        const double d13 = sweep[i - 1].lcof_by_pathway.at("P13") -
                           sweep[i].lcof_by_pathway.at("P13");
        CHECK(d11 > d13);
        // and P11 stays below P13 at every duration
        CHECK(sweep[i].lcof_by_pathway.at("P11") < sweep[i].lcof_by_pathway.at("P13"));
    }
}

TEST_CASE("sweep results do not depend on evaluation order") {
    auto durations = all_durations();
    std::reverse(durations.begin(), durations.end());
    const auto reversed = analysis::sweep_45z_duration(ds(), durations);
    const auto forward = analysis::sweep_45z_duration(ds(), all_durations());
    for (size_t i = 0; i < forward.size(); ++i) {
        const auto& fwd = forward[i];
        const auto& rev = reversed[forward.size() - 1 - i];
        CHECK(fwd.z45_years == rev.z45_years);
        for (const auto& [id, v] : fwd.lcof_by_pathway)
            CHECK(v == rev.lcof_by_pathway.at(id));
    }
}

TEST_CASE("frontier anchor cells") {
    std::vector<double> lcfs;
    for (int L = 0; L <= 200; L += 5) lcfs.push_back(L);
    const auto grid1 = analysis::competitiveness_frontier(ds(), {0.75, 1.25, 0.75},
                                                          all_durations(), lcfs, 2.2);
    auto winner = [](const FrontierGrid& g, int m, double L) {
        for (const auto& c : g.cells)
            if (c.z45_years == m && c.lcfs_price == L) return c.winner;
        return std::string("?");
    };
    CHECK(winner(grid1, 0, 10) == "FOSSIL");
    CHECK(winner(grid1, 1, 20) == "FOSSIL");
    CHECK(winner(grid1, 0, 25) == "P15");
    CHECK(winner(grid1, 1, 75) == "P15");
    CHECK(winner(grid1, 15, 200) == "P11");

    const auto grid4 = analysis::competitiveness_frontier(ds(), {1.5, 3.0, 1.5},
                                                          all_durations(), lcfs, 2.2);
    CHECK(winner(grid4, 0, 0) == "P12");
    CHECK(winner(grid4, 15, 200) == "P13");

    // single-cell grid works
    const auto cell = analysis::competitiveness_frontier(ds(), {0.75, 1.25, 0.75}, {0},
                                                         {0.0}, 2.2);
    CHECK(cell.cells.size() == 1);
    CHECK(cell.cells.front().winner == "FOSSIL");
}

TEST_CASE("frontier is monotone: more subsidy never flips a cell back to fossil") {
    std::vector<double> lcfs;
    for (int L = 0; L <= 200; L += 20) lcfs.push_back(L);
    std::vector<int> durations = {0, 1, 2, 5, 10, 15};
    for (const auto& rins : analysis::shipped_rin_scenarios()) {
        const auto grid = analysis::competitiveness_frontier(ds(), rins, durations, lcfs, 2.2);
        auto at = [&](size_t di, size_t li) -> const FrontierCell& {
            return grid.cells[di * lcfs.size() + li];
        };
        for (size_t di = 0; di < durations.size(); ++di) {
            for (size_t li = 0; li < lcfs.size(); ++li) {
                if (at(di, li).winner == "FOSSIL") continue;
                if (di + 1 < durations.size()) CHECK(at(di + 1, li).winner != "FOSSIL");
                if (li + 1 < lcfs.size()) CHECK(at(di, li + 1).winner != "FOSSIL");
            }
        }
    }
}

TEST_CASE("subsidy regression over the reforming pathways") {
    const auto pts = analysis::reforming_subsidy_points(ds());
    CHECK(pts.size() == 3);
    const auto fit = analysis::fit_subsidy_line(pts);
    CHECK(fit.slope_usd_per_t == doctest::Approx(76.0).epsilon(5.0 / 76.0));
    CHECK(std::abs(fit.intercept_usd_per_kg) < 0.01);
    CHECK_THROWS_AS(analysis::fit_subsidy_line({{1.0, 2.0}}), Error);
    CHECK_THROWS_AS(analysis::fit_subsidy_line({{1.0, 2.0}, {1.0, 3.0}}), Error);
}

TEST_CASE("biogenic CO2 sale breakeven") {
    const auto be = analysis::breakeven_biogenic_co2_price(ds());
    CHECK(be.price_revenue_only >= 30.0);
    CHECK(be.price_revenue_only <= 60.0);
    CHECK(be.price_avoided_ts ==
          doctest::Approx(be.price_revenue_only - 28.0).epsilon(1e-6));
    CHECK(be.sold_fraction == 0.95);

    // raising T&S raises P6's cost and with it the breakeven price
    Dataset expensive = ds();
    expensive.constants.co2_transport *= 2.0;
    expensive.constants.co2_storage *= 2.0;
    const auto be2 = analysis::breakeven_biogenic_co2_price(expensive);
    CHECK(be2.price_revenue_only > be.price_revenue_only);

    // if P6 already undercuts P1 there is nothing to solve
    Dataset cheap = ds();
    for (auto& t : cheap.technologies)
        if (t.name == "bgccs_h2") t.capex = 100.0;
    for (auto& t : cheap.technologies)
        if (t.name == "bgccs_h2") t.vom = 0.0;
    cheap.feedstocks[1].price = 0.5; // biomass
    CHECK_THROWS_AS(analysis::breakeven_biogenic_co2_price(cheap), Error);
}

TEST_CASE("efficiency incentive value stack") {
    const auto cases = analysis::efficiency_incentive_analysis({0.5, 0.4, 0.3, 0.2}, 0.095);
    CHECK(cases[0].fixed == 218.0);
    CHECK(cases[0].biomass == 121.0);
    CHECK(cases[1].fixed == doctest::Approx(218.0 * (1.0 - 0.095)).epsilon(1e-12));
    CHECK(cases[0].net_value() == doctest::Approx(111.70).epsilon(1e-3));
    CHECK(cases[3].net_value() == doctest::Approx(110.66).epsilon(1e-3));

    double lo = 1e300, hi = -1e300;
    for (const auto& c : cases) {
        lo = std::min(lo, c.net_value());
        hi = std::max(hi, c.net_value());
    }
    CHECK(hi - lo <= 0.05 * cases[0].net_value());
}

TEST_CASE("required fixed-cost reduction at eta = 0.2") {
    const auto req = analysis::required_fixed_reduction_at_eta02();
    CHECK(req.n_pct_per_10pts == 10);
    CHECK(req.total_reduction == doctest::Approx(0.30));
    CHECK(req.continuous_total == doctest::Approx(0.2898).epsilon(1e-3));
}

TEST_CASE("report files are deterministic and carry stable headers") {
    RunConfig cfg;
    const auto a = reports::lcof_report(ds(), cfg);
    const auto b = reports::lcof_report(ds(), cfg);
    REQUIRE(a.size() == 2);
    CHECK(a[0].first == "h2_lcof.csv");
    CHECK(a[1].first == "slf_lcof.csv");
    CHECK(a[0].second == b[0].second);
    CHECK(a[1].second == b[1].second);
    CHECK(a[0].second.rfind("pathway,name,capital,fom,vom,feedstock,", 0) == 0);

    const auto sweep = reports::sweep_report(ds(), cfg);
    REQUIRE(sweep.size() == 6); // sweep_45z + four frontier panels + efficiency study
    CHECK(sweep[0].first == "sweep_45z.csv");
    const auto lscm = reports::lscm_report(ds(), cfg);
    REQUIRE(lscm.size() == 1);
    CHECK(lscm[0].second.find("not_applicable") != std::string::npos);
}

TEST_CASE("json report format") {
    RunConfig cfg;
    cfg.format = ReportFormat::json;
    const auto files = reports::lcof_report(ds(), cfg);
    CHECK(files[0].first == "h2_lcof.json");
    CHECK(files[0].second.find("\"pathway\": \"P1\"") != std::string::npos);
}

TEST_CASE("pathway filter narrows report rows") {
    RunConfig cfg;
    cfg.pathway_filter = {"P4"};
    const auto files = reports::lcof_report(ds(), cfg);
    CHECK(files[0].second.find("P4") != std::string::npos);
    CHECK(files[0].second.find("P1,") == std::string::npos);
}
