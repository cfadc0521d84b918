#include "fuelpath/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace fuelpath::analysis {

namespace {

std::vector<const Pathway*> slf_pathways(const Dataset& ds) {
    std::vector<const Pathway*> out;
    for (const auto& p : ds.pathways)
        if (p.product == "slf") out.push_back(&p);
    return out;
}

} // namespace

std::vector<SweepPoint> sweep_45z_duration(const Dataset& ds,
                                           const std::vector<int>& durations) {
    std::vector<SweepPoint> out;
    const auto paths = slf_pathways(ds);
    for (int m : durations) {
        if (m < 0 || m > ds.finance.book_life_years)
            raise(errc::invariant_violation, "sweep duration outside [0, book life]");
        SweepPoint pt;
        pt.z45_years = m;
        FuelCreditScenario sc;
        sc.z45_duration_years = m;
        sc.lcfs_benchmark = ds.policy.lcfs_benchmark_2030;
        for (const Pathway* p : paths)
            pt.lcof_by_pathway[p->id] = lcof::lcof_slf(ds, *p, sc).breakdown.net();
        out.push_back(std::move(pt));
    }
    return out;
}

int min_duration_to_reach(const Dataset& ds, const std::string& pathway_id,
                          double price, const std::vector<int>& durations) {
    const Pathway& p = ds.pathway(pathway_id);
    for (int m : durations) {
        FuelCreditScenario sc;
        sc.z45_duration_years = m;
        sc.lcfs_benchmark = ds.policy.lcfs_benchmark_2030;
        if (lcof::lcof_slf(ds, p, sc).breakdown.net() <= price) return m;
    }
    return -1;
}

FrontierGrid competitiveness_frontier(const Dataset& ds, const RinScenario& rins,
                                      const std::vector<int>& durations,
                                      const std::vector<double>& lcfs_prices,
                                      double fossil_price) {
    if (fossil_price <= 0.0)
        raise(errc::invariant_violation, "frontier: fossil price must be positive");
    FrontierGrid grid;
    grid.rins = rins;
    grid.fossil_price = fossil_price;
    const auto paths = slf_pathways(ds);
    for (int m : durations) {
        for (double L : lcfs_prices) {
            FrontierCell cell;
            cell.z45_years = m;
            cell.lcfs_price = L;
            FuelCreditScenario sc;
            sc.z45_duration_years = m;
            sc.lcfs_price = L;
            sc.lcfs_benchmark = ds.policy.lcfs_benchmark_2030;
            sc.rin_d5 = rins.d5;
            sc.rin_d3 = rins.d3;
            sc.rin_d6 = rins.d6;
            cell.winner = "FOSSIL";
            double best = fossil_price;
            for (const Pathway* p : paths) {
                const double v = lcof::lcof_slf(ds, *p, sc).breakdown.net();
                cell.lcof_by_pathway[p->id] = v;
                // ties break toward fossil, then the lowest pathway index
                if (v < best) {
                    best = v;
                    cell.winner = p->id;
                }
            }
            grid.cells.push_back(std::move(cell));
        }
    }
    return grid;
}

std::vector<RinScenario> shipped_rin_scenarios() {
    // D3 = D5 + {0.5, 1.5}; D6 assumed equal to D5
    return {
        {0.75, 1.25, 0.75},
        {0.75, 2.25, 0.75},
        {1.5, 2.0, 1.5},
        {1.5, 3.0, 1.5},
    };
}

SubsidyFit fit_subsidy_line(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2)
        raise(errc::degenerate_points, "fit_subsidy_line: need at least two points");
    const double n = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12)
        raise(errc::degenerate_points, "fit_subsidy_line: points share one abscissa");
    SubsidyFit fit;
    const double slope_per_kg = (n * sxy - sx * sy) / denom;
    fit.slope_usd_per_t = slope_per_kg * 1000.0;
    fit.intercept_usd_per_kg = (sy - slope_per_kg * sx) / n;
    return fit;
}

std::vector<std::pair<double, double>> reforming_subsidy_points(const Dataset& ds) {
    std::vector<std::pair<double, double>> pts;
    const double p1_ci = emissions::h2_ci(ds, ds.pathway("P1"));
    for (const char* id : {"P1", "P2", "P3"}) {
        const Pathway& p = ds.pathway(id);
        const H2Result r = lcof::lcof_h2(ds, p);
        const double subsidy = std::max(r.credit_45v_per_kg, r.credit_45q_per_kg);
        pts.emplace_back(p1_ci - emissions::h2_ci(ds, p), subsidy);
    }
    return pts;
}

BreakevenCo2Sale breakeven_biogenic_co2_price(const Dataset& ds) {
    const Pathway& p6 = ds.pathway("P6");
    const Pathway& p1 = ds.pathway("P1");
    const double target = lcof::lcof_h2(ds, p1).breakdown.net();
    if (lcof::lcof_h2(ds, p6).breakdown.net() <= target)
        raise(errc::no_crossing, "P6 already at or below the gray-hydrogen LCOF");

    auto net_at = [&](double price) {
        WhatIf w;
        w.p6_co2_sale_price = price;
        return lcof::lcof_h2(ds, p6, w).breakdown.net();
    };

    // bisection on the sale price to 0.01 $/t
    double lo = 0.0, hi = 1000.0;
    if (net_at(hi) > target)
        raise(errc::no_crossing, "no sale price below 1000 $/t closes the gap");
    while (hi - lo > 0.01) {
        const double mid = 0.5 * (lo + hi);
        (net_at(mid) > target ? lo : hi) = mid;
    }
    BreakevenCo2Sale out;
    out.sold_fraction = 0.95;
    out.price_revenue_only = 0.5 * (lo + hi);
    // alternative convention: the sold share also avoids its T&S cost
    out.price_avoided_ts = out.price_revenue_only - ds.constants.co2_ts_cost();
    return out;
}

std::vector<EfficiencyCase> efficiency_incentive_analysis(const std::vector<double>& etas,
                                                          double n_pct) {
    if (n_pct < 0.0)
        raise(errc::invariant_violation, "efficiency analysis: n must be >= 0");
    std::vector<EfficiencyCase> out;
    for (double eta : etas) {
        if (eta <= 0.0 || eta > 1.0)
            raise(errc::invariant_violation, "efficiency analysis: eta outside (0,1]");
        const emissions::AppendixCi ci = emissions::appendix_slf_ci(eta, true);
        EfficiencyCase c;
        c.eta = eta;
        c.energy_slf_mmbtu = ci.energy_slf_mmbtu;
        c.ci_kg_per_mmbtu = ci.ci;
        c.credit_45z = ci.energy_slf_mmbtu * 7.9 * (50.0 - ci.ci) / 50.0 * 1.62;
        c.revenue_slf = ci.energy_slf_mmbtu * 7.9 * 2.2;
        c.biomass = 121.0;
        c.fixed = ((eta - 0.5) * n_pct / 0.1 + 1.0) * 218.0;
        c.vom = ci.energy_slf_mmbtu * 5.43;
        c.co2_ts = ci.captured_kg * 28.0 / 1000.0;
        out.push_back(c);
    }
    return out;
}

FixedReductionRequirement required_fixed_reduction_at_eta02() {
    auto net = [](double eta, double n) {
        return efficiency_incentive_analysis({eta}, n).front().net_value();
    };
    FixedReductionRequirement out{};
    const double reference = net(0.5, 0.0); // fixed(0.5) is n-independent
    out.n_pct_per_10pts = -1;
    for (int n = 0; n <= 100; ++n) {
        if (net(0.2, n / 100.0) >= reference) {
            out.n_pct_per_10pts = n;
            break;
        }
    }
    out.total_reduction = out.n_pct_per_10pts * 3.0 / 100.0;
    // continuous solution for reference: net(0.2, n) is linear in n
    const double n0 = net(0.2, 0.0);
    const double n1 = net(0.2, 0.01);
    out.continuous_total = (reference - n0) / (n1 - n0) * 0.01 * 3.0;
    return out;
}

} // namespace fuelpath::analysis
