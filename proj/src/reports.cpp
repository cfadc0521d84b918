#include "fuelpath/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fuelpath::reports {

using nlohmann::json;

std::string format_value(double v) {
    char buf[64];
    if (v == 0.0) v = 0.0; // normalize -0
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

namespace {

const std::vector<CostLabel> kH2Columns = {
    CostLabel::capital,       CostLabel::fom,
    CostLabel::vom,           CostLabel::feedstock,
    CostLabel::coproduct_electricity, CostLabel::co2_transport_storage,
    CostLabel::credit_45v,    CostLabel::credit_45q,
};

const std::vector<CostLabel> kSlfColumns = {
    CostLabel::capital,       CostLabel::fom,
    CostLabel::vom,           CostLabel::feedstock,
    CostLabel::coproduct_electricity, CostLabel::dac_co2_net,
    CostLabel::co2_transport_storage, CostLabel::credit_45q,
    CostLabel::credit_45z,    CostLabel::rfs,
    CostLabel::lcfs,
};

bool selected(const RunConfig& cfg, const std::string& id) {
    if (cfg.pathway_filter.empty()) return true;
    return std::find(cfg.pathway_filter.begin(), cfg.pathway_filter.end(), id) !=
           cfg.pathway_filter.end();
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const {
        std::ostringstream out;
        for (size_t i = 0; i < header.size(); ++i)
            out << header[i] << (i + 1 < header.size() ? "," : "");
        out << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << row[i] << (i + 1 < row.size() ? "," : "");
            out << "\n";
        }
        return out.str();
    }

    std::string to_json() const {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (size_t i = 0; i < header.size() && i < row.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }
};

void emit(FileBundle& bundle, const RunConfig& cfg, const std::string& stem,
          const Table& table) {
    if (cfg.format == ReportFormat::csv)
        bundle.emplace_back(stem + ".csv", table.to_csv());
    else
        bundle.emplace_back(stem + ".json", table.to_json());
}

} // namespace

FileBundle lcof_report(const Dataset& ds, const RunConfig& cfg) {
    FileBundle bundle;

    Table h2;
    h2.header = {"pathway", "name"};
    for (auto l : kH2Columns) h2.header.push_back(to_string(l));
    h2.header.insert(h2.header.end(), {"gross", "net", "ci_kg_co2e_per_kg"});
    for (const auto& p : ds.pathways) {
        if (p.product != "h2" || !selected(cfg, p.id)) continue;
        const auto r = lcof::lcof_h2(ds, p, cfg.what_if);
        std::vector<std::string> row = {p.id, p.name};
        for (auto l : kH2Columns) row.push_back(format_value(r.breakdown.item(l)));
        row.push_back(format_value(r.breakdown.gross()));
        row.push_back(format_value(r.breakdown.net()));
        row.push_back(format_value(r.ci_kg));
        h2.rows.push_back(std::move(row));
    }
    emit(bundle, cfg, "h2_lcof", h2);

    Table slf;
    slf.header = {"pathway", "name"};
    for (auto l : kSlfColumns) slf.header.push_back(to_string(l));
    slf.header.insert(slf.header.end(),
                      {"gross", "net", "ci_kg_co2e_per_mmbtu_lhv"});
    for (const auto& p : ds.pathways) {
        if (p.product != "slf" || !selected(cfg, p.id)) continue;
        const auto r = lcof::lcof_slf(ds, p, cfg.scenario, cfg.what_if);
        std::vector<std::string> row = {p.id, p.name};
        for (auto l : kSlfColumns) row.push_back(format_value(r.breakdown.item(l)));
        row.push_back(format_value(r.breakdown.gross()));
        row.push_back(format_value(r.breakdown.net()));
        row.push_back(format_value(r.ci_mmbtu_lhv));
        slf.rows.push_back(std::move(row));
    }
    emit(bundle, cfg, "slf_lcof", slf);
    return bundle;
}

FileBundle sweep_report(const Dataset& ds, const RunConfig& cfg) {
    FileBundle bundle;

    std::vector<int> durations;
    for (int m = 0; m <= ds.finance.book_life_years; ++m) durations.push_back(m);

    std::vector<std::string> slf_ids;
    for (const auto& p : ds.pathways)
        if (p.product == "slf") slf_ids.push_back(p.id);

    Table sweep;
    sweep.header = {"z45_years"};
    for (const auto& id : slf_ids) sweep.header.push_back(id);
    for (const auto& pt : analysis::sweep_45z_duration(ds, durations)) {
        std::vector<std::string> row = {std::to_string(pt.z45_years)};
        for (const auto& id : slf_ids)
            row.push_back(format_value(pt.lcof_by_pathway.at(id)));
        sweep.rows.push_back(std::move(row));
    }
    emit(bundle, cfg, "sweep_45z", sweep);

    std::vector<double> lcfs_prices;
    for (int L = 0; L <= 200; L += 5) lcfs_prices.push_back(L);

    std::vector<RinScenario> scenarios;
    if (cfg.scenario_rins_set)
        scenarios.push_back({cfg.scenario.rin_d5, cfg.scenario.rin_d3, cfg.scenario.rin_d6});
    else
        scenarios = analysis::shipped_rin_scenarios();

    for (const auto& rins : scenarios) {
        const auto grid = analysis::competitiveness_frontier(ds, rins, durations,
                                                             lcfs_prices,
                                                             cfg.fossil_price);
        Table t;
        t.header = {"z45_years", "lcfs_price", "winner"};
        for (const auto& id : slf_ids) t.header.push_back("lcof_" + id);
        for (const auto& cell : grid.cells) {
            std::vector<std::string> row = {std::to_string(cell.z45_years),
                                            format_value(cell.lcfs_price), cell.winner};
            for (const auto& id : slf_ids)
                row.push_back(format_value(cell.lcof_by_pathway.at(id)));
            t.rows.push_back(std::move(row));
        }
        std::ostringstream stem;
        stem << "frontier_d5_" << format_value(rins.d5) << "_d3_" << format_value(rins.d3);
        emit(bundle, cfg, stem.str(), t);
    }

    // per-tonne-of-biomass value stack across gasifier efficiencies
    Table eff;
    eff.header = {"eta", "energy_slf_mmbtu", "ci_kg_per_mmbtu", "credit_45z",
                  "revenue_slf", "biomass", "fixed", "vom", "co2_ts", "net_value"};
    for (const auto& c :
         analysis::efficiency_incentive_analysis({0.5, 0.4, 0.3, 0.2}, 0.095)) {
        eff.rows.push_back({format_value(c.eta), format_value(c.energy_slf_mmbtu),
                            format_value(c.ci_kg_per_mmbtu), format_value(c.credit_45z),
                            format_value(c.revenue_slf), format_value(c.biomass),
                            format_value(c.fixed), format_value(c.vom),
                            format_value(c.co2_ts), format_value(c.net_value())});
    }
    emit(bundle, cfg, "efficiency_study", eff);
    return bundle;
}

FileBundle lscm_report(const Dataset& ds, const RunConfig& cfg) {
    FileBundle bundle;
    const auto& c = ds.constants;

    Table t;
    t.header = {"pathway", "name", "total_subsidy", "ci_delta", "lscm",
                "lscm_undiscounted", "scc2030_low", "scc2030_high",
                "scc2040_low", "scc2040_high", "classification"};
    for (const auto& p : ds.pathways) {
        if (!selected(cfg, p.id)) continue;
        std::vector<std::string> row = {p.id, p.name};
        try {
            const auto r = lcof::lscm(ds, p, cfg.what_if);
            row.push_back(format_value(r.total_subsidy));
            row.push_back(format_value(r.ci_delta));
            row.push_back(format_value(r.lscm));
            row.push_back(format_value(r.lscm_undiscounted));
            row.insert(row.end(),
                       {format_value(c.scc_2030.low), format_value(c.scc_2030.high),
                        format_value(c.scc_2040.low), format_value(c.scc_2040.high)});
            // classify against the 2030-2040 SCC envelope
            const double lo = c.scc_2030.low, hi = c.scc_2040.high;
            row.push_back(r.lscm < lo ? "below_scc_range"
                                      : (r.lscm > hi ? "above_scc_range" : "within_scc_range"));
        } catch (const Error& e) {
            if (e.code() != errc::no_mitigation) throw;
            row.insert(row.end(), {"", "", "", "",
                                   format_value(c.scc_2030.low), format_value(c.scc_2030.high),
                                   format_value(c.scc_2040.low), format_value(c.scc_2040.high),
                                   "not_applicable"});
        }
        t.rows.push_back(std::move(row));
    }
    emit(bundle, cfg, "lscm", t);
    return bundle;
}

} // namespace fuelpath::reports
