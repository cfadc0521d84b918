#include "fuelpath/dataset.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace fuelpath {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    raise(errc::schema, "dataset schema: " + path + ": " + what);
}

const json& require(const json& node, const std::string& key, const std::string& path) {
    auto it = node.find(key);
    if (it == node.end()) schema_error(path + "." + key, "missing");
    return *it;
}

double number(const json& node, const std::string& path) {
    if (!node.is_number()) schema_error(path, "expected a number");
    return node.get<double>();
}

double quantity_value(const json& node, const std::string& path,
                      const std::string& expected_unit) {
    if (node.is_number()) return node.get<double>();
    if (!node.is_object()) schema_error(path, "expected {value, unit}");
    const double v = number(require(node, "value", path), path + ".value");
    const std::string unit = require(node, "unit", path).get<std::string>();
    if (unit != expected_unit)
        schema_error(path + ".unit", "expected '" + expected_unit + "', got '" + unit + "'");
    return v;
}

std::string text(const json& node, const std::string& path) {
    if (!node.is_string()) schema_error(path, "expected a string");
    return node.get<std::string>();
}

Instrument parse_instrument(const std::string& s, const std::string& path) {
    if (s == "45V") return Instrument::v45;
    if (s == "45Q") return Instrument::q45;
    if (s == "45Z") return Instrument::z45;
    if (s == "45Y") return Instrument::y45;
    if (s == "40B") return Instrument::b40;
    schema_error(path, "unknown credit '" + s + "'");
}

RfsCategory parse_rfs(const std::string& s, const std::string& path) {
    if (s == "none") return RfsCategory::none;
    if (s == "D3") return RfsCategory::d3;
    if (s == "D5") return RfsCategory::d5;
    if (s == "D6") return RfsCategory::d6;
    schema_error(path, "unknown RFS category '" + s + "'");
}

Co2Source parse_co2_source(const std::string& s, const std::string& path) {
    if (s == "none") return Co2Source::none;
    if (s == "dac") return Co2Source::dac;
    if (s == "biogenic_internal") return Co2Source::biogenic_internal;
    if (s == "ethanol_fermentation") return Co2Source::ethanol_fermentation;
    schema_error(path, "unknown co2_source '" + s + "'");
}

void check_invariants(const Dataset& ds) {
    for (const auto& f : ds.feedstocks) {
        if (f.upstream_ci < 0.0)
            raise(errc::invariant_violation, "feedstock " + f.name + ": upstream_ci < 0");
        if (f.price < 0.0)
            raise(errc::invariant_violation, "feedstock " + f.name + ": price < 0");
    }
    for (const auto& t : ds.technologies) {
        if (t.capture_rate < 0.0 || t.capture_rate > 1.0)
            raise(errc::invariant_violation,
                  "technology " + t.name + ": capture_rate outside [0,1]");
        if (t.ifi < 1.0)
            raise(errc::invariant_violation,
                  "technology " + t.name + ": IFI < 1 (over-unity conversion)");
        if (t.capacity_factor <= 0.0 || t.capacity_factor > 1.0)
            raise(errc::invariant_violation,
                  "technology " + t.name + ": capacity_factor outside (0,1]");
        if (t.feedstock != "hydrogen") {
            bool found = false;
            for (const auto& f : ds.feedstocks) found |= f.name == t.feedstock;
            if (!found)
                raise(errc::dangling_reference,
                      "technology " + t.name + ": unknown feedstock '" + t.feedstock + "'");
        }
    }
    for (const auto& p : ds.pathways) {
        bool tech_found = false;
        for (const auto& t : ds.technologies) tech_found |= t.name == p.technology;
        if (!tech_found)
            raise(errc::dangling_reference,
                  "pathway " + p.id + ": unknown technology '" + p.technology + "'");
        if (!p.h2_source.empty()) {
            bool src = false;
            for (const auto& q : ds.pathways) src |= q.id == p.h2_source;
            if (!src)
                raise(errc::dangling_reference,
                      "pathway " + p.id + ": unknown h2_source '" + p.h2_source + "'");
        }
        auto violations = policy::validate_claims(p);
        if (!violations.empty())
            raise(violations.front().code,
                  "pathway " + p.id + ": " + violations.front().message);
    }
    for (const auto& [name, fp] : ds.constants.fuel_properties) fp.check();
    ds.finance.check();
    ds.policy.check(ds.finance.book_life_years);
    // dataset CRF must sit next to the closed-form value
    const double closed = finance::crf(ds.finance.wacc, ds.finance.book_life_years);
    if (std::abs(ds.finance.crf - closed) > 1e-3)
        raise(errc::invariant_violation, "finance.crf too far from closed-form value");
}

} // namespace

double ModelConstants::slf_gal_gj_hhv() const {
    const auto it = fuel_properties.find("slf");
    const double ratio = it == fuel_properties.end() ? 1.05 : it->second.hhv_lhv_ratio;
    return slf_gal_lhv_mmbtu * gj_per_mmbtu * ratio;
}

const Feedstock& Dataset::feedstock(const std::string& name) const {
    for (const auto& f : feedstocks)
        if (f.name == name) return f;
    raise(errc::dangling_reference, "unknown feedstock '" + name + "'");
}

const TechnologySpec& Dataset::technology(const std::string& name) const {
    for (const auto& t : technologies)
        if (t.name == name) return t;
    raise(errc::dangling_reference, "unknown technology '" + name + "'");
}

const Pathway& Dataset::pathway(const std::string& id) const {
    for (const auto& p : pathways)
        if (p.id == id) return p;
    raise(errc::dangling_reference, "unknown pathway '" + id + "'");
}

bool Dataset::has_pathway(const std::string& id) const {
    for (const auto& p : pathways)
        if (p.id == id) return true;
    return false;
}

Dataset load_dataset(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        raise(errc::parse, std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("$", "expected a JSON object");

    Dataset ds;

    const json& feeds = require(doc, "feedstocks", "$");
    for (size_t i = 0; i < feeds.size(); ++i) {
        const json& f = feeds[i];
        const std::string path = "feedstocks[" + std::to_string(i) + "]";
        Feedstock out;
        out.name = text(require(f, "name", path), path + ".name");
        const json& price = require(f, "price", path);
        out.price = number(require(price, "value", path + ".price"), path + ".price.value");
        out.price_unit = text(require(price, "unit", path + ".price"), path + ".price.unit");
        out.upstream_ci = quantity_value(require(f, "upstream_ci", path),
                                         path + ".upstream_ci", "kgCO2e/GJ_HHV");
        out.carbon_content = quantity_value(require(f, "carbon_content", path),
                                            path + ".carbon_content", "kgCO2/GJ_HHV");
        out.biogenic = require(f, "biogenic", path).get<bool>();
        out.eligible_45y = f.value("eligible_45y", false);
        if (f.contains("embedded_methane_fee"))
            out.embedded_methane_fee = quantity_value(f["embedded_methane_fee"],
                                                      path + ".embedded_methane_fee",
                                                      "USD/GJ_HHV");
        ds.feedstocks.push_back(std::move(out));
    }

    const json& techs = require(doc, "technologies", "$");
    for (size_t i = 0; i < techs.size(); ++i) {
        const json& t = techs[i];
        const std::string path = "technologies[" + std::to_string(i) + "]";
        TechnologySpec out;
        out.name = text(require(t, "name", path), path + ".name");
        out.product = text(require(t, "product", path), path + ".product");
        if (out.product != "h2" && out.product != "slf")
            schema_error(path + ".product", "must be 'h2' or 'slf'");
        out.feedstock = text(require(t, "feedstock", path), path + ".feedstock");
        out.ifi = number(require(t, "ifi", path), path + ".ifi");
        out.coproduct_electricity =
            number(require(t, "coproduct_electricity", path), path + ".coproduct_electricity");
        out.capture_rate = number(require(t, "capture_rate", path), path + ".capture_rate");
        out.capex = quantity_value(require(t, "capex", path), path + ".capex", "USD/kW");
        out.fom = quantity_value(require(t, "fom", path), path + ".fom", "USD/kW-yr");
        out.vom = quantity_value(require(t, "vom", path), path + ".vom", "USD/GJ");
        out.capacity_factor =
            number(require(t, "capacity_factor", path), path + ".capacity_factor");
        if (t.contains("co2_input"))
            out.co2_input = quantity_value(t["co2_input"], path + ".co2_input", "kgCO2/GJ_HHV");
        ds.technologies.push_back(std::move(out));
    }

    const json& paths = require(doc, "pathways", "$");
    for (size_t i = 0; i < paths.size(); ++i) {
        const json& p = paths[i];
        const std::string path = "pathways[" + std::to_string(i) + "]";
        Pathway out;
        out.id = text(require(p, "id", path), path + ".id");
        out.name = text(require(p, "name", path), path + ".name");
        out.product = text(require(p, "product", path), path + ".product");
        out.technology = text(require(p, "technology", path), path + ".technology");
        for (const auto& c : require(p, "credits", path)) {
            // "45V|45Q" is one group of alternatives, claimed as the max
            const std::string spec = c.get<std::string>();
            std::vector<Instrument> group;
            size_t start = 0;
            while (start <= spec.size()) {
                const size_t bar = spec.find('|', start);
                const std::string piece =
                    spec.substr(start, bar == std::string::npos ? spec.size() - start
                                                                : bar - start);
                group.push_back(parse_instrument(piece, path + ".credits"));
                if (bar == std::string::npos) break;
                start = bar + 1;
            }
            out.credit_groups.push_back(std::move(group));
        }
        out.h2_source = p.value("h2_source", "");
        if (p.contains("co2_source"))
            out.co2_source = parse_co2_source(p["co2_source"].get<std::string>(),
                                              path + ".co2_source");
        if (p.contains("co2_handling_cost"))
            out.co2_handling_cost = quantity_value(p["co2_handling_cost"],
                                                   path + ".co2_handling_cost", "USD/tCO2");
        if (p.contains("rfs_category"))
            out.rfs_category = parse_rfs(p["rfs_category"].get<std::string>(),
                                         path + ".rfs_category");
        if (p.contains("upstream_ccs")) {
            const json& u = p["upstream_ccs"];
            UpstreamCcs ccs;
            ccs.co2_kg_per_gj_feed = quantity_value(require(u, "co2_capture", path + ".upstream_ccs"),
                                                    path + ".upstream_ccs.co2_capture",
                                                    "kgCO2/GJ_HHV");
            ccs.compression_cost = quantity_value(require(u, "compression_cost", path + ".upstream_ccs"),
                                                  path + ".upstream_ccs.compression_cost",
                                                  "USD/tCO2");
            out.upstream_ccs = ccs;
        }
        ds.pathways.push_back(std::move(out));
    }

    const json& pol = require(doc, "policy", "$");
    {
        PolicySuite& ps = ds.policy;
        const json& tiers = require(pol, "v45_tiers", "policy");
        for (size_t i = 0; i < tiers.size(); ++i) {
            const json& t = tiers[i];
            const std::string path = "policy.v45_tiers[" + std::to_string(i) + "]";
            V45Tier tier;
            tier.ci_lower = t.contains("ci_lower")
                                ? number(t["ci_lower"], path + ".ci_lower")
                                : std::numeric_limits<double>::lowest();
            tier.ci_upper = number(require(t, "ci_upper", path), path + ".ci_upper");
            tier.rate_usd_per_kg =
                quantity_value(require(t, "rate", path), path + ".rate", "USD/kgH2");
            ps.v45_tiers.push_back(tier);
        }
        const json& q = require(pol, "q45_rates", "policy");
        ps.q45_rates[Q45Variant::sequestration] =
            quantity_value(require(q, "sequestration", "policy.q45_rates"),
                           "policy.q45_rates.sequestration", "USD/tCO2");
        ps.q45_rates[Q45Variant::utilization] =
            quantity_value(require(q, "utilization", "policy.q45_rates"),
                           "policy.q45_rates.utilization", "USD/tCO2");
        ps.q45_rates[Q45Variant::dac_sequestration] =
            quantity_value(require(q, "dac_sequestration", "policy.q45_rates"),
                           "policy.q45_rates.dac_sequestration", "USD/tCO2");
        ps.q45_rates[Q45Variant::dac_utilization] =
            quantity_value(require(q, "dac_utilization", "policy.q45_rates"),
                           "policy.q45_rates.dac_utilization", "USD/tCO2");
        const json& z = require(pol, "z45", "policy");
        ps.z45_saf_rate = quantity_value(require(z, "saf_rate", "policy.z45"),
                                         "policy.z45.saf_rate", "USD/gal");
        ps.z45_other_rate = quantity_value(require(z, "other_rate", "policy.z45"),
                                           "policy.z45.other_rate", "USD/gal");
        ps.z45_ci_pivot = quantity_value(require(z, "ci_pivot", "policy.z45"),
                                         "policy.z45.ci_pivot", "kgCO2e/MMBtu_LHV");
        ps.z45_saf_fraction = number(require(z, "saf_fraction", "policy.z45"),
                                     "policy.z45.saf_fraction");
        ps.y45_rate = quantity_value(require(pol, "y45_rate", "policy"),
                                     "policy.y45_rate", "USD/MWh");
        const json& m = require(pol, "methane", "policy");
        ps.methane_fee_usd_per_t = quantity_value(require(m, "fee", "policy.methane"),
                                                  "policy.methane.fee", "USD/tCH4");
        ps.methane_leak_g_per_mj = quantity_value(require(m, "leak_rate", "policy.methane"),
                                                  "policy.methane.leak_rate", "gCH4/MJ");
        ps.embedded_methane_fee_per_gj =
            quantity_value(require(m, "embedded_fee", "policy.methane"),
                           "policy.methane.embedded_fee", "USD/GJ_HHV");
        const json& dur = require(pol, "durations", "policy");
        ps.dur_45q = require(dur, "45Q", "policy.durations").get<int>();
        ps.dur_45v = require(dur, "45V", "policy.durations").get<int>();
        ps.dur_45y = require(dur, "45Y", "policy.durations").get<int>();
        ps.dur_methane = require(dur, "methane_fee", "policy.durations").get<int>();
        ps.rfs_equivalence = number(require(require(pol, "rfs", "policy"), "equivalence_ratio",
                                            "policy.rfs"),
                                    "policy.rfs.equivalence_ratio");
        const json& lcfs = require(pol, "lcfs", "policy");
        ps.lcfs_benchmark_2030 = quantity_value(require(lcfs, "benchmark_2030", "policy.lcfs"),
                                                "policy.lcfs.benchmark_2030", "kgCO2e/GJ_LHV");
        ps.lcfs_benchmark_2022 = quantity_value(require(lcfs, "benchmark_2022", "policy.lcfs"),
                                                "policy.lcfs.benchmark_2022", "kgCO2e/GJ_LHV");
        ps.lcfs_gal_energy_gj_lhv = quantity_value(require(lcfs, "gal_energy", "policy.lcfs"),
                                                   "policy.lcfs.gal_energy", "GJ_LHV/gal");
    }

    const json& fin = require(doc, "finance", "$");
    ds.finance.wacc = number(require(fin, "wacc", "finance"), "finance.wacc");
    ds.finance.book_life_years =
        require(fin, "book_life_years", "finance").get<int>();
    ds.finance.crf = number(require(fin, "crf", "finance"), "finance.crf");

    const json& k = require(doc, "constants", "$");
    {
        ModelConstants& c = ds.constants;
        c.h2_hhv_gj_per_t = quantity_value(require(k, "h2_hhv", "constants"),
                                           "constants.h2_hhv", "GJ_HHV/t");
        c.slf_gal_lhv_gj = quantity_value(require(k, "slf_gal_lhv_gj", "constants"),
                                          "constants.slf_gal_lhv_gj", "GJ_LHV/gal");
        c.slf_gal_lhv_mmbtu = quantity_value(require(k, "slf_gal_lhv_mmbtu", "constants"),
                                             "constants.slf_gal_lhv_mmbtu", "MMBtu_LHV/gal");
        c.ethanol_gal_lhv_mmbtu =
            quantity_value(require(k, "ethanol_gal_lhv_mmbtu", "constants"),
                           "constants.ethanol_gal_lhv_mmbtu", "MMBtu_LHV/gal");
        c.gj_per_mmbtu = number(require(k, "gj_per_mmbtu", "constants"),
                                "constants.gj_per_mmbtu");
        c.slf_gal_per_mmbtu = number(require(k, "slf_gal_per_mmbtu", "constants"),
                                     "constants.slf_gal_per_mmbtu");
        c.ethanol_kg_per_gal = number(require(k, "ethanol_kg_per_gal", "constants"),
                                      "constants.ethanol_kg_per_gal");
        c.co2_transport = quantity_value(require(k, "co2_transport", "constants"),
                                         "constants.co2_transport", "USD/tCO2");
        c.co2_storage = quantity_value(require(k, "co2_storage", "constants"),
                                       "constants.co2_storage", "USD/tCO2");
        c.dac_co2_price = quantity_value(require(k, "dac_co2_price", "constants"),
                                         "constants.dac_co2_price", "USD/tCO2");
        const json& fp = require(k, "fuel_properties", "constants");
        for (auto it = fp.begin(); it != fp.end(); ++it) {
            const std::string path = "constants.fuel_properties." + it.key();
            FuelProperties props;
            props.name = it.key();
            props.hhv_gj_per_tonne = number(require(*it, "hhv", path), path + ".hhv");
            props.hhv_lhv_ratio =
                number(require(*it, "hhv_lhv_ratio", path), path + ".hhv_lhv_ratio");
            props.carbon_kg_per_gj_hhv =
                number(require(*it, "carbon_content", path), path + ".carbon_content");
            c.fuel_properties[it.key()] = props;
        }
        const json& bm = require(k, "benchmarks", "constants");
        c.benchmarks.h2_fossil = quantity_value(require(bm, "h2_fossil_ci", "constants.benchmarks"),
                                                "constants.benchmarks.h2_fossil_ci", "kgCO2e/kgH2");
        c.benchmarks.slf_fossil_per_gal =
            quantity_value(require(bm, "slf_fossil_ci_per_gal", "constants.benchmarks"),
                           "constants.benchmarks.slf_fossil_ci_per_gal", "kgCO2e/gal");
        c.benchmarks.slf_fossil_per_mmbtu =
            quantity_value(require(bm, "slf_fossil_ci_per_mmbtu", "constants.benchmarks"),
                           "constants.benchmarks.slf_fossil_ci_per_mmbtu", "kgCO2e/MMBtu_LHV");
        c.fossil_jet_price = quantity_value(require(bm, "fossil_jet_price", "constants.benchmarks"),
                                            "constants.benchmarks.fossil_jet_price", "USD/gal");
        c.jet_price_p10 = quantity_value(require(bm, "jet_price_p10", "constants.benchmarks"),
                                         "constants.benchmarks.jet_price_p10", "USD/gal");
        c.jet_price_p90 = quantity_value(require(bm, "jet_price_p90", "constants.benchmarks"),
                                         "constants.benchmarks.jet_price_p90", "USD/gal");
        const json& scc = require(k, "scc", "constants");
        const json& s30 = require(scc, "2030", "constants.scc");
        const json& s40 = require(scc, "2040", "constants.scc");
        c.scc_2030 = {number(require(s30, "low", "constants.scc.2030"), "constants.scc.2030.low"),
                      number(require(s30, "high", "constants.scc.2030"), "constants.scc.2030.high")};
        c.scc_2040 = {number(require(s40, "low", "constants.scc.2040"), "constants.scc.2040.low"),
                      number(require(s40, "high", "constants.scc.2040"), "constants.scc.2040.high")};
    }

    check_invariants(ds);
    return ds;
}

Dataset load_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(errc::io, "cannot open dataset file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_dataset(buf.str());
}

} // namespace fuelpath
