#include "fuelpath.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "fuelpath/analysis.hpp"
#include "fuelpath/dataset.hpp"
#include "fuelpath/emissions.hpp"
#include "fuelpath/lcof.hpp"
#include "fuelpath/reports.hpp"
#include "fuelpath/verify.hpp"

using nlohmann::json;

struct fp_engine {
    fuelpath::Dataset dataset;
    std::string last_error;
};

namespace {

thread_local std::string g_last_error;

fp_status status_of(const fuelpath::Error& e) {
    using fuelpath::errc;
    switch (e.code()) {
    case errc::io: return FP_ERR_IO;
    case errc::parse: return FP_ERR_PARSE;
    case errc::schema: return FP_ERR_SCHEMA;
    case errc::invariant_violation: return FP_ERR_INVARIANT;
    case errc::dangling_reference: return FP_ERR_REFERENCE;
    default: return FP_ERR_DOMAIN;
    }
}

char* copy_out(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
fp_status guarded(fp_engine* engine, Fn&& fn) {
    try {
        fn();
        return FP_OK;
    } catch (const fuelpath::Error& e) {
        if (engine) engine->last_error = e.what();
        else g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        if (engine) engine->last_error = e.what();
        else g_last_error = e.what();
        return FP_ERR_DOMAIN;
    }
}

fp_status create_engine(const std::string& json_text, fp_engine** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return FP_ERR_BAD_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto engine = new fp_engine{fuelpath::load_dataset(json_text), {}};
        *out = engine;
        return FP_OK;
    } catch (const fuelpath::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FP_ERR_DOMAIN;
    }
}

fuelpath::RunConfig parse_options(const fuelpath::Dataset& ds, const char* options_json) {
    fuelpath::RunConfig cfg;
    cfg.fossil_price = ds.constants.fossil_jet_price;
    if (!options_json || !*options_json) return cfg;
    json doc = json::parse(options_json); // parse errors handled by guarded()
    if (!doc.is_object())
        fuelpath::raise(fuelpath::errc::schema, "options: expected a JSON object");
    if (doc.contains("z45_years")) cfg.scenario.z45_duration_years = doc["z45_years"].get<int>();
    if (doc.contains("lcfs_price")) cfg.scenario.lcfs_price = doc["lcfs_price"].get<double>();
    bool rins = false;
    if (doc.contains("rin_d5")) { cfg.scenario.rin_d5 = doc["rin_d5"].get<double>(); rins = true; }
    if (doc.contains("rin_d3")) { cfg.scenario.rin_d3 = doc["rin_d3"].get<double>(); rins = true; }
    if (doc.contains("rin_d6")) { cfg.scenario.rin_d6 = doc["rin_d6"].get<double>(); rins = true; }
    cfg.scenario_rins_set = rins;
    if (doc.contains("lcfs_benchmark"))
        cfg.scenario.lcfs_benchmark = doc["lcfs_benchmark"].get<double>();
    else
        cfg.scenario.lcfs_benchmark = ds.policy.lcfs_benchmark_2030;
    if (doc.contains("fossil_price")) cfg.fossil_price = doc["fossil_price"].get<double>();
    if (doc.contains("p6_dual_credit")) cfg.what_if.p6_dual_credit = doc["p6_dual_credit"].get<bool>();
    if (doc.contains("p6_co2_sale_price"))
        cfg.what_if.p6_co2_sale_price = doc["p6_co2_sale_price"].get<double>();
    if (doc.contains("format")) {
        const std::string f = doc["format"].get<std::string>();
        if (f == "csv") cfg.format = fuelpath::ReportFormat::csv;
        else if (f == "json") cfg.format = fuelpath::ReportFormat::json;
        else fuelpath::raise(fuelpath::errc::schema, "options.format: expected csv or json");
    }
    if (doc.contains("pathways"))
        for (const auto& p : doc["pathways"])
            cfg.pathway_filter.push_back(p.get<std::string>());
    cfg.scenario.check(ds.finance.book_life_years);
    return cfg;
}

std::string bundle_to_json(const fuelpath::FileBundle& bundle) {
    json files = json::array();
    for (const auto& [name, content] : bundle)
        files.push_back({{"name", name}, {"content", content}});
    return json{{"files", files}}.dump(2);
}

} // namespace

extern "C" {

fp_status fp_engine_create_from_json(const char* text, fp_engine** out) {
    if (!text) {
        g_last_error = "null dataset text";
        return FP_ERR_BAD_ARGUMENT;
    }
    return create_engine(text, out);
}

fp_status fp_engine_create_from_file(const char* path, fp_engine** out) {
    if (!path) {
        g_last_error = "null dataset path";
        return FP_ERR_BAD_ARGUMENT;
    }
    if (!out) {
        g_last_error = "null output pointer";
        return FP_ERR_BAD_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto engine = new fp_engine{fuelpath::load_dataset_file(path), {}};
        *out = engine;
        return FP_OK;
    } catch (const fuelpath::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FP_ERR_DOMAIN;
    }
}

fp_status fp_engine_create_builtin(fp_engine** out) {
    return create_engine(fuelpath::builtin_dataset_json(), out);
}

void fp_engine_free(fp_engine* engine) { delete engine; }

const char* fp_last_error(const fp_engine* engine) {
    return engine ? engine->last_error.c_str() : g_last_error.c_str();
}

const char* fp_last_global_error(void) { return g_last_error.c_str(); }

const char* fp_version(void) { return "1.0.0"; }

fp_status fp_crf(double wacc, int years, double* out) {
    if (!out) return FP_ERR_BAD_ARGUMENT;
    return guarded(nullptr, [&] { *out = fuelpath::finance::crf(wacc, years); });
}

fp_status fp_derating_factor(double wacc, int policy_years, int book_life, double* out) {
    if (!out) return FP_ERR_BAD_ARGUMENT;
    return guarded(nullptr, [&] {
        *out = fuelpath::finance::derating_factor(wacc, policy_years, book_life);
    });
}

fp_status fp_pathway_lcof(fp_engine* engine, const char* pathway_id,
                          const char* options_json, double* out) {
    if (!engine || !pathway_id || !out) return FP_ERR_BAD_ARGUMENT;
    return guarded(engine, [&] {
        const auto cfg = parse_options(engine->dataset, options_json);
        const auto& p = engine->dataset.pathway(pathway_id);
        if (p.product == "h2")
            *out = fuelpath::lcof::lcof_h2(engine->dataset, p, cfg.what_if).breakdown.net();
        else
            *out = fuelpath::lcof::lcof_slf(engine->dataset, p, cfg.scenario, cfg.what_if)
                       .breakdown.net();
    });
}

fp_status fp_pathway_ci(fp_engine* engine, const char* pathway_id, double* out) {
    if (!engine || !pathway_id || !out) return FP_ERR_BAD_ARGUMENT;
    return guarded(engine, [&] {
        const auto& p = engine->dataset.pathway(pathway_id);
        if (p.product == "h2")
            *out = fuelpath::emissions::h2_ci(engine->dataset, p);
        else
            *out = fuelpath::emissions::slf_ci(engine->dataset, p);
    });
}

fp_status fp_report_lcof(fp_engine* engine, const char* options_json, char** out) {
    if (!engine || !out) return FP_ERR_BAD_ARGUMENT;
    return guarded(engine, [&] {
        const auto cfg = parse_options(engine->dataset, options_json);
        *out = copy_out(bundle_to_json(fuelpath::reports::lcof_report(engine->dataset, cfg)));
    });
}

fp_status fp_report_sweep(fp_engine* engine, const char* options_json, char** out) {
    if (!engine || !out) return FP_ERR_BAD_ARGUMENT;
    return guarded(engine, [&] {
        const auto cfg = parse_options(engine->dataset, options_json);
        *out = copy_out(bundle_to_json(fuelpath::reports::sweep_report(engine->dataset, cfg)));
    });
}

fp_status fp_report_lscm(fp_engine* engine, const char* options_json, char** out) {
    if (!engine || !out) return FP_ERR_BAD_ARGUMENT;
    return guarded(engine, [&] {
        const auto cfg = parse_options(engine->dataset, options_json);
        *out = copy_out(bundle_to_json(fuelpath::reports::lscm_report(engine->dataset, cfg)));
    });
}

fp_status fp_report_verify(fp_engine* engine, char** out) {
    if (!engine || !out) return FP_ERR_BAD_ARGUMENT;
    bool passed = false;
    const fp_status st = guarded(engine, [&] {
        const auto report = fuelpath::verify::run_all(engine->dataset);
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"criterion", c.criterion},
                              {"name", c.name},
                              {"value", c.value},
                              {"expected", c.expected},
                              {"passed", c.passed}});
        *out = copy_out(json{{"passed", report.all_passed()},
                             {"failures", report.failures()},
                             {"checks", checks}}
                            .dump(2));
        passed = report.all_passed();
    });
    if (st != FP_OK) return st;
    if (!passed) {
        engine->last_error = "verification checks failed";
        return FP_ERR_VERIFY;
    }
    return FP_OK;
}

void fp_string_free(char* s) { delete[] s; }

} // extern "C"
