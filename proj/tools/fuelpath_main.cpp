// fuelpath CLI: thin front-end over the C API. Builds an options document
// from the command line, asks the engine for a report bundle, and writes
// the files out.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuelpath.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    std::string dataset;
    std::string out_dir = "out";
    std::string format = "csv";
    int z45_years = -1;
    double lcfs_price = -1.0;
    double rin_d5 = -1.0, rin_d3 = -1.0, rin_d6 = -1.0;
    double fossil_price = -1.0;
    double p6_co2_sale_price = -1.0;
    bool p6_dual_credit = false;
    std::vector<std::string> pathways;
};

std::string options_json(const Options& o) {
    json doc = json::object();
    if (o.z45_years >= 0) doc["z45_years"] = o.z45_years;
    if (o.lcfs_price >= 0.0) doc["lcfs_price"] = o.lcfs_price;
    if (o.rin_d5 >= 0.0) doc["rin_d5"] = o.rin_d5;
    if (o.rin_d3 >= 0.0) doc["rin_d3"] = o.rin_d3;
    if (o.rin_d6 >= 0.0) doc["rin_d6"] = o.rin_d6;
    if (o.fossil_price >= 0.0) doc["fossil_price"] = o.fossil_price;
    if (o.p6_dual_credit) doc["p6_dual_credit"] = true;
    if (o.p6_co2_sale_price >= 0.0) doc["p6_co2_sale_price"] = o.p6_co2_sale_price;
    doc["format"] = o.format;
    if (!o.pathways.empty()) doc["pathways"] = o.pathways;
    return doc.dump();
}

fp_engine* open_engine(const Options& o) {
    std::string path = o.dataset;
    if (path.empty()) {
        if (const char* env = std::getenv("FUELPATH_DATASET")) path = env;
    }
    fp_engine* engine = nullptr;
    fp_status st;
    if (path.empty()) {
        st = fp_engine_create_builtin(&engine);
    } else {
        st = fp_engine_create_from_file(path.c_str(), &engine);
    }
    if (st != FP_OK) {
        std::cerr << "error: " << fp_last_global_error() << "\n";
        return nullptr;
    }
    return engine;
}

int write_bundle(const char* doc, const std::string& out_dir) {
    const json parsed = json::parse(doc);
    fs::create_directories(out_dir);
    for (const auto& file : parsed.at("files")) {
        const fs::path path = fs::path(out_dir) / file.at("name").get<std::string>();
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            return 1;
        }
        out << file.at("content").get<std::string>();
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

int run_report(const Options& o,
               fp_status (*fn)(fp_engine*, const char*, char**)) {
    fp_engine* engine = open_engine(o);
    if (!engine) return 1;
    char* doc = nullptr;
    const fp_status st = fn(engine, options_json(o).c_str(), &doc);
    if (st != FP_OK) {
        std::cerr << "error: " << fp_last_error(engine) << "\n";
        fp_engine_free(engine);
        return 1;
    }
    const int rc = write_bundle(doc, o.out_dir);
    fp_string_free(doc);
    fp_engine_free(engine);
    return rc;
}

int run_verify(const Options& o) {
    fp_engine* engine = open_engine(o);
    if (!engine) return 1;
    char* doc = nullptr;
    const fp_status st = fp_report_verify(engine, &doc);
    if (st != FP_OK && st != FP_ERR_VERIFY) {
        std::cerr << "error: " << fp_last_error(engine) << "\n";
        fp_engine_free(engine);
        return 1;
    }
    const json report = json::parse(doc);
    fp_string_free(doc);
    fp_engine_free(engine);

    int criterion = 0;
    for (const auto& check : report.at("checks")) {
        const int c = check.at("criterion").get<int>();
        if (c != criterion) {
            criterion = c;
            std::cout << "criterion " << c << ":\n";
        }
        std::cout << "  [" << (check.at("passed").get<bool>() ? "PASS" : "FAIL") << "] "
                  << check.at("name").get<std::string>() << " = "
                  << check.at("value").get<double>() << " (expected "
                  << check.at("expected").get<std::string>() << ")\n";
    }
    const int failures = report.at("failures").get<int>();
    std::cout << (failures == 0 ? "all checks passed"
                                : std::to_string(failures) + " check(s) failed")
              << "\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuelpath: levelized cost, carbon intensity and policy-credit "
                 "modeling for hydrogen and synthetic liquid fuel pathways"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--dataset", o.dataset,
                        "dataset JSON (default: $FUELPATH_DATASET, else built-in)");
        cmd->add_option("--out", o.out_dir, "output directory")->capture_default_str();
        cmd->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };
    auto add_scenario = [&](CLI::App* cmd) {
        cmd->add_option("--z45-years", o.z45_years, "45Z credit duration, years");
        cmd->add_option("--lcfs", o.lcfs_price, "LCFS credit price, $/t CO2e");
        cmd->add_option("--rin-d5", o.rin_d5, "D5 RIN price, $/RIN");
        cmd->add_option("--rin-d3", o.rin_d3, "D3 RIN price, $/RIN");
        cmd->add_option("--rin-d6", o.rin_d6, "D6 RIN price, $/RIN");
        cmd->add_option("--fossil-price", o.fossil_price, "fossil jet price, $/gal");
        cmd->add_flag("--p6-dual-credit", o.p6_dual_credit,
                      "what-if: P6 claims 45V and 45Q simultaneously");
        cmd->add_option("--p6-co2-sale", o.p6_co2_sale_price,
                        "what-if: P6 sells excess captured CO2 at this price, $/t");
        cmd->add_option("--pathways", o.pathways, "restrict output to these pathway ids");
    };

    auto* lcof = app.add_subcommand("lcof", "itemized levelized costs per pathway");
    add_common(lcof);
    add_scenario(lcof);
    auto* sweep = app.add_subcommand("sweep", "45Z-duration sweep and competitiveness frontiers");
    add_common(sweep);
    add_scenario(sweep);
    auto* lscm = app.add_subcommand("lscm", "levelized subsidy per tonne of CO2 mitigated");
    add_common(lscm);
    add_scenario(lscm);
    auto* verify = app.add_subcommand("verify", "re-run derivation oracles and golden checks");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    if (lcof->parsed()) return run_report(o, fp_report_lcof);
    if (sweep->parsed()) return run_report(o, fp_report_sweep);
    if (lscm->parsed()) return run_report(o, fp_report_lscm);
    if (verify->parsed()) return run_verify(o);
    return 1;
}
