#include <doctest.h>

#include <json.hpp>

#include "fuelpath/dataset.hpp"
#include "fuelpath/derivations.hpp"
#include "fuelpath/lcof.hpp"
#include "fuelpath/verify.hpp"

using namespace fuelpath;
using nlohmann::json;

namespace {

json builtin_doc() { return json::parse(builtin_dataset_json()); }

} // namespace

TEST_CASE("builtin dataset loads with the full pathway and technology sets") {
    const Dataset ds = load_dataset(builtin_dataset_json());
    CHECK(ds.pathways.size() == 15);
    CHECK(ds.technologies.size() == 11);
    CHECK(ds.feedstocks.size() == 6);
    CHECK(ds.pathway("P11").co2_source == Co2Source::biogenic_internal);
    CHECK(ds.pathway("P15").upstream_ccs.has_value());
    CHECK(ds.finance.crf == 0.131);
}

TEST_CASE("missing feedstock reference is reported as dangling") {
    json doc = builtin_doc();
    doc["technologies"][4]["feedstock"] = "charcoal";
    try {
        load_dataset(doc.dump());
        FAIL("expected dangling_reference");
    } catch (const Error& e) {
        CHECK(e.code() == errc::dangling_reference);
    }
}

TEST_CASE("missing h2_source pathway is reported as dangling") {
    json doc = builtin_doc();
    doc["pathways"][8]["h2_source"] = "P99";
    try {
        load_dataset(doc.dump());
        FAIL("expected dangling_reference");
    } catch (const Error& e) {
        CHECK(e.code() == errc::dangling_reference);
    }
}

TEST_CASE("capture rate above one violates an invariant") {
    json doc = builtin_doc();
    doc["technologies"][5]["capture_rate"] = 1.2;
    try {
        load_dataset(doc.dump());
        FAIL("expected invariant_violation");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invariant_violation);
    }
}

TEST_CASE("schema errors carry the field path") {
    json doc = builtin_doc();
    doc["policy"].erase("v45_tiers");
    try {
        load_dataset(doc.dump());
        FAIL("expected schema error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::schema);
        CHECK(std::string(e.what()).find("v45_tiers") != std::string::npos);
    }

    json doc2 = builtin_doc();
    doc2["technologies"][0]["capex"]["unit"] = "EUR/kW";
    try {
        load_dataset(doc2.dump());
        FAIL("expected schema error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::schema);
        CHECK(std::string(e.what()).find("capex") != std::string::npos);
    }
}

TEST_CASE("non-JSON input is a parse error") {
    try {
        load_dataset("not json at all {");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse);
    }
}

TEST_CASE("integrated biomass-FTS derivation reproduces the dataset rows") {
    const Dataset ds = load_dataset(builtin_dataset_json());
    const double factor = derivations::integrated_mole_balance_factor();
    CHECK(factor == doctest::Approx(0.773).epsilon(1e-3));

    CHECK(derivations::derive_integrated_ifi(1.78, 1.47) ==
          doctest::Approx(ds.technology("int_biofts").ifi).epsilon(5e-3));
    CHECK(derivations::derive_integrated_ifi(1.0, 1.0) ==
          doctest::Approx(factor).epsilon(1e-12));

    const auto& bg = ds.technology("bg_h2");
    const auto& bgccs = ds.technology("bgccs_h2");
    const auto& rwgs = ds.technology("rwgs_fts");
    CHECK(derivations::derive_integrated_cost(bg.capex, rwgs.capex, rwgs.ifi, factor) ==
          doctest::Approx(ds.technology("int_biofts").capex).epsilon(2e-3));
    CHECK(derivations::derive_integrated_cost(bgccs.capex, rwgs.capex, rwgs.ifi, factor) ==
          doctest::Approx(ds.technology("int_biofts_ccs").capex).epsilon(2e-3));
    CHECK(derivations::derive_integrated_cost(bgccs.fom, rwgs.fom, rwgs.ifi, factor) ==
          doctest::Approx(ds.technology("int_biofts_ccs").fom).epsilon(5e-3));
    CHECK(derivations::derive_integrated_cost(bg.vom, rwgs.vom, rwgs.ifi, factor) ==
          doctest::Approx(ds.technology("int_biofts").vom).epsilon(2e-3));
    CHECK(derivations::derive_integrated_cost(0.0, 1004.0, 1.47, factor) == 1004.0);
}

TEST_CASE("ethanol-to-jet derivation reproduces the dataset row") {
    const Dataset ds = load_dataset(builtin_dataset_json());
    const auto etoh = derivations::derive_ethanol_to_jet_params();
    CHECK(etoh.ifi == doctest::Approx(1.09).epsilon(5e-3));
    CHECK(etoh.output_gj_per_hr == doctest::Approx(854.0).epsilon(2e-3));
    CHECK(etoh.capex == doctest::Approx(ds.technology("ethanol_to_jet").capex).epsilon(1e-2));
    CHECK(etoh.fom == doctest::Approx(25.8).epsilon(5e-3));
    CHECK(etoh.vom == doctest::Approx(ds.technology("ethanol_to_jet").vom).epsilon(5e-3));
}

TEST_CASE("power-law scaling") {
    CHECK(derivations::powerlaw_cost(86.7, 581.3, 29.9, 0.61) ==
          doctest::Approx(14.2).epsilon(2e-3));
    CHECK(derivations::powerlaw_cost(59.7, 223.9, 29.9, 0.41) ==
          doctest::Approx(26.2).epsilon(2e-3));
    CHECK(derivations::powerlaw_cost(5.0, 3.3, 3.3, 0.7) == 5.0);
    CHECK_THROWS_AS(derivations::powerlaw_cost(5.0, 0.0, 3.3, 0.7), Error);
}

TEST_CASE("compression cost derivation") {
    const auto c = derivations::derive_compression_cost();
    CHECK(c.capex_per_t == doctest::Approx(11.9).epsilon(5e-3));
    CHECK(c.opex_per_t == doctest::Approx(4.58).epsilon(2e-3));
    CHECK(c.total_per_t == doctest::Approx(17.0).epsilon(0.04));
}

TEST_CASE("biomass price and heating value are consistent with the $121/t figure") {
    const Dataset ds = load_dataset(builtin_dataset_json());
    const double per_tonne = ds.feedstock("biomass").price *
                             ds.constants.fuel_properties.at("biomass").hhv_gj_per_tonne;
    CHECK(per_tonne == doctest::Approx(121.0).epsilon(2e-3));
}

TEST_CASE("every shipped pathway passes claim validation at load") {
    const Dataset ds = load_dataset(builtin_dataset_json());
    for (const auto& p : ds.pathways)
        CHECK(policy::validate_claims(p).empty());
}

TEST_CASE("40B is representable but inert") {
    // no shipped pathway claims the expired aviation-fuel credit, but a
    // dataset listing it still loads and it changes no evaluation
    json doc = builtin_doc();
    doc["pathways"][13]["credits"] = json::array({"40B"});
    const Dataset ds = load_dataset(doc.dump());
    CHECK(ds.pathway("P14").claims(Instrument::b40));
    const Dataset base = load_dataset(builtin_dataset_json());
    CHECK(lcof::lcof_slf(ds, ds.pathway("P14")).breakdown.net() ==
          lcof::lcof_slf(base, base.pathway("P14")).breakdown.net());
}

TEST_CASE("verification catches a dataset drifted past the golden tolerances") {
    json doc = builtin_doc();
    doc["technologies"][0]["capex"]["value"] =
        doc["technologies"][0]["capex"]["value"].get<double>() * 1.25;
    const Dataset drifted = load_dataset(doc.dump());
    const auto report = verify::run_all(drifted);
    CHECK_FALSE(report.all_passed());
    bool p1_failed = false;
    for (const auto& c : report.checks)
        if (c.criterion == 2 && c.name.find("P1") != std::string::npos)
            p1_failed = !c.passed;
    CHECK(p1_failed);
}
