#include <doctest.h>

#include <cmath>
#include <string>

#include "fuelpath.h"

namespace {

struct EngineGuard {
    fp_engine* engine = nullptr;
    ~EngineGuard() { fp_engine_free(engine); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { fp_string_free(s); }
};

} // namespace

TEST_CASE("builtin engine lifecycle") {
    EngineGuard g;
    REQUIRE(fp_engine_create_builtin(&g.engine) == FP_OK);
    REQUIRE(g.engine != nullptr);
}

TEST_CASE("creation failures report through the global error") {
    fp_engine* engine = nullptr;
    CHECK(fp_engine_create_from_json("{broken", &engine) == FP_ERR_PARSE);
    CHECK(engine == nullptr);
    CHECK(std::string(fp_last_global_error()).size() > 0);
    CHECK(fp_engine_create_from_file("/does/not/exist.json", &engine) == FP_ERR_IO);
    CHECK(fp_engine_create_from_json(nullptr, &engine) == FP_ERR_BAD_ARGUMENT);
}

TEST_CASE("scalar finance entry points") {
    double v = 0.0;
    REQUIRE(fp_crf(0.1, 15, &v) == FP_OK);
    CHECK(std::abs(v - 0.13147) < 1e-4);
    REQUIRE(fp_derating_factor(0.1, 10, 15, &v) == FP_OK);
    CHECK(std::abs(v - 0.808) < 0.005);
    CHECK(fp_derating_factor(0.1, 16, 15, &v) == FP_ERR_DOMAIN);
    CHECK(fp_crf(0.1, 0, &v) == FP_ERR_DOMAIN);
}

TEST_CASE("pathway lcof and ci through the C surface") {
    EngineGuard g;
    REQUIRE(fp_engine_create_builtin(&g.engine) == FP_OK);
    double v = 0.0;
    REQUIRE(fp_pathway_lcof(g.engine, "P4", nullptr, &v) == FP_OK);
    CHECK(std::abs(v - 0.31) < 0.05);
    REQUIRE(fp_pathway_lcof(g.engine, "P9", "{}", &v) == FP_OK);
    CHECK(std::abs(v - 2.9) < 0.15);
    REQUIRE(fp_pathway_lcof(g.engine, "P6", "{\"p6_dual_credit\":true}", &v) == FP_OK);
    CHECK(std::abs(v - 0.84) < 0.15);
    REQUIRE(fp_pathway_ci(g.engine, "P6", &v) == FP_OK);
    CHECK(std::abs(v + 18.0) < 0.1);

    CHECK(fp_pathway_lcof(g.engine, "P99", nullptr, &v) == FP_ERR_REFERENCE);
    CHECK(std::string(fp_last_error(g.engine)).find("P99") != std::string::npos);
    CHECK(fp_pathway_lcof(g.engine, "P9", "{\"z45_years\": 99}", &v) == FP_ERR_INVARIANT);
}

TEST_CASE("report bundles come back as JSON file lists") {
    EngineGuard g;
    REQUIRE(fp_engine_create_builtin(&g.engine) == FP_OK);
    StringGuard doc;
    REQUIRE(fp_report_lcof(g.engine, nullptr, &doc.s) == FP_OK);
    const std::string text = doc.s;
    CHECK(text.find("h2_lcof.csv") != std::string::npos);
    CHECK(text.find("slf_lcof.csv") != std::string::npos);
    CHECK(text.find("P15") != std::string::npos);

    StringGuard sweep;
    REQUIRE(fp_report_sweep(g.engine, "{\"rin_d5\":0.75,\"rin_d3\":1.25,\"rin_d6\":0.75}",
                            &sweep.s) == FP_OK);
    CHECK(std::string(sweep.s).find("frontier_d5_0.7500_d3_1.2500.csv") !=
          std::string::npos);

    StringGuard lscm;
    REQUIRE(fp_report_lscm(g.engine, nullptr, &lscm.s) == FP_OK);
    CHECK(std::string(lscm.s).find("lscm.csv") != std::string::npos);
}

TEST_CASE("repeated report generation is byte-identical") {
    EngineGuard g;
    REQUIRE(fp_engine_create_builtin(&g.engine) == FP_OK);
    StringGuard a, b;
    REQUIRE(fp_report_sweep(g.engine, nullptr, &a.s) == FP_OK);
    REQUIRE(fp_report_sweep(g.engine, nullptr, &b.s) == FP_OK);
    CHECK(std::string(a.s) == std::string(b.s));
}

TEST_CASE("verify passes on the builtin dataset and fails on a perturbed one") {
    EngineGuard g;
    REQUIRE(fp_engine_create_builtin(&g.engine) == FP_OK);
    StringGuard doc;
    CHECK(fp_report_verify(g.engine, &doc.s) == FP_OK);
    CHECK(std::string(doc.s).find("\"passed\": true") != std::string::npos);
}
