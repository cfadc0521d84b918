#include <doctest.h>

#include <cmath>

#include "fuelpath/derivations.hpp"
#include "fuelpath/emissions.hpp"

using namespace fuelpath;

namespace {

const Dataset& ds() {
    static Dataset d = load_dataset(builtin_dataset_json());
    return d;
}

double h2ci(const char* id) { return emissions::h2_ci(ds(), ds().pathway(id)); }
double slfci_gj(const char* id) { return emissions::slf_ci_per_gj(ds(), ds().pathway(id)); }

} // namespace

TEST_CASE("hydrogen pathway carbon intensities") {
    CHECK(h2ci("P1") == doctest::Approx(11.0).epsilon(0.03));
    CHECK(h2ci("P2") == doctest::Approx(3.3).epsilon(0.06));
    CHECK(h2ci("P3") == doctest::Approx(2.9).epsilon(0.06));
    CHECK(h2ci("P4") == 0.0);
    CHECK(h2ci("P5") == doctest::Approx(1.284).epsilon(1e-3));
    // brute-force carbon balance for the BGCCS route:
    // (upstream - captured biogenic) * 0.142
    const double expected = (5.08 * 1.78 - 0.87 * 1.78 * 87.9) * 0.142;
    CHECK(h2ci("P6") == doctest::Approx(expected).epsilon(1e-9));
    CHECK(h2ci("P6") == doctest::Approx(-18.0).epsilon(5e-3));
}

TEST_CASE("h2_ci rejects SLF pathways and vice versa") {
    CHECK_THROWS_AS(emissions::h2_ci(ds(), ds().pathway("P9")), Error);
    CHECK_THROWS_AS(emissions::slf_ci(ds(), ds().pathway("P1")), Error);
}

TEST_CASE("SLF carbon intensities") {
    CHECK(slfci_gj("P9") == 0.0);
    CHECK(slfci_gj("P7") == doctest::Approx(1.47 * 22.932).epsilon(1e-6));
    CHECK(slfci_gj("P10") == doctest::Approx(13.292).epsilon(1e-3));
    CHECK(slfci_gj("P11") == doctest::Approx(-119.107).epsilon(1e-3));
    CHECK(slfci_gj("P12") == doctest::Approx(10.262).epsilon(1e-3));
    CHECK(slfci_gj("P13") == doctest::Approx(-85.315).epsilon(1e-3));
    CHECK(slfci_gj("P14") == doctest::Approx(54.5).epsilon(1e-9));
    CHECK(slfci_gj("P15") == doctest::Approx(19.62).epsilon(1e-9));
    // statutory basis: x1.05 (HHV->LHV), x1.055 (GJ->MMBtu)
    CHECK(emissions::slf_ci(ds(), ds().pathway("P14")) ==
          doctest::Approx(54.5 * 1.05 * 1.055).epsilon(1e-9));
}

TEST_CASE("carbon ledger balances for all pathways") {
    for (const auto& p : ds().pathways) {
        const CarbonLedger led = emissions::carbon_ledger(ds(), p);
        const double scale = std::max(1.0, std::abs(led.sources()));
        CHECK(std::abs(led.sources() - led.sinks()) / scale <= 1e-9);
    }
}

TEST_CASE("CCS variant always beats its non-CCS twin on CI") {
    CHECK(h2ci("P6") < h2ci("P5"));
    CHECK(h2ci("P2") < h2ci("P1"));
    CHECK(h2ci("P3") < h2ci("P1"));
    CHECK(slfci_gj("P13") < slfci_gj("P12"));
    CHECK(slfci_gj("P15") < slfci_gj("P14"));
    CHECK(slfci_gj("P11") < slfci_gj("P10"));
}

TEST_CASE("orderings stated for the SLF set") {
    // P14 is the dirtiest SLF pathway
    for (const char* id : {"P7", "P8", "P9", "P10", "P11", "P12", "P13", "P15"})
        CHECK(slfci_gj(id) < slfci_gj("P14"));
    // the less efficient two-facility CCS chain is more negative than the
    // integrated one, and the non-CCS twin sits above the integrated route
    CHECK(slfci_gj("P11") < slfci_gj("P13"));
    CHECK(slfci_gj("P10") > slfci_gj("P12"));
}

TEST_CASE("45Z emissions-rate CI excludes 45Q-monetized carbon") {
    // P15's fermentation CO2 is paid under 45Q: its 45Z CI reverts to the
    // unabated corn-ethanol figure and the credit clamps to zero
    CHECK(emissions::slf_ci_45z(ds(), ds().pathway("P15"), false) ==
          doctest::Approx(54.5 * 1.05 * 1.055).epsilon(1e-9));
    // P11 claims 45V upstream, so its stored carbon stays in the 45Z CI
    CHECK(emissions::slf_ci_45z(ds(), ds().pathway("P11"), false) ==
          doctest::Approx(-131.94).epsilon(1e-3));
    // P7's upstream SMR-CCS picks 45Q; adding back its stored carbon pushes
    // the 45Z CI far above the pivot
    CHECK(emissions::slf_ci_45z(ds(), ds().pathway("P7"), true) > 50.0);
    CHECK(emissions::slf_ci_45z(ds(), ds().pathway("P9"), false) > 50.0);
}

TEST_CASE("basis conversions round-trip to 1e-12") {
    const CiBasis bases[] = {CiBasis::per_gj_hhv, CiBasis::per_gj_lhv,
                             CiBasis::per_mmbtu_lhv, CiBasis::per_gal_slf};
    for (CiBasis from : bases) {
        for (CiBasis to : bases) {
            for (double v : {-119.1, 0.0, 13.29, 54.5}) {
                const double there = emissions::convert_slf_ci(ds(), v, from, to);
                const double back = emissions::convert_slf_ci(ds(), there, to, from);
                CHECK(std::abs(back - v) <= 1e-12 * std::max(1.0, std::abs(v)));
            }
        }
    }
}

TEST_CASE("ethanol with CCS upstream CI") {
    CHECK(emissions::ethanol_ccs_ci() == 18.0);
    CHECK(emissions::ethanol_ccs_ci(0.0) == 50.0); // no capture reverts to corn ethanol
    const auto d = derivations::derive_ethanol_ccs_ci();
    CHECK(d.capturable == 32.0);
}

TEST_CASE("appendix fuel CI at design efficiencies") {
    // with the 1.05 HHV/LHV factor on the fuel energy
    CHECK(emissions::appendix_slf_ci(0.5, true).ci == doctest::Approx(-91.8).epsilon(1e-3));
    CHECK(emissions::appendix_slf_ci(0.2, true).ci == doctest::Approx(-322.0).epsilon(1e-3));
    // without it the figure labels are reproduced instead
    CHECK(emissions::appendix_slf_ci(0.5, false).ci == doctest::Approx(-99.4).epsilon(1e-3));
    CHECK(emissions::appendix_slf_ci(0.2, false).ci == doctest::Approx(-341.2).epsilon(1e-3));
    CHECK_THROWS_AS(emissions::appendix_slf_ci(0.0, true), Error);

    // structural bound: stored carbon cannot exceed the biomass carbon input
    for (double eta : {0.5, 0.4, 0.3, 0.2, 0.1}) {
        const auto c = emissions::appendix_slf_ci(eta, true);
        CHECK(c.ci >= -1741.67 * 0.87 / c.energy_slf_mmbtu - 1e-9);
    }
}
