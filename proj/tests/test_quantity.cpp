#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "fuelpath/quantity.hpp"

using namespace fuelpath;
using namespace fuelpath::units;

namespace {

FuelProperties h2_props() { return {"hydrogen", 142.0, 1.18, 0.0}; }
FuelProperties slf_props() { return {"slf", 45.5, 1.05, 67.7}; }

struct XorShift {
    uint64_t state;
    explicit XorShift(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (next() % 100000) / 100000.0;
    }
    int pick(int n) { return static_cast<int>(next() % n); }
};

} // namespace

TEST_CASE("mass to energy uses the fuel's heating value") {
    Quantity one_kg(1.0, KG);
    const Quantity gj = convert(one_kg, GJ_HHV, h2_props());
    CHECK(gj.value() == doctest::Approx(0.142).epsilon(1e-12));
}

TEST_CASE("identity conversion returns the same value") {
    Quantity q(1.0, GJ_HHV);
    CHECK(convert(q, GJ_HHV).value() == 1.0);
}

TEST_CASE("HHV to LHV divides by the fuel ratio") {
    Quantity q(1.0, GJ_HHV);
    const Quantity lhv = convert(q, GJ_LHV, slf_props());
    CHECK(lhv.value() == doctest::Approx(1.0 / 1.05).epsilon(1e-12));
    const Quantity back = convert(lhv, GJ_HHV, slf_props());
    CHECK(back.value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("HHV<->LHV without fuel properties is an error") {
    Quantity q(1.0, GJ_HHV);
    CHECK_THROWS_WITH_AS(static_cast<void>(convert(q, GJ_LHV)),
                         doctest::Contains("fuel-specific"), Error);
    try {
        static_cast<void>(convert(q, GJ_LHV));
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_fuel_properties);
    }
}

TEST_CASE("energy round-trips are exact to 1e-12") {
    const std::vector<Unit> energy = {GJ_HHV, MMBTU_HHV, KWH_HHV, MWH_HHV, MJ_HHV};
    XorShift rng(0x5eed5eedULL);
    for (int i = 0; i < 200; ++i) {
        const Unit& a = energy[rng.pick(energy.size())];
        const Unit& b = energy[rng.pick(energy.size())];
        const double v = rng.uniform(1e-3, 1e6);
        const Quantity q(v, a);
        const double round_trip = convert(convert(q, b), a).value();
        CHECK(std::abs(round_trip - v) <= 1e-12 * std::abs(v));
    }
}

TEST_CASE("mixed-dimension sums are rejected") {
    XorShift rng(0xabcdefULL);
    const std::vector<Unit> all = {GJ_HHV, GJ_LHV, TONNE, GALLON, USD, YEAR};
    int rejected = 0, attempted = 0;
    for (int i = 0; i < 300; ++i) {
        const Unit& a = all[rng.pick(all.size())];
        const Unit& b = all[rng.pick(all.size())];
        if (a.dimension == b.dimension) continue;
        ++attempted;
        try {
            Quantity sum = Quantity(rng.uniform(0, 10), a) + Quantity(rng.uniform(0, 10), b);
            (void)sum;
        } catch (const Error& e) {
            if (e.code() == errc::incompatible_dimensions) ++rejected;
        }
    }
    CHECK(attempted > 0);
    CHECK(rejected == attempted);
}

TEST_CASE("same-dimension addition rescales onto the left unit") {
    const Quantity total = Quantity(1.0, GJ_HHV) + Quantity(1.0, MMBTU_HHV);
    CHECK(total.value() == doctest::Approx(2.055).epsilon(1e-12));
}

TEST_CASE("fuel property invariants") {
    FuelProperties bad{"x", 10.0, 0.9, 5.0};
    CHECK_THROWS_AS(bad.check(), Error);
    FuelProperties neg{"x", 10.0, 1.1, -1.0};
    CHECK_THROWS_AS(neg.check(), Error);
    CHECK_NOTHROW(slf_props().check());
}

TEST_CASE("cost escalation by index ratio") {
    CHECK(escalate_cost(100.0, 542.0, 576.0) == doctest::Approx(106.27).epsilon(1e-4));
    CHECK(escalate_cost(543.0, 542.0, 542.0) == 543.0);
    // inverse of the CEPCI adjustment applied to the SMR capex figure
    CHECK(escalate_cost(543.0, 576.0, 542.0) == doctest::Approx(510.95).epsilon(1e-4));
    CHECK_THROWS_AS(escalate_cost(1.0, 0.0, 576.0), Error);
    CHECK_THROWS_AS(escalate_cost(1.0, 542.0, -1.0), Error);
}
