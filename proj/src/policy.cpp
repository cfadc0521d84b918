#include "fuelpath/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuelpath/dataset.hpp"

namespace fuelpath {

std::string to_string(Instrument i) {
    switch (i) {
    case Instrument::v45: return "45V";
    case Instrument::q45: return "45Q";
    case Instrument::z45: return "45Z";
    case Instrument::y45: return "45Y";
    case Instrument::b40: return "40B";
    case Instrument::methane_fee: return "methane_fee";
    case Instrument::rfs: return "RFS";
    case Instrument::lcfs: return "LCFS";
    }
    return "?";
}

std::string to_string(RfsCategory c) {
    switch (c) {
    case RfsCategory::none: return "none";
    case RfsCategory::d3: return "D3";
    case RfsCategory::d5: return "D5";
    case RfsCategory::d6: return "D6";
    }
    return "?";
}

void PolicySuite::check(int book_life_years) const {
    if (v45_tiers.empty())
        raise(errc::invariant_violation, "policy.v45_tiers: empty");
    // Tiers must be contiguous, non-overlapping and cover (-inf, ceiling).
    auto sorted = v45_tiers;
    std::sort(sorted.begin(), sorted.end(),
              [](const V45Tier& a, const V45Tier& b) { return a.ci_lower < b.ci_lower; });
    if (sorted.front().ci_lower != std::numeric_limits<double>::lowest())
        raise(errc::invariant_violation, "policy.v45_tiers: lowest tier must be open-ended");
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].ci_upper != sorted[i + 1].ci_lower)
            raise(errc::invariant_violation, "policy.v45_tiers: tiers must be contiguous");
    }
    for (const auto& t : sorted)
        if (t.rate_usd_per_kg < 0.0)
            raise(errc::invariant_violation, "policy.v45_tiers: negative rate");
    for (const auto& [v, r] : q45_rates)
        if (r < 0.0)
            raise(errc::invariant_violation, "policy.q45_rates: negative rate");
    for (int d : {dur_45q, dur_45v, dur_45y, dur_methane}) {
        if (d < 0 || d > book_life_years)
            raise(errc::invariant_violation, "policy.durations: outside [0, book_life]");
    }
    if (rfs_equivalence < 0.0 || lcfs_gal_energy_gj_lhv <= 0.0)
        raise(errc::invariant_violation, "policy: RFS/LCFS parameters invalid");
}

void FuelCreditScenario::check(int book_life_years) const {
    if (z45_duration_years < 0 || z45_duration_years > book_life_years)
        raise(errc::invariant_violation,
              "scenario.z45_duration must be in [0, book_life]");
    if (lcfs_price < 0.0 || rin_d3 < 0.0 || rin_d5 < 0.0 || rin_d6 < 0.0)
        raise(errc::invariant_violation, "scenario prices must be >= 0");
}

namespace policy {

double credit_45v(const PolicySuite& p, double ci) {
    for (const auto& tier : p.v45_tiers) {
        if (ci >= tier.ci_lower && ci < tier.ci_upper)
            return tier.rate_usd_per_kg;
    }
    return 0.0; // at/above the eligibility ceiling
}

double credit_45z_per_gal(const PolicySuite& p, double ci, double saf_fraction) {
    if (saf_fraction < 0.0 || saf_fraction > 1.0)
        raise(errc::invariant_violation, "credit_45z: saf_fraction outside [0,1]");
    const double blend = p.z45_saf_rate * saf_fraction + p.z45_other_rate * (1.0 - saf_fraction);
    const double emissions_factor = (p.z45_ci_pivot - ci) / p.z45_ci_pivot;
    return std::max(0.0, emissions_factor) * blend;
}

double credit_45q(const PolicySuite& p, Q45Variant variant, double mass_t) {
    if (mass_t < 0.0)
        raise(errc::invariant_violation, "credit_45q: mass must be >= 0");
    auto it = p.q45_rates.find(variant);
    if (it == p.q45_rates.end())
        raise(errc::unknown_variant, "credit_45q: variant has no configured rate");
    return mass_t * it->second;
}

double methane_fee_per_gj(double leak_rate_g_per_mj, double fee_usd_per_t) {
    if (leak_rate_g_per_mj < 0.0)
        raise(errc::invariant_violation, "methane_fee: leak rate must be >= 0");
    // g/MJ == kg/GJ; per tonne basis brings in the 1e-3.
    return leak_rate_g_per_mj * fee_usd_per_t * 1e-3;
}

NetPrice net_input_price_45y(double gross, double rate, double df) {
    const double net = gross - rate * df;
    if (net < 0.0) return {0.0, true};
    return {net, false};
}

double rfs_credit_per_gal(double rin_price, double equivalence) {
    if (rin_price < 0.0)
        raise(errc::invariant_violation, "rfs_credit: RIN price must be >= 0");
    return rin_price * equivalence;
}

double lcfs_credit_per_gal(double ci, double benchmark, double price, double gal_energy) {
    if (price < 0.0)
        raise(errc::invariant_violation, "lcfs_credit: price must be >= 0");
    return (benchmark - ci) * gal_energy * price / 1000.0;
}

double dac_co2_net_cost(double gross, double rate_45q, double df) {
    return gross - rate_45q * df;
}

std::vector<ClaimViolation> validate_claims(const Pathway& chain) {
    std::vector<ClaimViolation> out;
    // Each credit group yields one actual claim; at most one group touching
    // {45V, 45Q, 45Z} may be claimed per facility.
    int exclusive_groups = 0;
    for (const auto& group : chain.credit_groups) {
        bool exclusive = false;
        bool q45_only = true;
        for (auto c : group) {
            if (c == Instrument::v45 || c == Instrument::q45 || c == Instrument::z45)
                exclusive = true;
            if (c != Instrument::q45) q45_only = false;
        }
        // a 45Q-only group on a chain with upstream fermentation CCS belongs
        // to the feed plant, a separate facility
        if (exclusive && !(q45_only && chain.upstream_ccs)) ++exclusive_groups;
    }
    if (exclusive_groups > 1)
        out.push_back({chain.id,
                       "facility claims more than one of 45V/45Q/45Z"});
    if (chain.claims(Instrument::z45) && chain.product != "slf")
        out.push_back({chain.id, "45Z claimed on a non-liquid-fuel facility"});
    if (chain.rfs_category != RfsCategory::none) {
        const bool biomass_direct =
            chain.product == "slf" && chain.h2_source.empty() &&
            chain.co2_source != Co2Source::dac;
        if (!biomass_direct)
            out.push_back({chain.id, "RFS claimed on SLF not made directly from biomass",
                           errc::ineligible_rfs_category});
    }
    return out;
}

} // namespace policy
} // namespace fuelpath
