#pragma once

#include <stdexcept>
#include <string>

namespace fuelpath {

enum class errc {
    io,
    parse,
    schema,
    invariant_violation,
    dangling_reference,
    incompatible_dimensions,
    missing_fuel_properties,
    non_positive_index,
    invalid_years,
    policy_exceeds_life,
    unknown_variant,
    non_positive_size,
    zero_capacity_factor,
    not_hydrogen_pathway,
    not_slf_pathway,
    claim_violation,
    ineligible_rfs_category,
    no_mitigation,
    degenerate_points,
    no_crossing,
};

/// Single exception type for the whole library; carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace fuelpath
