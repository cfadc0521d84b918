#include "fuelpath/quantity.hpp"

namespace fuelpath {

namespace {

bool is_energy(Dimension d) {
    return d == Dimension::energy_hhv || d == Dimension::energy_lhv;
}

} // namespace

Quantity convert(const Quantity& q, const Unit& target,
                 const std::optional<FuelProperties>& props) {
    const Dimension from = q.dimension();
    const Dimension to = target.dimension;

    if (from == to)
        return Quantity(q.canonical() / target.scale, target);

    if (is_energy(from) && is_energy(to)) {
        if (!props)
            raise(errc::missing_fuel_properties,
                  "HHV<->LHV conversion needs fuel-specific properties");
        const double gj = q.canonical();
        // 1 unit of fuel holds ratio x more HHV energy than LHV energy.
        const double converted = (from == Dimension::energy_hhv)
                                     ? gj / props->hhv_lhv_ratio
                                     : gj * props->hhv_lhv_ratio;
        return Quantity(converted / target.scale, target);
    }

    if (from == Dimension::mass && is_energy(to)) {
        if (!props)
            raise(errc::missing_fuel_properties,
                  "mass->energy conversion needs fuel-specific properties");
        double gj_hhv = q.canonical() * props->hhv_gj_per_tonne;
        if (to == Dimension::energy_lhv) gj_hhv /= props->hhv_lhv_ratio;
        return Quantity(gj_hhv / target.scale, target);
    }

    if (is_energy(from) && to == Dimension::mass) {
        if (!props)
            raise(errc::missing_fuel_properties,
                  "energy->mass conversion needs fuel-specific properties");
        double gj_hhv = q.canonical();
        if (from == Dimension::energy_lhv) gj_hhv *= props->hhv_lhv_ratio;
        return Quantity(gj_hhv / props->hhv_gj_per_tonne / target.scale, target);
    }

    raise(errc::incompatible_dimensions,
          std::string("cannot convert ") + q.unit().name + " to " + target.name);
}

double escalate_cost(double value, double index_from, double index_to) {
    if (index_from <= 0.0 || index_to <= 0.0)
        raise(errc::non_positive_index, "cost indices must be positive");
    return value * index_to / index_from;
}

} // namespace fuelpath
