#pragma once

#include <optional>
#include <string>

#include "fuelpath/errors.hpp"

namespace fuelpath {

/// Physical dimension of a quantity. HHV and LHV energy are deliberately
/// distinct dimensions: crossing between them needs a fuel-specific ratio.
enum class Dimension {
    energy_hhv,
    energy_lhv,
    mass,
    volume_gallon,
    currency,
    time_year,
};

/// A named unit: dimension plus the multiplier onto that dimension's
/// canonical unit (GJ, tonne, gal, USD, year).
struct Unit {
    Dimension dimension;
    double scale; // canonical units per 1 of this unit
    const char* name;

    friend bool operator==(const Unit& a, const Unit& b) {
        return a.dimension == b.dimension && a.scale == b.scale;
    }
};

namespace units {
inline constexpr Unit GJ_HHV{Dimension::energy_hhv, 1.0, "GJ_HHV"};
inline constexpr Unit MJ_HHV{Dimension::energy_hhv, 1e-3, "MJ_HHV"};
inline constexpr Unit MMBTU_HHV{Dimension::energy_hhv, 1.055, "MMBtu_HHV"};
inline constexpr Unit KWH_HHV{Dimension::energy_hhv, 3.6e-3, "kWh_HHV"};
inline constexpr Unit MWH_HHV{Dimension::energy_hhv, 3.6, "MWh_HHV"};
inline constexpr Unit GJ_LHV{Dimension::energy_lhv, 1.0, "GJ_LHV"};
inline constexpr Unit MJ_LHV{Dimension::energy_lhv, 1e-3, "MJ_LHV"};
inline constexpr Unit MMBTU_LHV{Dimension::energy_lhv, 1.055, "MMBtu_LHV"};
inline constexpr Unit TONNE{Dimension::mass, 1.0, "t"};
inline constexpr Unit KG{Dimension::mass, 1e-3, "kg"};
inline constexpr Unit GALLON{Dimension::volume_gallon, 1.0, "gal"};
inline constexpr Unit USD{Dimension::currency, 1.0, "USD"};
inline constexpr Unit YEAR{Dimension::time_year, 1.0, "yr"};
} // namespace units

/// Energy and carbon content of one fuel.
struct FuelProperties {
    std::string name;
    double hhv_gj_per_tonne = 0.0;
    double hhv_lhv_ratio = 1.0;          // >= 1
    double carbon_kg_per_gj_hhv = 0.0;   // kg CO2 per GJ_HHV

    void check() const {
        if (hhv_lhv_ratio < 1.0)
            raise(errc::invariant_violation,
                  "fuel '" + name + "': HHV/LHV ratio must be >= 1");
        if (carbon_kg_per_gj_hhv < 0.0)
            raise(errc::invariant_violation,
                  "fuel '" + name + "': carbon content must be >= 0");
    }
};

/// A value bound to a unit. All cross-unit arithmetic in the model goes
/// through this type; addition across dimensions is a hard error.
class Quantity {
public:
    Quantity(double value, Unit unit) : value_(value), unit_(unit) {}

    double value() const { return value_; }
    const Unit& unit() const { return unit_; }
    Dimension dimension() const { return unit_.dimension; }

    /// Value expressed in the dimension's canonical unit.
    double canonical() const { return value_ * unit_.scale; }

    Quantity operator+(const Quantity& other) const {
        require_same_dimension(other, "+");
        return Quantity(value_ + other.canonical() / unit_.scale, unit_);
    }
    Quantity operator-(const Quantity& other) const {
        require_same_dimension(other, "-");
        return Quantity(value_ - other.canonical() / unit_.scale, unit_);
    }
    Quantity operator*(double s) const { return Quantity(value_ * s, unit_); }
    Quantity operator/(double s) const { return Quantity(value_ / s, unit_); }

private:
    void require_same_dimension(const Quantity& other, const char* op) const {
        if (unit_.dimension != other.unit_.dimension)
            raise(errc::incompatible_dimensions,
                  std::string("operator ") + op + " between " + unit_.name +
                      " and " + other.unit_.name);
    }

    double value_;
    Unit unit_;
};

/// Convert a quantity to a target unit. Same-dimension conversions are pure
/// rescalings. HHV<->LHV and mass<->energy need fuel properties.
Quantity convert(const Quantity& q, const Unit& target,
                 const std::optional<FuelProperties>& props = std::nullopt);

/// Scale a cost between two index years: value * index_to / index_from.
double escalate_cost(double value, double index_from, double index_to);

} // namespace fuelpath
