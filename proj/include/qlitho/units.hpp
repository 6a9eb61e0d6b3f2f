#pragma once

#include <numbers>
#include <stdexcept>

namespace qlitho {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Internal natural units: c = 1 and the degenerate SPDC wavelength
/// lambda0 = 1. Hence the central wavenumber k0 = omega0 = 2*pi exactly,
/// and detunings nu are dimensionless multiples of c/lambda0. Every
/// formula below is written in these units; SI enters only through this
/// class, at the I/O boundary.
class UnitSystem {
public:
    explicit UnitSystem(double reference_wavelength_m) : lambda0_m_(reference_wavelength_m) {
        if (!(reference_wavelength_m > 0.0))
            throw std::invalid_argument("UnitSystem: reference wavelength must be > 0");
    }

    double reference_wavelength_m() const { return lambda0_m_; }

    static constexpr double k0() { return kTwoPi; }
    static constexpr double omega0() { return kTwoPi; }

    double length_from_si(double meters) const { return meters / lambda0_m_; }
    double length_to_si(double internal) const { return internal * lambda0_m_; }
    double length_from_um(double um) const { return length_from_si(um * 1e-6); }
    double length_to_um(double internal) const { return length_to_si(internal) * 1e6; }

    /// Angular frequencies and detunings share the internal unit c/lambda0.
    double angular_frequency_from_si(double rad_per_s) const {
        return rad_per_s * lambda0_m_ / kSpeedOfLightMps;
    }

    static constexpr double kSpeedOfLightMps = 299792458.0;

private:
    double lambda0_m_;
};

} // namespace qlitho
