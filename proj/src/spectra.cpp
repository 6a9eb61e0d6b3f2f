#include "qlitho/spectra.hpp"

#include <cmath>

namespace qlitho {

namespace {

constexpr double kSeriesThreshold = 1e-6;

// (1 - exp(-i p)) / (i p) without cancellation: the real part is sin(p)/p
// and the imaginary part -(1 - cos p)/p = -2 sin^2(p/2)/p.
cplx h_of_phase(double p) {
    if (std::abs(p) < kSeriesThreshold) {
        // second-order series, truncation ~ p^3/24
        return {1.0 - p * p / 6.0, -0.5 * p + p * p * p / 24.0};
    }
    return {std::sin(p) / p, -2.0 * std::sin(0.5 * p) * std::sin(0.5 * p) / p};
}

double sinc_stable(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace

double detuning_mismatch(const NonlinearCrystal& crystal, double nu) {
    if (crystal.kind() == CrystalKind::TypeI) return -crystal.d_prime() * nu * nu;
    return crystal.d_const() * nu;
}

cplx phase_matching_function(const NonlinearCrystal& crystal, double nu) {
    return h_of_phase(crystal.length() * detuning_mismatch(crystal, nu));
}

double group_delay_offset(const NonlinearCrystal& crystal) {
    if (crystal.kind() == CrystalKind::TypeII) return 0.5 * crystal.length() * crystal.d_const();
    return 0.0;
}

cplx centered_phase_matching(const NonlinearCrystal& crystal, double nu) {
    if (crystal.kind() == CrystalKind::TypeII) {
        // h(nu) exp(i nu L D / 2) collapses to a real sinc; evaluating it
        // directly keeps the density exactly real and even node by node.
        return {sinc_stable(0.5 * crystal.length() * crystal.d_const() * nu), 0.0};
    }
    return phase_matching_function(crystal, nu);
}

double signal_amplitude(const SignalSpectrum& spectrum, double nu) {
    if (spectrum.shape() == SpectrumShape::Gaussian) {
        const double s = spectrum.sigma();
        return std::exp(-nu * nu / (2.0 * s * s));
    }
    return std::abs(nu) <= spectrum.sigma() ? 1.0 : 0.0;
}

cplx combined_spectral_density(const NonlinearCrystal& crystal, const SignalSpectrum& spectrum,
                               double nu) {
    const double f = signal_amplitude(spectrum, nu);
    return centered_phase_matching(crystal, nu) * (f * f);
}

} // namespace qlitho
