#include "qlitho/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qlitho {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

cplx polar_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

} // namespace

Geometry::Geometry(double l1, double l2, double x1, double x2) : l1_(l1), l2_(l2), x1_(x1), x2_(x2) {
    if (!(l1 >= 0.0 && l2 >= 0.0 && x1 >= 0.0 && x2 >= 0.0))
        throw std::invalid_argument("Geometry: path lengths must be >= 0");
}

BeamsplitterCoefficients field_coefficients(const Geometry& geom, double nu) {
    const double k = UnitSystem::k0() + nu; // linearized dispersion, c = 1
    const cplx i{0.0, 1.0};
    const cplx arm_a = polar_phase(k * geom.l1());
    const cplx arm_b = polar_phase(k * geom.l2());
    return {
        kInvSqrt2 * arm_a * polar_phase(k * geom.x2()),
        i * kInvSqrt2 * arm_a * polar_phase(k * geom.x1()),
        kInvSqrt2 * arm_b * polar_phase(k * geom.x1()),
        i * kInvSqrt2 * arm_b * polar_phase(k * geom.x2()),
    };
}

PathAmplitudes path_amplitudes_plane_wave(const Geometry& geom) {
    const double k0 = UnitSystem::k0();
    const cplx i{0.0, 1.0};
    const cplx common = polar_phase(k0 * (geom.l() + geom.x()));
    return {
        common,
        -common,
        i * common * polar_phase(2.0 * k0 * geom.dx()),
        i * common * polar_phase(-2.0 * k0 * geom.dx()),
    };
}

PathAmplitudes path_amplitudes(const Geometry& geom, const CorrelationFunction& corr) {
    const double k0 = UnitSystem::k0();
    const double dl = geom.dl();
    const double dx = geom.dx();
    const cplx i{0.0, 1.0};
    const cplx common = polar_phase(k0 * (geom.l() + geom.x()));
    const cplx u_same_output = corr(-dl);
    return {
        common * corr(2.0 * dx - dl),
        -common * corr(-2.0 * dx - dl),
        i * common * polar_phase(2.0 * k0 * dx) * u_same_output,
        i * common * polar_phase(-2.0 * k0 * dx) * u_same_output,
    };
}

cplx two_photon_amplitude(const Geometry& geom, const CorrelationFunction& corr) {
    const double k0 = UnitSystem::k0();
    const double dl = geom.dl();
    const double dx = geom.dx();
    const cplx pair_diff = corr(2.0 * dx - dl) - corr(-2.0 * dx - dl);
    const cplx same_output = cplx{0.0, 2.0} * std::cos(2.0 * k0 * dx) * corr(-dl);
    return polar_phase(k0 * (geom.l() + geom.x())) * (pair_diff + same_output);
}

cplx two_photon_amplitude(const Geometry& geom, const CorrelationFunction& corr,
                          const PumpEnvelope& env, double lx_ref) {
    return env.value(geom.l() + geom.x() - lx_ref) * two_photon_amplitude(geom, corr);
}

double absorption_rate(const Geometry& geom, const CorrelationFunction& corr) {
    return std::norm(two_photon_amplitude(geom, corr));
}

double absorption_rate(const Geometry& geom, const CorrelationFunction& corr,
                       const PumpEnvelope& env, double lx_ref) {
    return std::norm(two_photon_amplitude(geom, corr, env, lx_ref));
}

double intensity(const Geometry& geom, const NonlinearCrystal& crystal,
                 const SignalSpectrum& spectrum, const FrequencyGrid& grid) {
    const double dx = geom.dx();
    double odd_sum = 0.0;
    double background = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double nu = grid.node(j);
        const double f = signal_amplitude(spectrum, nu);
        const double g = grid.weight(j) * std::norm(centered_phase_matching(crystal, nu)) * f * f;
        background += g;
        odd_sum += g * std::sin(2.0 * nu * dx);
    }
    if (background == 0.0)
        throw std::invalid_argument("intensity: grid does not resolve the spectrum");
    return 1.0 - std::cos(2.0 * UnitSystem::k0() * dx) * odd_sum / background;
}

double classical_fringe(double dx) {
    const double c = std::cos(UnitSystem::k0() * dx);
    return c * c;
}

std::vector<FringeSample> fringe_scan(const Geometry& geom_template, const CorrelationFunction& corr,
                                      double dx_min, double dx_max, std::size_t n_samples) {
    if (n_samples < 2) throw std::invalid_argument("fringe_scan: n_samples must be >= 2");
    if (!(dx_max > dx_min)) throw std::invalid_argument("fringe_scan: dx_max must exceed dx_min");

    const double step = (dx_max - dx_min) / static_cast<double>(n_samples);
    std::vector<FringeSample> samples;
    samples.reserve(n_samples);
    for (std::size_t j = 0; j < n_samples; ++j) {
        const double dx = dx_min + static_cast<double>(j) * step;
        const Geometry g = geom_template.with_substrate_dx(dx);
        samples.push_back({dx, absorption_rate(g, corr),
                           intensity(g, corr.crystal(), corr.spectrum(), corr.grid())});
    }
    return samples;
}

double fringe_visibility(const Geometry& geom_template, const CorrelationFunction& corr,
                         std::size_t n_samples) {
    if (n_samples < 64) throw std::invalid_argument("fringe_visibility: need >= 64 samples per period");
    const double period = 0.25; // lambda0 / 4 in internal units
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t j = 0; j < n_samples; ++j) {
        const double dx = static_cast<double>(j) * period / static_cast<double>(n_samples);
        const double a = absorption_rate(geom_template.with_substrate_dx(dx), corr);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    return (hi - lo) / (hi + lo);
}

} // namespace qlitho
