#include "qlitho/resolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlitho/errors.hpp"

namespace qlitho {

namespace {

double sinc(double x) { return std::sin(x) / x; }

// root of sinc^{2n}(x) = 1/2 on (0, pi); sinc^{2n} falls monotonically
// from 1 to 0 there, so plain bisection brackets it
double half_power_point(std::size_t n) {
    const double target = std::pow(0.5, 1.0 / (2.0 * static_cast<double>(n)));
    double lo = 1e-12;
    double hi = std::numbers::pi - 1e-12;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        (sinc(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

PhaseMatchCase PhaseMatchCase::degenerate_collinear(Process process, double pump_omega) {
    if (!(pump_omega > 0.0))
        throw std::invalid_argument("PhaseMatchCase: pump frequency must be > 0");
    PhaseMatchCase pm;
    pm.process = process;
    pm.pump_omega = pump_omega;
    pm.pump_k = {0.0, 0.0, pump_omega};
    const double child = process == Process::SPDC ? 0.5 * pump_omega : pump_omega;
    pm.signal_omega = pm.idler_omega = child;
    pm.signal_k = pm.idler_k = {0.0, 0.0, child};
    return pm;
}

PhaseMatchResidual phase_match_residual(const PhaseMatchCase& pm) {
    const double pump_count = pm.process == Process::SPDC ? 1.0 : 2.0;
    return {
        pump_count * pm.pump_k - pm.signal_k - pm.idler_k,
        pump_count * pm.pump_omega - pm.signal_omega - pm.idler_omega,
    };
}

double degenerate_output_wavelength(Process process, double pump_wavelength) {
    if (!(pump_wavelength > 0.0))
        throw std::invalid_argument("degenerate_output_wavelength: pump wavelength must be > 0");
    return process == Process::SPDC ? 2.0 * pump_wavelength : pump_wavelength;
}

double efficiency_crossover_field(const Susceptibilities& s) {
    if (!(s.chi2 > 0.0)) throw std::invalid_argument("efficiency_crossover_field: chi2 must be > 0");
    if (s.chi3 < 0.0) throw std::invalid_argument("efficiency_crossover_field: chi3 must be >= 0");
    return s.chi3 / s.chi2;
}

DiffractionFwhm diffraction_fwhm(std::size_t order_n) {
    if (order_n < 1) throw std::invalid_argument("diffraction_fwhm: order must be >= 1");
    const double x = half_power_point(order_n);
    const double x1 = order_n == 1 ? x : half_power_point(1);
    return {x, 2.0 * x, x / x1};
}

double fringe_period(std::size_t power_n, double k) {
    if (power_n < 1) throw std::invalid_argument("fringe_period: power must be >= 1");
    if (!(k > 0.0)) throw std::invalid_argument("fringe_period: k must be > 0");
    return std::numbers::pi / k;
}

ExposureOrderFit exposure_order(std::span<const ExposurePoint> points) {
    if (points.size() < 2)
        throw DegenerateInputError("exposure_order: need at least two exposure points");
    for (const auto& p : points)
        if (!(p.intensity > 0.0 && p.threshold_time > 0.0))
            throw std::invalid_argument("exposure_order: intensities and times must be > 0");

    ExposureOrderFit fit;
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (points[a].intensity == points[b].intensity)
                throw DegenerateInputError("exposure_order: pair with equal intensities");
            fit.per_pair.push_back(std::log(points[a].threshold_time / points[b].threshold_time) /
                                   std::log(points[b].intensity / points[a].intensity));
        }
    }
    double sum = 0.0;
    for (double n : fit.per_pair) sum += n;
    fit.order_n = sum / static_cast<double>(fit.per_pair.size());
    return fit;
}

} // namespace qlitho
