#include "qlitho/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qlitho/errors.hpp"

namespace qlitho {

CorrelationFunction::CorrelationFunction(const NonlinearCrystal& crystal,
                                         const SignalSpectrum& spectrum,
                                         const FrequencyGrid& grid)
    : crystal_(crystal), spectrum_(spectrum), grid_(grid) {
    const std::size_t n = grid_.size();
    coeff_.resize(n);
    cplx sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        coeff_[j] = grid_.weight(j) * combined_spectral_density(crystal_, spectrum_, grid_.node(j));
        sum += coeff_[j];
    }
    u0_ = sum;
    if (std::abs(u0_) == 0.0)
        throw std::invalid_argument(
            "CorrelationFunction: grid does not resolve the spectrum, u(0) = 0");

    if (n > 1 && grid_.nu_max() < 5.0 * spectrum_.sigma()) {
        std::ostringstream os;
        os << "grid nu_max = " << grid_.nu_max() << " is below 5 sigma = "
           << 5.0 * spectrum_.sigma() << "; the spectral tail is truncated";
        warning_ = os.str();
    }
}

cplx CorrelationFunction::operator()(double z) const {
    if (std::abs(z) * grid_.spacing() > std::numbers::pi) {
        std::ostringstream os;
        os << "correlation argument |z| = " << std::abs(z) << " violates the Nyquist bound pi/spacing = "
           << std::numbers::pi / grid_.spacing() << "; increase grid n_points or reduce nu_max";
        throw GridTooCoarseError(os.str());
    }
    cplx sum{0.0, 0.0};
    const std::size_t n = grid_.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double phase = grid_.node(j) * z;
        sum += coeff_[j] * cplx{std::cos(phase), std::sin(phase)};
    }
    return sum;
}

SymmetryReport symmetry_check(const CorrelationFunction& corr, std::span<const double> z_samples) {
    SymmetryReport report;
    const double scale = std::abs(corr.u0());
    for (double z : z_samples) {
        const cplx up = corr(z);
        const cplx um = corr(-z);
        report.max_even_violation = std::max(report.max_even_violation, std::abs(up - um) / scale);
        report.max_imag_fraction =
            std::max({report.max_imag_fraction, std::abs(up.imag()) / scale, std::abs(um.imag()) / scale});
    }
    return report;
}

PumpEnvelope::PumpEnvelope(double sigma_p) : sigma_p_(sigma_p) {
    if (!(sigma_p >= 0.0)) throw std::invalid_argument("PumpEnvelope: sigma_p must be >= 0");
}

double PumpEnvelope::value(double path_sum_offset) const {
    if (sigma_p_ == 0.0) return 1.0;
    const double t = sigma_p_ * path_sum_offset;
    return std::exp(-0.5 * t * t);
}

double PumpEnvelope::coherence_length() const {
    if (sigma_p_ == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / sigma_p_;
}

} // namespace qlitho
