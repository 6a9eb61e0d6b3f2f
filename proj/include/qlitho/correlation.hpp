#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qlitho/grid.hpp"
#include "qlitho/spectra.hpp"

namespace qlitho {

/// Biphoton correlation function
///   u(z) = integral dnu  h_c(nu) f^2(nu) exp(i nu z / c)
/// evaluated as an unnormalized composite-trapezoid sum over a symmetric
/// grid (c = 1 internally). h_c is the delay-centered phase matching, so
/// u is even for both crystal types and real for type-II; for type-I it
/// keeps a nonzero imaginary part from the quadratic spectral phase.
/// The node/weight convention is shared verbatim with the Fock oracle,
/// which makes the two evaluation routes term-by-term identical sums.
class CorrelationFunction {
public:
    CorrelationFunction(const NonlinearCrystal& crystal, const SignalSpectrum& spectrum,
                        const FrequencyGrid& grid);

    /// u at signed length z. Throws GridTooCoarseError when |z| * spacing
    /// exceeds pi (the oscillatory factor would be undersampled).
    cplx operator()(double z) const;

    cplx u0() const { return u0_; }

    const NonlinearCrystal& crystal() const { return crystal_; }
    const SignalSpectrum& spectrum() const { return spectrum_; }
    const FrequencyGrid& grid() const { return grid_; }

    /// Weighted density w_j * h_c(nu_j) f^2(nu_j) per node.
    const std::vector<cplx>& weighted_density() const { return coeff_; }

    /// Non-fatal construction diagnostics (e.g. nu_max below 5 sigma).
    const std::string& warning() const { return warning_; }

private:
    NonlinearCrystal crystal_;
    SignalSpectrum spectrum_;
    FrequencyGrid grid_;
    std::vector<cplx> coeff_;
    cplx u0_;
    std::string warning_;
};

struct SymmetryReport {
    double max_even_violation = 0.0; // max |u(z) - u(-z)| / |u(0)|
    double max_imag_fraction = 0.0;  // max |Im u(z)| / |u(0)|
};

/// Scans the given z samples (and their negatives) for deviations from
/// u(z) = u(-z) = u*(z). Realness is a property of type-II only; type-I
/// callers should treat max_imag_fraction as a diagnostic.
SymmetryReport symmetry_check(const CorrelationFunction& corr, std::span<const double> z_samples);

/// Gaussian pump spectral envelope. A finite pump bandwidth sigma_p turns
/// the overall phase factor exp(i k0 (l + x)) into a magnitude envelope
/// exp(-(sigma_p * offset / c)^2 / 2) in the total path offset
/// (l + x) - (l + x)_ref; sigma_p = 0 is the plane-wave pump (factor 1).
class PumpEnvelope {
public:
    explicit PumpEnvelope(double sigma_p);

    double sigma_p() const { return sigma_p_; }
    double value(double path_sum_offset) const;

    /// 1/sigma_p in internal units (infinite for a plane-wave pump).
    double coherence_length() const;

private:
    double sigma_p_;
};

} // namespace qlitho
