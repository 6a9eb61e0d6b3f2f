#pragma once

#include <cstddef>
#include <vector>

#include "qlitho/correlation.hpp"
#include "qlitho/spectra.hpp"
#include "qlitho/units.hpp"

namespace qlitho {

/// One-dimensional interferometer geometry: source-to-beamsplitter arms
/// l1, l2 and beamsplitter-to-substrate paths x1, x2 of the exactly
/// counterpropagating outputs. Derived quantities follow the conventions
/// l = l1 + l2, dl = l2 - l1, x = x1 + x2 and dx = (x2 - x1) / 2; dx is
/// the coordinate along the substrate (half the path difference).
class Geometry {
public:
    Geometry(double l1, double l2, double x1, double x2);

    static Geometry balanced(double arm, double output) { return {arm, arm, output, output}; }

    double l1() const { return l1_; }
    double l2() const { return l2_; }
    double x1() const { return x1_; }
    double x2() const { return x2_; }

    double l() const { return l1_ + l2_; }
    double dl() const { return l2_ - l1_; }
    double x() const { return x1_ + x2_; }
    double dx() const { return 0.5 * (x2_ - x1_); }

    /// Same arms and total output length, substrate point moved to dx.
    Geometry with_substrate_dx(double dx) const {
        return {l1_, l2_, 0.5 * x() - dx, 0.5 * x() + dx};
    }

private:
    double l1_, l2_, x1_, x2_;
};

/// 50/50 beamsplitter propagation coefficients of the monochromatic field
/// operators at detuning nu, with k(nu) = k0 + nu/c: transmission 1/sqrt(2),
/// reflection i/sqrt(2), times the accumulated path phases.
struct BeamsplitterCoefficients {
    cplx a_to_x2; // channel a transmitted
    cplx a_to_x1; // channel a reflected
    cplx b_to_x1; // channel b transmitted
    cplx b_to_x2; // channel b reflected
};

BeamsplitterCoefficients field_coefficients(const Geometry& geom, double nu);

/// The four two-photon paths through the beamsplitter. tt/rr (both
/// transmitted / both reflected) send one photon to each output and cancel
/// pairwise at dl = 0; tr/rt send the pair to a single output and carry the
/// doubled-frequency fringe.
struct PathAmplitudes {
    cplx tt{};
    cplx rr{};
    cplx tr{};
    cplx rt{};

    cplx total() const { return tt + rr + tr + rt; }
};

/// Monochromatic limit (u == 1): path products at nu = 0 in the same
/// dropped-constants normalization as the finite-bandwidth amplitude.
PathAmplitudes path_amplitudes_plane_wave(const Geometry& geom);

/// Finite-bandwidth path amplitudes expressed through the correlation
/// function u:
///   tt =  e^{i k0 (l+x)} u( 2 dx - dl)
///   rr = -e^{i k0 (l+x)} u(-2 dx - dl)
///   tr =  i e^{i k0 (l+x)} e^{+2 i k0 dx} u(-dl)
///   rt =  i e^{i k0 (l+x)} e^{-2 i k0 dx} u(-dl)
/// This is the exact reduction of the discrete mode sum; the u arguments
/// carry the full output path difference 2 dx = x2 - x1, and the pair
/// tr + rt = 2 i cos(2 k0 dx) u(-dl) is in quadrature with tt + rr.
PathAmplitudes path_amplitudes(const Geometry& geom, const CorrelationFunction& corr);

/// Two-photon detection amplitude A at the substrate point, equal to
/// path_amplitudes(...).total(). Overloads apply a pump envelope to the
/// magnitude, with argument (l + x) - lx_ref.
cplx two_photon_amplitude(const Geometry& geom, const CorrelationFunction& corr);
cplx two_photon_amplitude(const Geometry& geom, const CorrelationFunction& corr,
                          const PumpEnvelope& env, double lx_ref);

/// Two-photon absorption rate |A|^2. At dl = 0 this is
/// 4 |u(0)|^2 cos^2(2 k0 dx): spatial frequency 4 k0, period lambda0/4.
double absorption_rate(const Geometry& geom, const CorrelationFunction& corr);
double absorption_rate(const Geometry& geom, const CorrelationFunction& corr,
                       const PumpEnvelope& env, double lx_ref);

/// Second-order (single-photon) intensity at the substrate, normalized so
/// the unmodulated background is 1:
///   I = 1 - cos(2 k0 dx) * S(dx) / S0,
///   S(dx) = sum_j w_j |h_c(nu_j)|^2 f^2(nu_j) sin(2 nu_j dx / c).
/// The summand is odd in nu, so I == 1 for every dx: the two out-of-phase
/// single-input fringes cancel. Independent of the arm lengths.
double intensity(const Geometry& geom, const NonlinearCrystal& crystal,
                 const SignalSpectrum& spectrum, const FrequencyGrid& grid);

/// Classical single-photon reference fringe cos^2(k0 dx): spatial
/// frequency 2 k0, period lambda0/2 (the Rayleigh-limit fringe).
double classical_fringe(double dx);

struct FringeSample {
    double dx = 0.0;
    double absorption = 0.0;
    double intensity = 0.0;
};

/// Uniform endpoint-exclusive dx sweep: n samples at
/// dx_min + j * (dx_max - dx_min) / n, ordered by dx. Integer numbers of
/// fringe periods in [dx_min, dx_max) therefore give leakage-free FFT bins.
std::vector<FringeSample> fringe_scan(const Geometry& geom_template, const CorrelationFunction& corr,
                                      double dx_min, double dx_max, std::size_t n_samples);

/// (max - min) / (max + min) of the absorption over one fringe period
/// [0, lambda0/4), sampled at n_samples >= 64 points.
double fringe_visibility(const Geometry& geom_template, const CorrelationFunction& corr,
                         std::size_t n_samples = 128);

} // namespace qlitho
