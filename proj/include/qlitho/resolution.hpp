#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qlitho {

/// Pair-generation process: SPDC converts one pump photon into a photon
/// pair (degenerate output wavelength 2 lambda_p); HPS (hyper-parametric
/// scattering, chi^(3)) converts two pump photons (degenerate output at
/// the pump wavelength itself).
enum class Process { SPDC, HPS };

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }

struct PhaseMatchCase {
    Process process = Process::SPDC;
    Vec3 pump_k;
    double pump_omega = 0.0;
    Vec3 signal_k;
    double signal_omega = 0.0;
    Vec3 idler_k;
    double idler_omega = 0.0;

    /// Collinear degenerate case along z for the given pump frequency
    /// (vacuum dispersion k = omega, c = 1): exactly phase matched.
    static PhaseMatchCase degenerate_collinear(Process process, double pump_omega);
};

struct PhaseMatchResidual {
    Vec3 momentum;
    double energy = 0.0;
};

/// SPDC: k_p - k_s - k_i and w_p - w_s - w_i.
/// HPS: 2 k_p - k_s - k_i and 2 w_p - w_s - w_i.
PhaseMatchResidual phase_match_residual(const PhaseMatchCase& pm);

/// Degenerate-pair output wavelength: 2 lambda_p for SPDC, lambda_p for HPS.
double degenerate_output_wavelength(Process process, double pump_wavelength);

struct Susceptibilities {
    double chi2 = 0.0; // (CGS field)^-1
    double chi3 = 0.0; // (CGS field)^-2
};

/// Pump field at which |E_p chi3| reaches |chi2|, i.e. where the chi^(3)
/// pair source becomes competitive with a chi^(2) one: chi3 / chi2.
double efficiency_crossover_field(const Susceptibilities& s);

struct DiffractionFwhm {
    double half_width = 0.0;         // x* with sinc^{2n}(x*) = 1/2
    double fwhm = 0.0;               // 2 x*
    double narrowing_vs_order1 = 0.0;
};

/// Half-power width of the order-n diffraction pattern sinc^{2n}(x),
/// solved by bisection on (0, pi). An order-2 detector narrows the
/// pattern by ~1/sqrt(2) relative to order 1.
DiffractionFwhm diffraction_fwhm(std::size_t order_n);

/// Period of the fringe sin^{2n}(k x): pi/k for every n. Raising a fringe
/// to a power sharpens it but never shortens the period, unlike the
/// doubled-frequency two-photon fringe.
double fringe_period(std::size_t power_n, double k);

struct ExposurePoint {
    double intensity = 0.0;      // W/cm^2
    double threshold_time = 0.0; // s to reach the photo-initiation threshold
};

struct ExposureOrderFit {
    double order_n = 0.0;
    std::vector<double> per_pair;
};

/// Photon order n from threshold data, assuming I^n t = const: each pair
/// gives n = ln(t1/t2) / ln(I2/I1); the fit is their arithmetic mean.
/// n ~ 1 means a single-photon process, n ~ 2 a two-photon one.
ExposureOrderFit exposure_order(std::span<const ExposurePoint> points);

} // namespace qlitho
