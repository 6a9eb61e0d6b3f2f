#pragma once

#include <complex>
#include <stdexcept>

namespace qlitho {

using cplx = std::complex<double>;

/// Collinear degenerate SPDC crystal. Type-I (parallel signal/idler
/// polarizations) has a quadratic longitudinal mismatch -D' nu^2; type-II
/// (orthogonal polarizations) a linear one D nu, D = 1/v_o - 1/v_e.
/// The dispersion constants are inputs in internal units (c = 1), not
/// derived from material data.
enum class CrystalKind { TypeI, TypeII };

class NonlinearCrystal {
public:
    static NonlinearCrystal type1(double length, double d_prime) {
        return NonlinearCrystal(CrystalKind::TypeI, length, 0.0, d_prime);
    }
    static NonlinearCrystal type2(double length, double d_const) {
        return NonlinearCrystal(CrystalKind::TypeII, length, d_const, 0.0);
    }

    CrystalKind kind() const { return kind_; }
    double length() const { return length_; }
    double d_const() const { return d_const_; }   // type-II, time/length
    double d_prime() const { return d_prime_; }   // type-I, time^2/length

private:
    NonlinearCrystal(CrystalKind kind, double length, double d_const, double d_prime)
        : kind_(kind), length_(length), d_const_(d_const), d_prime_(d_prime) {
        // length = 0 is the idealized flat-phase-matching limit (h == 1)
        if (!(length >= 0.0))
            throw std::invalid_argument("NonlinearCrystal: length must be >= 0");
    }

    CrystalKind kind_;
    double length_;
    double d_const_;
    double d_prime_;
};

/// Detection/filter spectrum f(nu): real, even, f(0) = 1.
enum class SpectrumShape { Gaussian, Rectangular };

class SignalSpectrum {
public:
    static SignalSpectrum gaussian(double sigma) { return SignalSpectrum(SpectrumShape::Gaussian, sigma); }
    static SignalSpectrum rectangular(double sigma) { return SignalSpectrum(SpectrumShape::Rectangular, sigma); }

    SpectrumShape shape() const { return shape_; }
    double sigma() const { return sigma_; }

private:
    SignalSpectrum(SpectrumShape shape, double sigma) : shape_(shape), sigma_(sigma) {
        if (!(sigma > 0.0))
            throw std::invalid_argument("SignalSpectrum: sigma must be > 0");
    }

    SpectrumShape shape_;
    double sigma_;
};

/// Longitudinal phase mismatch Delta_z(nu): -D' nu^2 (type-I), D nu (type-II).
double detuning_mismatch(const NonlinearCrystal& crystal, double nu);

/// Phase-matching spectral function h(nu) = (1 - exp(-i L Dz)) / (i L Dz),
/// h(0) = 1. Evaluated through the cancellation-free half-angle form
/// sin(p)/p - 2i sin^2(p/2)/p, with a series branch below |L Dz| = 1e-6.
cplx phase_matching_function(const NonlinearCrystal& crystal, double nu);

/// Half the deterministic signal-idler group delay acquired in the crystal:
/// L*D/2 for type-II, 0 for type-I. This is the linear part of the spectral
/// phase of h, i.e. a pure delay fixed by the crystal, not a spectral shape.
double group_delay_offset(const NonlinearCrystal& crystal);

/// h(nu) with the deterministic group delay referenced out:
/// h(nu) * exp(i nu * group_delay_offset). For type-II this equals
/// sinc(L D nu / 2), real and even, so path differences are measured from
/// the white-light balance point of the interferometer including the
/// crystal. For type-I it is identical to phase_matching_function (the
/// quadratic phase is physical dispersion and stays). The biphoton state
/// and the correlation function are built from this function.
cplx centered_phase_matching(const NonlinearCrystal& crystal, double nu);

double signal_amplitude(const SignalSpectrum& spectrum, double nu);

/// Spectral density of the pair correlation integrand:
/// centered_phase_matching(nu) * f(nu)^2.
cplx combined_spectral_density(const NonlinearCrystal& crystal, const SignalSpectrum& spectrum,
                               double nu);

} // namespace qlitho
