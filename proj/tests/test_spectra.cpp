#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qlitho/spectra.hpp"

using namespace qlitho;
using std::numbers::pi;

TEST_CASE("detuning mismatch: quadratic for type-I, linear for type-II") {
    const auto t1 = NonlinearCrystal::type1(1.0, 0.5);
    const auto t2 = NonlinearCrystal::type2(1.0, 2.0);

    CHECK(detuning_mismatch(t1, 0.0) == 0.0);
    CHECK(detuning_mismatch(t2, 0.0) == 0.0);
    CHECK(detuning_mismatch(t2, 1.5) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(detuning_mismatch(t1, 2.0) == doctest::Approx(-2.0).epsilon(1e-15));
    // even in nu for type-I, odd for type-II
    CHECK(detuning_mismatch(t1, -2.0) == detuning_mismatch(t1, 2.0));
    CHECK(detuning_mismatch(t2, -1.5) == -detuning_mismatch(t2, 1.5));
}

TEST_CASE("phase matching function: limits and pinned values") {
    const auto t2 = NonlinearCrystal::type2(1.0, 1.0);

    const cplx h0 = phase_matching_function(t2, 0.0);
    CHECK(h0.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(h0.imag()) < 1e-14);

    // L * Dz = pi: (1 - e^{-i pi}) / (i pi) = -2i/pi
    const cplx hpi = phase_matching_function(t2, pi);
    CHECK(std::abs(hpi.real()) < 1e-15);
    CHECK(hpi.imag() == doctest::Approx(-2.0 / pi).epsilon(1e-14));
}

TEST_CASE("|h| <= 1 over a dense detuning grid") {
    // |h| = |2 sin(p/2) / p| = |sinc(p/2)|, bounded by 1; sampled oracle
    const auto t1 = NonlinearCrystal::type1(3.0, 0.7);
    const auto t2 = NonlinearCrystal::type2(2.0, 1.3);
    const double sigma = 0.05 * 2.0 * pi;
    const int n = 10000;
    for (int j = 0; j < n; ++j) {
        const double nu = -6.0 * sigma + 12.0 * sigma * j / (n - 1.0);
        CHECK(std::abs(phase_matching_function(t1, nu)) <= 1.0 + 1e-12);
        CHECK(std::abs(phase_matching_function(t2, nu)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("h symmetries: Hermitian for type-II, even for type-I") {
    const auto t1 = NonlinearCrystal::type1(1.0, 1.0);
    const auto t2 = NonlinearCrystal::type2(1.0, 1.0);
    for (int j = 1; j <= 200; ++j) {
        const double nu = 0.011 * j;
        CHECK(std::abs(phase_matching_function(t2, -nu) - std::conj(phase_matching_function(t2, nu))) <
              1e-12);
        CHECK(std::abs(phase_matching_function(t1, -nu) - phase_matching_function(t1, nu)) < 1e-12);
    }
}

TEST_CASE("h is continuous across the series-switch threshold") {
    const auto t2 = NonlinearCrystal::type2(1.0, 1.0); // L*Dz = nu
    for (double p : {1e-6 * (1.0 - 1e-9), 1e-6, 1e-6 * (1.0 + 1e-9)}) {
        // both branches evaluated at the same phase
        const cplx exact{std::sin(p) / p, -2.0 * std::sin(0.5 * p) * std::sin(0.5 * p) / p};
        const cplx series{1.0 - p * p / 6.0, -0.5 * p + p * p * p / 24.0};
        CHECK(std::abs(exact - series) < 1e-10);
        CHECK(std::abs(phase_matching_function(t2, p) - exact) < 1e-10);
    }
}

TEST_CASE("centered phase matching removes exactly the crystal group delay") {
    const auto t2 = NonlinearCrystal::type2(1.7, 0.9);
    CHECK(group_delay_offset(t2) == doctest::Approx(0.5 * 1.7 * 0.9).epsilon(1e-15));
    for (int j = -40; j <= 40; ++j) {
        const double nu = 0.07 * j;
        const cplx centered = centered_phase_matching(t2, nu);
        // identity sinc(p/2) = e^{i p/2} (1 - e^{-i p}) / (i p)
        const cplx delay{std::cos(nu * group_delay_offset(t2)), std::sin(nu * group_delay_offset(t2))};
        CHECK(std::abs(centered - delay * phase_matching_function(t2, nu)) < 1e-14);
        CHECK(centered.imag() == 0.0); // exactly real by construction
        CHECK(centered_phase_matching(t2, -nu).real() == centered.real());
    }

    const auto t1 = NonlinearCrystal::type1(1.7, 0.9);
    CHECK(group_delay_offset(t1) == 0.0);
    for (int j = -40; j <= 40; ++j) {
        const double nu = 0.07 * j;
        // no linear spectral phase to remove: identical to the literal h
        CHECK(centered_phase_matching(t1, nu) == phase_matching_function(t1, nu));
    }
}

TEST_CASE("signal amplitude: normalization, shape values, evenness") {
    const auto g = SignalSpectrum::gaussian(1.0);
    CHECK(signal_amplitude(g, 0.0) == 1.0);
    CHECK(signal_amplitude(g, 1.0) == doctest::Approx(0.6065306597126334).epsilon(1e-15));

    const auto r = SignalSpectrum::rectangular(2.0);
    CHECK(signal_amplitude(r, 3.0) == 0.0);
    CHECK(signal_amplitude(r, 2.0) == 1.0);
    CHECK(signal_amplitude(r, -1.9) == 1.0);

    for (int j = 0; j <= 100; ++j) {
        const double nu = 0.13 * j;
        CHECK(signal_amplitude(g, nu) == signal_amplitude(g, -nu));
        CHECK(signal_amplitude(r, nu) == signal_amplitude(r, -nu));
    }

    CHECK_THROWS_AS(SignalSpectrum::gaussian(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SignalSpectrum::rectangular(-1.0), std::invalid_argument);
}

TEST_CASE("combined spectral density: unity at nu = 0 and symmetry pairs") {
    const auto t1 = NonlinearCrystal::type1(1.0, 1.0);
    const auto t2 = NonlinearCrystal::type2(1.0, 1.0);
    const auto spec = SignalSpectrum::gaussian(0.05 * 2.0 * pi);

    CHECK(std::abs(combined_spectral_density(t2, spec, 0.0) - cplx{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(combined_spectral_density(t1, spec, 0.0) - cplx{1.0, 0.0}) < 1e-14);

    for (int j = 1; j <= 100; ++j) {
        const double nu = 0.02 * j;
        const cplx d2p = combined_spectral_density(t2, spec, nu);
        const cplx d2m = combined_spectral_density(t2, spec, -nu);
        CHECK(std::abs(d2m - std::conj(d2p)) < 1e-14);

        const cplx d1p = combined_spectral_density(t1, spec, nu);
        const cplx d1m = combined_spectral_density(t1, spec, -nu);
        CHECK(std::abs(d1m - d1p) < 1e-14);
    }
}

TEST_CASE("crystal construction rules") {
    CHECK_THROWS_AS(NonlinearCrystal::type2(-1.0, 1.0), std::invalid_argument);
    const auto flat = NonlinearCrystal::type2(0.0, 1.0); // L -> 0: flat phase matching
    CHECK(phase_matching_function(flat, 5.0) == cplx{1.0, 0.0});
    CHECK(centered_phase_matching(flat, 5.0) == cplx{1.0, 0.0});
}
