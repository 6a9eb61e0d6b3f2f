#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlitho/grid.hpp"
#include "qlitho/interferometer.hpp"
#include "qlitho/spectra.hpp"

namespace qlitho {

/// Brute-force ground truth for the analytic reduction: the two-photon
/// state and the substrate field are discretized over the same frequency
/// grid and the detection moments are evaluated by explicit mode algebra,
/// never through the correlation function u.

/// Discretized frequency-entangled pair state
///   |Psi> = sum_j c_j  a^dag(nu_j) b^dag(-nu_j) |0>,
/// c_j = h_c(nu_j) w_j (quadrature weight absorbed into the state so the
/// oracle sums match the analytic quadrature term by term). Exactly one
/// photon per channel by construction.
struct DiscreteModeState {
    FrequencyGrid grid;
    std::vector<cplx> coeffs;

    /// sum_j |c_j|^2; kept unnormalized to match the analytic convention.
    double norm_squared() const;
};

DiscreteModeState build_state(const NonlinearCrystal& crystal, const FrequencyGrid& grid);

/// Substrate field E+ = sum_j [ alpha_j a(nu_j) + beta_j b(nu_j) ] with
///   alpha_j = f(nu_j) e^{i k_j l1} ( e^{i k_j x2} + i e^{i k_j x1} )
///   beta_j  = f(nu_j) e^{i k_j l2} ( e^{i k_j x1} + i e^{i k_j x2} ),
/// k_j = k0 + nu_j. Stored split into transmitted/reflected parts so the
/// four two-photon paths can be read off individually.
struct FieldExpansion {
    FrequencyGrid grid;
    std::vector<cplx> alpha_transmit; // a -> x2
    std::vector<cplx> alpha_reflect;  // a -> x1
    std::vector<cplx> beta_transmit;  // b -> x1
    std::vector<cplx> beta_reflect;   // b -> x2
    std::vector<double> envelope;     // f(nu_j)

    cplx alpha(std::size_t j) const { return alpha_transmit[j] + alpha_reflect[j]; }
    cplx beta(std::size_t j) const { return beta_transmit[j] + beta_reflect[j]; }
};

FieldExpansion build_field_expansion(const SignalSpectrum& spectrum, const Geometry& geom,
                                     const FrequencyGrid& grid);

/// Vacuum amplitude <0| E+ E+ |Psi> classified by which channel each of
/// the two annihilation operators acted on. aa and bb demand two photons
/// from a one-photon channel; the commutator algebra makes them vanish
/// identically and the oracle never accumulates them.
struct OperatorPairings {
    cplx aa{};
    cplx ab{};
    cplx ba{};
    cplx bb{};
};

struct OracleAmplitude {
    cplx value{};             // ab + ba = 2 * sum_j c_j alpha(nu_j) beta(-nu_j)
    OperatorPairings pairings;
    PathAmplitudes paths;     // value split over the four beamsplitter paths
};

/// The two operator orderings contribute equally; the analytic amplitude
/// uses the dropped-constants normalization, so
/// amplitude_oracle == kOrderingFactor * two_photon_amplitude.
inline constexpr double kOrderingFactor = 2.0;

OracleAmplitude amplitude_oracle_detailed(const DiscreteModeState& state, const FieldExpansion& field);
cplx amplitude_oracle(const DiscreteModeState& state, const FieldExpansion& field);

/// <Psi| E- E+ |Psi> via the explicit one-photon vector E+|Psi>, normalized
/// to the unmodulated background 4 sum_j |c_j f_j|^2. from_a / from_b are
/// the contributions where the absorbed photon came from channel a / b;
/// each carries a sin(2 k0 dx) fringe, the two are exactly out of phase,
/// and total == from_a + from_b == 1.
struct IntensityBreakdown {
    double total = 0.0;
    double from_a = 0.0;
    double from_b = 0.0;
};

IntensityBreakdown intensity_oracle_detailed(const DiscreteModeState& state, const FieldExpansion& field);
double intensity_oracle(const DiscreteModeState& state, const FieldExpansion& field);

struct ComparisonReport {
    double max_amp_reldiff = 0.0;
    double max_int_reldiff = 0.0;
    std::size_t n_samples = 0;
};

/// Runs the oracle and the analytic path over the dx samples on a shared
/// grid. Amplitude differences |A_oracle - kOrderingFactor * A_analytic|
/// are normalized by the peak |A_oracle| over the scan (the fringe has
/// exact zeros); intensity differences are pointwise relative.
ComparisonReport compare_with_analytic(const NonlinearCrystal& crystal, const SignalSpectrum& spectrum,
                                       const FrequencyGrid& grid, const Geometry& geom_template,
                                       std::span<const double> dx_samples);

} // namespace qlitho
