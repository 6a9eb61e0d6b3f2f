#include "qlitho/fock_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qlitho/correlation.hpp"
#include "qlitho/errors.hpp"
#include "qlitho/units.hpp"

namespace qlitho {

namespace {

cplx polar_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

void require_same_grid(const DiscreteModeState& state, const FieldExpansion& field) {
    if (!(state.grid == field.grid))
        throw GridMismatchError("state and field expansion were built on different frequency grids");
}

} // namespace

double DiscreteModeState::norm_squared() const {
    double sum = 0.0;
    for (const cplx& c : coeffs) sum += std::norm(c);
    return sum;
}

DiscreteModeState build_state(const NonlinearCrystal& crystal, const FrequencyGrid& grid) {
    DiscreteModeState state{grid, {}};
    state.coeffs.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        state.coeffs[j] = centered_phase_matching(crystal, grid.node(j)) * grid.weight(j);
    return state;
}

FieldExpansion build_field_expansion(const SignalSpectrum& spectrum, const Geometry& geom,
                                     const FrequencyGrid& grid) {
    const std::size_t n = grid.size();
    FieldExpansion field{grid, {}, {}, {}, {}, {}};
    field.alpha_transmit.resize(n);
    field.alpha_reflect.resize(n);
    field.beta_transmit.resize(n);
    field.beta_reflect.resize(n);
    field.envelope.resize(n);

    const cplx i{0.0, 1.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double k = UnitSystem::k0() + grid.node(j);
        const double f = signal_amplitude(spectrum, grid.node(j));
        const cplx arm_a = f * polar_phase(k * geom.l1());
        const cplx arm_b = f * polar_phase(k * geom.l2());
        field.alpha_transmit[j] = arm_a * polar_phase(k * geom.x2());
        field.alpha_reflect[j] = i * arm_a * polar_phase(k * geom.x1());
        field.beta_transmit[j] = arm_b * polar_phase(k * geom.x1());
        field.beta_reflect[j] = i * arm_b * polar_phase(k * geom.x2());
        field.envelope[j] = f;
    }
    return field;
}

OracleAmplitude amplitude_oracle_detailed(const DiscreteModeState& state, const FieldExpansion& field) {
    require_same_grid(state, field);

    // For each state term c_j a^dag(nu_j) b^dag(-nu_j)|0>, expanding
    // E+ E+ = (alpha a + beta b)(alpha a + beta b) gives four operator
    // pairings. The commutators leave
    //   <0| a(m) b(n) a^dag(j) b^dag(-j) |0> = delta_{m,j} delta_{n,-j},
    // so the ab pairing picks alpha(nu_j) beta(-nu_j) and the ba pairing
    // the same product in the other order. The aa / bb pairings require a
    // second annihilation in a channel that holds a single photon and are
    // identically zero: nothing is accumulated for them.
    OracleAmplitude out;
    const std::size_t n = state.grid.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t m = state.grid.mirror_index(j); // node at -nu_j
        const cplx c = state.coeffs[j];

        const cplx cross = c * field.alpha(j) * field.beta(m);
        out.pairings.ab += cross;
        out.pairings.ba += cross; // the operators commute through to the same scalar

        // split over the beamsplitter paths, both orderings included:
        // both transmitted, both reflected, and the two one-output pairs
        out.paths.tt += kOrderingFactor * c * field.alpha_transmit[j] * field.beta_transmit[m];
        out.paths.rr += kOrderingFactor * c * field.alpha_reflect[j] * field.beta_reflect[m];
        out.paths.tr += kOrderingFactor * c * field.alpha_transmit[j] * field.beta_reflect[m];
        out.paths.rt += kOrderingFactor * c * field.alpha_reflect[j] * field.beta_transmit[m];
    }
    out.value = out.pairings.ab + out.pairings.ba;
    return out;
}

cplx amplitude_oracle(const DiscreteModeState& state, const FieldExpansion& field) {
    return amplitude_oracle_detailed(state, field).value;
}

IntensityBreakdown intensity_oracle_detailed(const DiscreteModeState& state, const FieldExpansion& field) {
    require_same_grid(state, field);

    // E+|Psi> is a one-photon state: absorbing the a-photon of term j
    // leaves |b: -nu_j> with coefficient c_j alpha(nu_j); absorbing the
    // b-photon leaves |a: nu_j> with coefficient c_j beta(-nu_j). The two
    // families live in orthogonal channels, so the squared norm splits.
    IntensityBreakdown out;
    double background = 0.0;
    const std::size_t n = state.grid.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t m = state.grid.mirror_index(j);
        const double c2 = std::norm(state.coeffs[j]);
        out.from_a += c2 * std::norm(field.alpha(j));
        out.from_b += c2 * std::norm(field.beta(m));
        const double f = field.envelope[j];
        background += 4.0 * c2 * f * f;
    }
    out.from_a /= background;
    out.from_b /= background;
    out.total = out.from_a + out.from_b;
    return out;
}

double intensity_oracle(const DiscreteModeState& state, const FieldExpansion& field) {
    return intensity_oracle_detailed(state, field).total;
}

ComparisonReport compare_with_analytic(const NonlinearCrystal& crystal, const SignalSpectrum& spectrum,
                                       const FrequencyGrid& grid, const Geometry& geom_template,
                                       std::span<const double> dx_samples) {
    const DiscreteModeState state = build_state(crystal, grid);
    const CorrelationFunction corr(crystal, spectrum, grid);

    ComparisonReport report;
    report.n_samples = dx_samples.size();

    std::vector<double> amp_diffs;
    amp_diffs.reserve(dx_samples.size());
    double amp_scale = 0.0;

    for (double dx : dx_samples) {
        const Geometry geom = geom_template.with_substrate_dx(dx);
        const FieldExpansion field = build_field_expansion(spectrum, geom, grid);

        const cplx a_oracle = amplitude_oracle(state, field);
        const cplx a_analytic = two_photon_amplitude(geom, corr);
        amp_diffs.push_back(std::abs(a_oracle - kOrderingFactor * a_analytic));
        amp_scale = std::max(amp_scale, std::abs(a_oracle));

        const double i_oracle = intensity_oracle(state, field);
        const double i_analytic = intensity(geom, crystal, spectrum, grid);
        report.max_int_reldiff =
            std::max(report.max_int_reldiff, std::abs(i_oracle - i_analytic) / std::abs(i_analytic));
    }

    for (double d : amp_diffs)
        report.max_amp_reldiff = std::max(report.max_amp_reldiff, d / amp_scale);
    return report;
}

} // namespace qlitho
