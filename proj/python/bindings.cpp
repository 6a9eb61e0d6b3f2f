#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "qlitho/analysis.hpp"
#include "qlitho/config.hpp"
#include "qlitho/correlation.hpp"
#include "qlitho/errors.hpp"
#include "qlitho/fock_oracle.hpp"
#include "qlitho/grid.hpp"
#include "qlitho/interferometer.hpp"
#include "qlitho/resolution.hpp"
#include "qlitho/spectra.hpp"
#include "qlitho/units.hpp"

namespace py = pybind11;
using namespace qlitho;

PYBIND11_MODULE(_qlitho, m) {
    m.doc() = "two-photon interferometric lithography simulator (C++ core)";

    m.attr("K0") = UnitSystem::k0();
    m.attr("OMEGA0") = UnitSystem::omega0();

    py::register_exception<GridTooCoarseError>(m, "GridTooCoarseError", PyExc_RuntimeError);
    py::register_exception<GridMismatchError>(m, "GridMismatchError", PyExc_RuntimeError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);

    // --- spectra
    py::enum_<CrystalKind>(m, "CrystalKind")
        .value("TypeI", CrystalKind::TypeI)
        .value("TypeII", CrystalKind::TypeII);
    py::enum_<SpectrumShape>(m, "SpectrumShape")
        .value("Gaussian", SpectrumShape::Gaussian)
        .value("Rectangular", SpectrumShape::Rectangular);

    py::class_<NonlinearCrystal>(m, "NonlinearCrystal")
        .def_static("type1", &NonlinearCrystal::type1, py::arg("length"), py::arg("d_prime"))
        .def_static("type2", &NonlinearCrystal::type2, py::arg("length"), py::arg("d_const"))
        .def_property_readonly("kind", &NonlinearCrystal::kind)
        .def_property_readonly("length", &NonlinearCrystal::length)
        .def_property_readonly("d_const", &NonlinearCrystal::d_const)
        .def_property_readonly("d_prime", &NonlinearCrystal::d_prime);

    py::class_<SignalSpectrum>(m, "SignalSpectrum")
        .def_static("gaussian", &SignalSpectrum::gaussian, py::arg("sigma"))
        .def_static("rectangular", &SignalSpectrum::rectangular, py::arg("sigma"))
        .def_property_readonly("shape", &SignalSpectrum::shape)
        .def_property_readonly("sigma", &SignalSpectrum::sigma);

    m.def("detuning_mismatch", &detuning_mismatch, py::arg("crystal"), py::arg("nu"));
    m.def("phase_matching_function", &phase_matching_function, py::arg("crystal"), py::arg("nu"));
    m.def("centered_phase_matching", &centered_phase_matching, py::arg("crystal"), py::arg("nu"));
    m.def("group_delay_offset", &group_delay_offset, py::arg("crystal"));
    m.def("signal_amplitude", &signal_amplitude, py::arg("spectrum"), py::arg("nu"));
    m.def("combined_spectral_density", &combined_spectral_density, py::arg("crystal"),
          py::arg("spectrum"), py::arg("nu"));

    // --- grid and correlation
    py::class_<FrequencyGrid>(m, "FrequencyGrid")
        .def_static("make", &FrequencyGrid::make, py::arg("n_points"), py::arg("nu_max"))
        .def("__len__", &FrequencyGrid::size)
        .def_property_readonly("nodes", [](const FrequencyGrid& g) { return g.nodes(); })
        .def_property_readonly("weights", [](const FrequencyGrid& g) { return g.weights(); })
        .def_property_readonly("nu_max", &FrequencyGrid::nu_max)
        .def_property_readonly("spacing", &FrequencyGrid::spacing);

    py::class_<SymmetryReport>(m, "SymmetryReport")
        .def_readonly("max_even_violation", &SymmetryReport::max_even_violation)
        .def_readonly("max_imag_fraction", &SymmetryReport::max_imag_fraction);

    py::class_<CorrelationFunction>(m, "CorrelationFunction")
        .def(py::init<const NonlinearCrystal&, const SignalSpectrum&, const FrequencyGrid&>(),
             py::arg("crystal"), py::arg("spectrum"), py::arg("grid"))
        .def("__call__", &CorrelationFunction::operator(), py::arg("z"))
        .def_property_readonly("u0", &CorrelationFunction::u0)
        .def_property_readonly("warning", &CorrelationFunction::warning)
        .def_property_readonly("grid", &CorrelationFunction::grid);

    m.def(
        "symmetry_check",
        [](const CorrelationFunction& corr, const std::vector<double>& z) {
            return symmetry_check(corr, z);
        },
        py::arg("correlation"), py::arg("z_samples"));

    py::class_<PumpEnvelope>(m, "PumpEnvelope")
        .def(py::init<double>(), py::arg("sigma_p"))
        .def("value", &PumpEnvelope::value, py::arg("path_sum_offset"))
        .def_property_readonly("sigma_p", &PumpEnvelope::sigma_p)
        .def_property_readonly("coherence_length", &PumpEnvelope::coherence_length);

    // --- interferometer
    py::class_<Geometry>(m, "Geometry")
        .def(py::init<double, double, double, double>(), py::arg("l1"), py::arg("l2"), py::arg("x1"),
             py::arg("x2"))
        .def_static("balanced", &Geometry::balanced, py::arg("arm"), py::arg("output"))
        .def("with_substrate_dx", &Geometry::with_substrate_dx, py::arg("dx"))
        .def_property_readonly("l1", &Geometry::l1)
        .def_property_readonly("l2", &Geometry::l2)
        .def_property_readonly("x1", &Geometry::x1)
        .def_property_readonly("x2", &Geometry::x2)
        .def_property_readonly("l", &Geometry::l)
        .def_property_readonly("dl", &Geometry::dl)
        .def_property_readonly("x", &Geometry::x)
        .def_property_readonly("dx", &Geometry::dx);

    py::class_<BeamsplitterCoefficients>(m, "BeamsplitterCoefficients")
        .def_readonly("a_to_x2", &BeamsplitterCoefficients::a_to_x2)
        .def_readonly("a_to_x1", &BeamsplitterCoefficients::a_to_x1)
        .def_readonly("b_to_x1", &BeamsplitterCoefficients::b_to_x1)
        .def_readonly("b_to_x2", &BeamsplitterCoefficients::b_to_x2);

    py::class_<PathAmplitudes>(m, "PathAmplitudes")
        .def_readonly("tt", &PathAmplitudes::tt)
        .def_readonly("rr", &PathAmplitudes::rr)
        .def_readonly("tr", &PathAmplitudes::tr)
        .def_readonly("rt", &PathAmplitudes::rt)
        .def("total", &PathAmplitudes::total);

    py::class_<FringeSample>(m, "FringeSample")
        .def_readonly("dx", &FringeSample::dx)
        .def_readonly("absorption", &FringeSample::absorption)
        .def_readonly("intensity", &FringeSample::intensity);

    m.def("field_coefficients", &field_coefficients, py::arg("geometry"), py::arg("nu"));
    m.def("path_amplitudes_plane_wave", &path_amplitudes_plane_wave, py::arg("geometry"));
    m.def("path_amplitudes", &path_amplitudes, py::arg("geometry"), py::arg("correlation"));
    m.def("two_photon_amplitude",
          py::overload_cast<const Geometry&, const CorrelationFunction&>(&two_photon_amplitude),
          py::arg("geometry"), py::arg("correlation"));
    m.def("two_photon_amplitude",
          py::overload_cast<const Geometry&, const CorrelationFunction&, const PumpEnvelope&, double>(
              &two_photon_amplitude),
          py::arg("geometry"), py::arg("correlation"), py::arg("envelope"), py::arg("lx_ref"));
    m.def("absorption_rate",
          py::overload_cast<const Geometry&, const CorrelationFunction&>(&absorption_rate),
          py::arg("geometry"), py::arg("correlation"));
    m.def("absorption_rate",
          py::overload_cast<const Geometry&, const CorrelationFunction&, const PumpEnvelope&, double>(
              &absorption_rate),
          py::arg("geometry"), py::arg("correlation"), py::arg("envelope"), py::arg("lx_ref"));
    m.def("intensity", &intensity, py::arg("geometry"), py::arg("crystal"), py::arg("spectrum"),
          py::arg("grid"));
    m.def("classical_fringe", &classical_fringe, py::arg("dx"));
    m.def("fringe_scan", &fringe_scan, py::arg("geometry"), py::arg("correlation"), py::arg("dx_min"),
          py::arg("dx_max"), py::arg("n_samples"));
    m.def("fringe_visibility", &fringe_visibility, py::arg("geometry"), py::arg("correlation"),
          py::arg("n_samples") = 128);

    // --- Fock oracle
    py::class_<DiscreteModeState>(m, "DiscreteModeState")
        .def_readonly("grid", &DiscreteModeState::grid)
        .def_readonly("coeffs", &DiscreteModeState::coeffs)
        .def("norm_squared", &DiscreteModeState::norm_squared);

    py::class_<FieldExpansion>(m, "FieldExpansion")
        .def_readonly("grid", &FieldExpansion::grid)
        .def("alpha", &FieldExpansion::alpha, py::arg("j"))
        .def("beta", &FieldExpansion::beta, py::arg("j"));

    py::class_<OperatorPairings>(m, "OperatorPairings")
        .def_readonly("aa", &OperatorPairings::aa)
        .def_readonly("ab", &OperatorPairings::ab)
        .def_readonly("ba", &OperatorPairings::ba)
        .def_readonly("bb", &OperatorPairings::bb);

    py::class_<OracleAmplitude>(m, "OracleAmplitude")
        .def_readonly("value", &OracleAmplitude::value)
        .def_readonly("pairings", &OracleAmplitude::pairings)
        .def_readonly("paths", &OracleAmplitude::paths);

    py::class_<IntensityBreakdown>(m, "IntensityBreakdown")
        .def_readonly("total", &IntensityBreakdown::total)
        .def_readonly("from_a", &IntensityBreakdown::from_a)
        .def_readonly("from_b", &IntensityBreakdown::from_b);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("max_amp_reldiff", &ComparisonReport::max_amp_reldiff)
        .def_readonly("max_int_reldiff", &ComparisonReport::max_int_reldiff)
        .def_readonly("n_samples", &ComparisonReport::n_samples);

    m.attr("ORDERING_FACTOR") = kOrderingFactor;
    m.def("build_state", &build_state, py::arg("crystal"), py::arg("grid"));
    m.def("build_field_expansion", &build_field_expansion, py::arg("spectrum"), py::arg("geometry"),
          py::arg("grid"));
    m.def("amplitude_oracle", &amplitude_oracle, py::arg("state"), py::arg("field"));
    m.def("amplitude_oracle_detailed", &amplitude_oracle_detailed, py::arg("state"), py::arg("field"));
    m.def("intensity_oracle", &intensity_oracle, py::arg("state"), py::arg("field"));
    m.def("intensity_oracle_detailed", &intensity_oracle_detailed, py::arg("state"), py::arg("field"));
    m.def(
        "compare_with_analytic",
        [](const NonlinearCrystal& crystal, const SignalSpectrum& spectrum, const FrequencyGrid& grid,
           const Geometry& geom, const std::vector<double>& dx) {
            return compare_with_analytic(crystal, spectrum, grid, geom, dx);
        },
        py::arg("crystal"), py::arg("spectrum"), py::arg("grid"), py::arg("geometry"),
        py::arg("dx_samples"));

    // --- resolution
    py::enum_<Process>(m, "Process").value("SPDC", Process::SPDC).value("HPS", Process::HPS);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0,
             py::arg("z") = 0.0)
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z);

    py::class_<PhaseMatchCase>(m, "PhaseMatchCase")
        .def_static("degenerate_collinear", &PhaseMatchCase::degenerate_collinear, py::arg("process"),
                    py::arg("pump_omega"))
        .def_readwrite("process", &PhaseMatchCase::process)
        .def_readwrite("pump_k", &PhaseMatchCase::pump_k)
        .def_readwrite("pump_omega", &PhaseMatchCase::pump_omega)
        .def_readwrite("signal_k", &PhaseMatchCase::signal_k)
        .def_readwrite("signal_omega", &PhaseMatchCase::signal_omega)
        .def_readwrite("idler_k", &PhaseMatchCase::idler_k)
        .def_readwrite("idler_omega", &PhaseMatchCase::idler_omega);

    py::class_<PhaseMatchResidual>(m, "PhaseMatchResidual")
        .def_readonly("momentum", &PhaseMatchResidual::momentum)
        .def_readonly("energy", &PhaseMatchResidual::energy);

    py::class_<Susceptibilities>(m, "Susceptibilities")
        .def(py::init<double, double>(), py::arg("chi2"), py::arg("chi3"))
        .def_readwrite("chi2", &Susceptibilities::chi2)
        .def_readwrite("chi3", &Susceptibilities::chi3);

    py::class_<DiffractionFwhm>(m, "DiffractionFwhm")
        .def_readonly("half_width", &DiffractionFwhm::half_width)
        .def_readonly("fwhm", &DiffractionFwhm::fwhm)
        .def_readonly("narrowing_vs_order1", &DiffractionFwhm::narrowing_vs_order1);

    py::class_<ExposurePoint>(m, "ExposurePoint")
        .def(py::init<double, double>(), py::arg("intensity"), py::arg("threshold_time"))
        .def_readwrite("intensity", &ExposurePoint::intensity)
        .def_readwrite("threshold_time", &ExposurePoint::threshold_time);

    py::class_<ExposureOrderFit>(m, "ExposureOrderFit")
        .def_readonly("order_n", &ExposureOrderFit::order_n)
        .def_readonly("per_pair", &ExposureOrderFit::per_pair);

    m.def("phase_match_residual", &phase_match_residual, py::arg("case"));
    m.def("degenerate_output_wavelength", &degenerate_output_wavelength, py::arg("process"),
          py::arg("pump_wavelength"));
    m.def("efficiency_crossover_field", &efficiency_crossover_field, py::arg("susceptibilities"));
    m.def("diffraction_fwhm", &diffraction_fwhm, py::arg("order_n"));
    m.def("fringe_period", &fringe_period, py::arg("power_n"), py::arg("k"));
    m.def(
        "exposure_order",
        [](const std::vector<ExposurePoint>& pts) { return exposure_order(pts); },
        py::arg("points"));

    // --- analysis
    py::class_<SpectralPeak>(m, "SpectralPeak")
        .def_readonly("frequency", &SpectralPeak::frequency)
        .def_readonly("bin", &SpectralPeak::bin)
        .def_readonly("resolution", &SpectralPeak::resolution);

    m.def(
        "spectral_peak",
        [](const std::vector<double>& samples, double spacing) {
            return spectral_peak(samples, spacing);
        },
        py::arg("samples"), py::arg("spacing"));
}
