// qlitho: two-photon interferometric lithography simulator.
//
// Subcommands: fringe, correlation, oracle, phasematch, exposure-fit, fwhm.
// Values come from built-in defaults, then an optional --config JSON file,
// then command-line flags (flags win). CSV/JSON artifacts are byte
// deterministic for identical configs.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlitho/analysis.hpp"
#include "qlitho/config.hpp"
#include "qlitho/correlation.hpp"
#include "qlitho/errors.hpp"
#include "qlitho/fock_oracle.hpp"
#include "qlitho/interferometer.hpp"
#include "qlitho/io.hpp"
#include "qlitho/resolution.hpp"
#include "qlitho/units.hpp"

namespace {

using namespace qlitho;

constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct ConfigCli {
    std::string config_path;
    RunConfig values; // flag targets; merged into the effective config by count
    double dl_um = 0.0;

    CLI::Option* config_opt = nullptr;
    CLI::Option* dl = nullptr;
    CLI::Option* lambda0 = nullptr;
    CLI::Option* kind = nullptr;
    CLI::Option* length = nullptr;
    CLI::Option* d_const = nullptr;
    CLI::Option* d_prime = nullptr;
    CLI::Option* shape = nullptr;
    CLI::Option* sigma_rel = nullptr;
    CLI::Option* sigma_p_rel = nullptr;
    CLI::Option* l1 = nullptr;
    CLI::Option* l2 = nullptr;
    CLI::Option* x1 = nullptr;
    CLI::Option* x2 = nullptr;
    CLI::Option* grid_points = nullptr;
    CLI::Option* nu_max_sigmas = nullptr;
    CLI::Option* dx_min = nullptr;
    CLI::Option* dx_max = nullptr;
    CLI::Option* n_samples = nullptr;
    CLI::Option* z_min = nullptr;
    CLI::Option* z_max = nullptr;
    CLI::Option* n_z = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* format = nullptr;
};

void add_config_options(CLI::App* cmd, ConfigCli& c) {
    c.config_opt = cmd->add_option("--config", c.config_path, "JSON config file (flags override it)");
    c.lambda0 = cmd->add_option("--lambda0-nm", c.values.lambda0_nm, "degenerate wavelength [nm]");
    c.kind = cmd->add_option("--crystal-kind", c.values.crystal_kind, "type1 | type2");
    c.length = cmd->add_option("--crystal-length", c.values.crystal_length,
                               "crystal length L [internal units]");
    c.d_const = cmd->add_option("--d", c.values.d_const, "type-II group-delay constant D [internal]");
    c.d_prime = cmd->add_option("--dprime", c.values.d_prime, "type-I dispersion constant D' [internal]");
    c.shape = cmd->add_option("--shape", c.values.spectrum_shape, "gaussian | rectangular");
    c.sigma_rel = cmd->add_option("--sigma-rel", c.values.sigma_rel, "filter bandwidth / omega0");
    c.sigma_p_rel = cmd->add_option("--sigma-p-rel", c.values.sigma_p_rel,
                                    "pump bandwidth / omega0 (0 = plane wave)");
    c.l1 = cmd->add_option("--l1-um", c.values.l1_um, "arm 1 length [um]");
    c.l2 = cmd->add_option("--l2-um", c.values.l2_um, "arm 2 length [um]");
    c.dl = cmd->add_option("--dl-um", c.dl_um, "arm imbalance l2 - l1 [um] (sets l2)");
    c.x1 = cmd->add_option("--x1-um", c.values.x1_um, "output path 1 length [um]");
    c.x2 = cmd->add_option("--x2-um", c.values.x2_um, "output path 2 length [um]");
    c.grid_points = cmd->add_option("--grid-points", c.values.grid_points, "frequency grid size");
    c.nu_max_sigmas = cmd->add_option("--nu-max-sigmas", c.values.nu_max_sigmas,
                                      "grid cutoff in units of sigma");
    c.dx_min = cmd->add_option("--dx-min-um", c.values.dx_min_um, "scan start [um]");
    c.dx_max = cmd->add_option("--dx-max-um", c.values.dx_max_um, "scan end [um], exclusive");
    c.n_samples = cmd->add_option("--n-samples", c.values.scan_samples, "scan sample count");
    c.z_min = cmd->add_option("--z-min-um", c.values.z_min_um, "correlation table start [um]");
    c.z_max = cmd->add_option("--z-max-um", c.values.z_max_um, "correlation table end [um]");
    c.n_z = cmd->add_option("--n-z", c.values.z_samples, "correlation table sample count");
    c.out = cmd->add_option("--out", c.values.out_path, "output basename");
    c.format = cmd->add_option("--format", c.values.format, "csv | json");
}

RunConfig resolve_config(const ConfigCli& c, const std::string& default_out) {
    RunConfig cfg;
    if (c.config_opt->count() > 0) cfg = RunConfig::load(c.config_path);

    if (c.lambda0->count()) cfg.lambda0_nm = c.values.lambda0_nm;
    if (c.kind->count()) cfg.crystal_kind = c.values.crystal_kind;
    if (c.length->count()) cfg.crystal_length = c.values.crystal_length;
    if (c.d_const->count()) cfg.d_const = c.values.d_const;
    if (c.d_prime->count()) cfg.d_prime = c.values.d_prime;
    if (c.shape->count()) cfg.spectrum_shape = c.values.spectrum_shape;
    if (c.sigma_rel->count()) cfg.sigma_rel = c.values.sigma_rel;
    if (c.sigma_p_rel->count()) cfg.sigma_p_rel = c.values.sigma_p_rel;
    if (c.l1->count()) cfg.l1_um = c.values.l1_um;
    if (c.l2->count()) cfg.l2_um = c.values.l2_um;
    if (c.dl->count()) cfg.l2_um = cfg.l1_um + c.dl_um;
    if (c.x1->count()) cfg.x1_um = c.values.x1_um;
    if (c.x2->count()) cfg.x2_um = c.values.x2_um;
    if (c.grid_points->count()) cfg.grid_points = c.values.grid_points;
    if (c.nu_max_sigmas->count()) cfg.nu_max_sigmas = c.values.nu_max_sigmas;
    if (c.dx_min->count()) cfg.dx_min_um = c.values.dx_min_um;
    if (c.dx_max->count()) cfg.dx_max_um = c.values.dx_max_um;
    if (c.n_samples->count()) cfg.scan_samples = c.values.scan_samples;
    if (c.z_min->count()) cfg.z_min_um = c.values.z_min_um;
    if (c.z_max->count()) cfg.z_max_um = c.values.z_max_um;
    if (c.n_z->count()) cfg.z_samples = c.values.z_samples;
    if (c.out->count()) cfg.out_path = c.values.out_path;
    if (c.format->count()) cfg.format = c.values.format;

    if (cfg.out_path.empty()) cfg.out_path = default_out;

    const auto errors = cfg.validate();
    if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "config error: " << e << "\n";
        std::exit(kExitConfig);
    }
    return cfg;
}

ordered_json make_sidecar(const char* command, const RunConfig& cfg) {
    ordered_json j;
    j["tool"] = "qlitho";
    j["command"] = command;
    j["config"] = cfg.to_json();
    return j;
}

int cmd_fringe(const ConfigCli& cli) {
    const RunConfig cfg = resolve_config(cli, "fringe");
    const UnitSystem units = cfg.units();

    const CorrelationFunction corr(cfg.make_crystal(), cfg.make_spectrum(), cfg.make_grid());
    if (!corr.warning().empty()) std::cerr << "warning: " << corr.warning() << "\n";

    const Geometry geom = cfg.make_geometry();
    const double dx_min = units.length_from_um(cfg.dx_min_um);
    const double dx_max = units.length_from_um(cfg.dx_max_um);
    const auto samples = fringe_scan(geom, corr, dx_min, dx_max, cfg.scan_samples);

    std::vector<double> absorption, classical;
    std::vector<std::vector<double>> rows;
    double worst_intensity = 0.0;
    for (const auto& s : samples) {
        absorption.push_back(s.absorption);
        classical.push_back(classical_fringe(s.dx));
        worst_intensity = std::max(worst_intensity, std::abs(s.intensity - 1.0));
        rows.push_back({units.length_to_um(s.dx), s.absorption, s.intensity});
    }

    const double spacing = (dx_max - dx_min) / static_cast<double>(cfg.scan_samples);
    const auto quantum = spectral_peak(absorption, spacing);
    const auto reference = spectral_peak(classical, spacing);

    ordered_json sidecar = make_sidecar("fringe", cfg);
    ordered_json summary;
    summary["u0_abs"] = std::abs(corr.u0());
    summary["fringe_frequency_cycles_per_lambda0"] = quantum.frequency;
    summary["expected_two_photon_cycles_per_lambda0"] = 4.0; // 4 k0 / 2 pi
    summary["classical_frequency_cycles_per_lambda0"] = reference.frequency;
    summary["frequency_resolution_cycles_per_lambda0"] = quantum.resolution;
    summary["fft_bin"] = quantum.bin;
    summary["classical_fft_bin"] = reference.bin;
    summary["visibility"] = fringe_visibility(geom, corr);
    summary["max_abs_intensity_minus_1"] = worst_intensity;
    sidecar["summary"] = summary;
    if (!corr.warning().empty()) sidecar["warnings"] = ordered_json::array({corr.warning()});

    if (cfg.format == "csv") {
        write_text_file(cfg.out_path + ".csv", csv_table("dx,absorption,intensity", rows));
        write_text_file(cfg.out_path + ".json", sidecar.dump(2) + "\n");
    } else {
        ordered_json data;
        std::vector<double> dx_um, inten;
        for (const auto& r : rows) dx_um.push_back(r[0]);
        for (const auto& s : samples) inten.push_back(s.intensity);
        data["dx_um"] = dx_um;
        data["absorption"] = absorption;
        data["intensity"] = inten;
        sidecar["data"] = data;
        write_text_file(cfg.out_path + ".json", sidecar.dump(2) + "\n");
    }

    std::printf("fringe: %zu samples, frequency %.6g cycles/lambda0 (classical %.6g), "
                "visibility %.12g, max |I-1| %.3g -> %s.%s\n",
                samples.size(), quantum.frequency, reference.frequency,
                summary["visibility"].get<double>(), worst_intensity, cfg.out_path.c_str(),
                cfg.format == "csv" ? "csv" : "json");
    return kExitOk;
}

int cmd_correlation(const ConfigCli& cli) {
    const RunConfig cfg = resolve_config(cli, "correlation");
    const UnitSystem units = cfg.units();

    const CorrelationFunction corr(cfg.make_crystal(), cfg.make_spectrum(), cfg.make_grid());
    if (!corr.warning().empty()) std::cerr << "warning: " << corr.warning() << "\n";

    const double z_min = units.length_from_um(cfg.z_min_um);
    const double z_max = units.length_from_um(cfg.z_max_um);
    const double u0_abs = std::abs(corr.u0());

    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < cfg.z_samples; ++j) {
        const double z =
            z_min + (z_max - z_min) * static_cast<double>(j) / static_cast<double>(cfg.z_samples - 1);
        const cplx u = corr(z);
        rows.push_back({units.length_to_um(z), u.real(), u.imag(), std::abs(u) / u0_abs});
    }

    // symmetry diagnostics over the positive half of the scanned range
    std::vector<double> z_pos(51);
    const double z_span = std::max(std::abs(z_min), std::abs(z_max));
    for (std::size_t j = 0; j < z_pos.size(); ++j)
        z_pos[j] = z_span * static_cast<double>(j + 1) / static_cast<double>(z_pos.size());
    const auto sym = symmetry_check(corr, z_pos);

    ordered_json sidecar = make_sidecar("correlation", cfg);
    ordered_json summary;
    summary["u0_abs"] = u0_abs;
    summary["max_even_violation"] = sym.max_even_violation;
    summary["max_imag_fraction"] = sym.max_imag_fraction;
    summary["imag_fraction_asserted"] = cfg.crystal_kind == "type2";
    sidecar["summary"] = summary;
    if (!corr.warning().empty()) sidecar["warnings"] = ordered_json::array({corr.warning()});

    if (cfg.format == "csv") {
        write_text_file(cfg.out_path + ".csv", csv_table("z,re_u,im_u,abs_u_norm", rows));
        write_text_file(cfg.out_path + ".json", sidecar.dump(2) + "\n");
    } else {
        ordered_json data;
        std::vector<double> z_um, re, im, norm;
        for (const auto& r : rows) {
            z_um.push_back(r[0]);
            re.push_back(r[1]);
            im.push_back(r[2]);
            norm.push_back(r[3]);
        }
        data["z_um"] = z_um;
        data["re_u"] = re;
        data["im_u"] = im;
        data["abs_u_norm"] = norm;
        sidecar["data"] = data;
        write_text_file(cfg.out_path + ".json", sidecar.dump(2) + "\n");
    }

    std::printf("correlation: %zu samples, |u(0)| %.6g, even violation %.3g, imag fraction %.3g -> %s\n",
                rows.size(), u0_abs, sym.max_even_violation, sym.max_imag_fraction,
                cfg.out_path.c_str());
    return kExitOk;
}

int cmd_oracle(const ConfigCli& cli, std::size_t expansion_points, std::size_t oracle_samples,
               double threshold, bool expansion_set) {
    const RunConfig cfg = resolve_config(cli, "");
    const UnitSystem units = cfg.units();

    const auto crystal = cfg.make_crystal();
    const auto spectrum = cfg.make_spectrum();
    const auto grid = cfg.make_grid();

    if (expansion_set && expansion_points != cfg.grid_points) {
        // deliberately mismatched grids: the mode pairing must refuse
        const auto state = build_state(crystal, grid);
        const auto field =
            build_field_expansion(spectrum, cfg.make_geometry(), cfg.make_grid(expansion_points));
        amplitude_oracle(state, field); // throws GridMismatchError
        return kExitOk;                 // unreachable
    }

    std::vector<double> dx(oracle_samples);
    const double dx_min = units.length_from_um(cfg.dx_min_um);
    const double dx_max = units.length_from_um(cfg.dx_max_um);
    for (std::size_t j = 0; j < dx.size(); ++j)
        dx[j] = dx_min + (dx_max - dx_min) * static_cast<double>(j) / static_cast<double>(dx.size());

    const auto report = compare_with_analytic(crystal, spectrum, grid, cfg.make_geometry(), dx);
    const bool pass = report.max_amp_reldiff < threshold && report.max_int_reldiff < threshold;

    ordered_json j = make_sidecar("oracle", cfg);
    ordered_json rep;
    rep["max_amp_reldiff"] = report.max_amp_reldiff;
    rep["max_int_reldiff"] = report.max_int_reldiff;
    rep["n_dx_samples"] = report.n_samples;
    rep["threshold"] = threshold;
    rep["pass"] = pass;
    j["report"] = rep;

    std::cout << j.dump(2) << "\n";
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path + ".json", j.dump(2) + "\n");
    return pass ? kExitOk : kExitThreshold;
}

int emit_report(const ordered_json& j, const std::string& out_path) {
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) write_text_file(out_path + ".json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_phasematch(const std::string& process_name, double pump_wavelength_nm, double chi2, double chi3,
                   std::vector<double> signal_k, std::vector<double> idler_k, double signal_omega,
                   double idler_omega, bool signal_omega_set, bool idler_omega_set,
                   const std::string& out_path) {
    const Process process = process_name == "hps" ? Process::HPS : Process::SPDC;

    // frequencies in units of the pump frequency; vacuum collinear wavevectors
    auto pm = PhaseMatchCase::degenerate_collinear(process, 1.0);
    if (signal_omega_set) pm.signal_omega = signal_omega;
    if (idler_omega_set) pm.idler_omega = idler_omega;
    if (signal_k.size() == 3) pm.signal_k = {signal_k[0], signal_k[1], signal_k[2]};
    if (idler_k.size() == 3) pm.idler_k = {idler_k[0], idler_k[1], idler_k[2]};

    const auto residual = phase_match_residual(pm);
    const bool matched = residual.energy == 0.0 && residual.momentum.x == 0.0 &&
                         residual.momentum.y == 0.0 && residual.momentum.z == 0.0;

    ordered_json j;
    j["tool"] = "qlitho";
    j["command"] = "phasematch";
    j["process"] = process == Process::HPS ? "hps" : "spdc";
    j["pump_wavelength_nm"] = pump_wavelength_nm;
    j["degenerate_output_wavelength_nm"] = degenerate_output_wavelength(process, pump_wavelength_nm);
    j["momentum_residual"] = {residual.momentum.x, residual.momentum.y, residual.momentum.z};
    j["energy_residual"] = residual.energy;
    j["phase_matched"] = matched;
    j["chi2_cgs"] = chi2;
    j["chi3_cgs"] = chi3;
    j["efficiency_crossover_field_cgs"] = efficiency_crossover_field({chi2, chi3});
    return emit_report(j, out_path);
}

int cmd_exposure_fit(const std::vector<std::string>& point_args, const std::string& out_path) {
    std::vector<ExposurePoint> points;
    for (const auto& arg : point_args) {
        const auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw DegenerateInputError("exposure point must be 'intensity,time': " + arg);
        points.push_back({std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1))});
    }
    const auto fit = exposure_order(points);

    ordered_json j;
    j["tool"] = "qlitho";
    j["command"] = "exposure-fit";
    ordered_json pts = ordered_json::array();
    for (const auto& p : points)
        pts.push_back({{"intensity_w_cm2", p.intensity}, {"threshold_time_s", p.threshold_time},
                       {"dose_j_cm2", p.intensity * p.threshold_time}});
    j["points"] = pts;
    j["order_n"] = fit.order_n;
    j["per_pair"] = fit.per_pair;
    j["interpretation"] = fit.order_n < 1.5 ? "single-photon" : "multi-photon";
    return emit_report(j, out_path);
}

int cmd_fwhm(const std::vector<std::size_t>& orders, const std::string& out_path) {
    ordered_json j;
    j["tool"] = "qlitho";
    j["command"] = "fwhm";
    ordered_json list = ordered_json::array();
    for (std::size_t n : orders) {
        const auto r = diffraction_fwhm(n);
        list.push_back({{"order", n},
                        {"half_width", r.half_width},
                        {"fwhm", r.fwhm},
                        {"narrowing_vs_order1", r.narrowing_vs_order1}});
    }
    j["orders"] = list;
    return emit_report(j, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-photon interferometric lithography simulator"};
    app.require_subcommand(1);

    ConfigCli fringe_cli, corr_cli, oracle_cli;
    auto* fringe = app.add_subcommand("fringe", "absorption/intensity scan over the substrate");
    add_config_options(fringe, fringe_cli);

    auto* correlation = app.add_subcommand("correlation", "tabulate the correlation function u(z)");
    add_config_options(correlation, corr_cli);

    auto* oracle = app.add_subcommand("oracle", "compare analytic amplitudes with the Fock oracle");
    add_config_options(oracle, oracle_cli);
    std::size_t expansion_points = 0;
    std::size_t oracle_samples = 101;
    double threshold = 1e-8;
    auto* expansion_opt = oracle->add_option("--expansion-points", expansion_points,
                                             "field-expansion grid size (mismatch demo)");
    oracle->add_option("--oracle-samples", oracle_samples, "dx sample count")->check(CLI::PositiveNumber);
    oracle->add_option("--threshold", threshold, "max allowed relative difference");

    auto* phasematch = app.add_subcommand("phasematch", "SPDC/HPS phase matching report");
    std::string process = "spdc";
    double pump_wavelength_nm = 400.0;
    double chi2 = 1e-8, chi3 = 1e-15;
    std::vector<double> signal_k, idler_k;
    double signal_omega = 0.0, idler_omega = 0.0;
    phasematch->add_option("--process", process)->check(CLI::IsMember({"spdc", "hps"}));
    phasematch->add_option("--pump-wavelength-nm", pump_wavelength_nm);
    phasematch->add_option("--chi2", chi2, "chi^(2) [1/CGS field]");
    phasematch->add_option("--chi3", chi3, "chi^(3) [1/CGS field^2]");
    phasematch->add_option("--signal-k", signal_k, "signal wavevector x,y,z (pump units)")
        ->delimiter(',')
        ->expected(3);
    phasematch->add_option("--idler-k", idler_k, "idler wavevector x,y,z (pump units)")
        ->delimiter(',')
        ->expected(3);
    auto* so = phasematch->add_option("--signal-omega", signal_omega, "signal frequency (pump units)");
    auto* io = phasematch->add_option("--idler-omega", idler_omega, "idler frequency (pump units)");
    std::string phasematch_out;
    phasematch->add_option("--out", phasematch_out, "also write the report to <out>.json");

    auto* exposure = app.add_subcommand("exposure-fit", "photon order from threshold exposures");
    std::vector<std::string> point_args;
    std::string exposure_out;
    exposure->add_option("--point", point_args, "exposure point 'I[W/cm2],t[s]'")->required();
    exposure->add_option("--out", exposure_out, "also write the report to <out>.json");

    auto* fwhm = app.add_subcommand("fwhm", "multi-photon diffraction narrowing");
    std::vector<std::size_t> orders{1, 2};
    std::string fwhm_out;
    fwhm->add_option("--order", orders, "detector orders to evaluate");
    fwhm->add_option("--out", fwhm_out, "also write the report to <out>.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fringe->parsed()) return cmd_fringe(fringe_cli);
        if (correlation->parsed()) return cmd_correlation(corr_cli);
        if (oracle->parsed())
            return cmd_oracle(oracle_cli, expansion_points, oracle_samples, threshold,
                              expansion_opt->count() > 0);
        if (phasematch->parsed())
            return cmd_phasematch(process, pump_wavelength_nm, chi2, chi3, signal_k, idler_k,
                                  signal_omega, idler_omega, so->count() > 0, io->count() > 0,
                                  phasematch_out);
        if (exposure->parsed()) return cmd_exposure_fit(point_args, exposure_out);
        if (fwhm->parsed()) return cmd_fwhm(orders, fwhm_out);
    } catch (const GridTooCoarseError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const GridMismatchError& e) {
        std::cerr << "config error: GridMismatch: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
