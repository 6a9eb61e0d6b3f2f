#include "qlitho/config.hpp"

#include <fstream>
#include <stdexcept>

namespace qlitho {

namespace {

template <typename T>
void read_key(const ordered_json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

std::vector<std::string> RunConfig::validate() const {
    std::vector<std::string> errors;
    if (!(lambda0_nm > 0.0)) errors.push_back("lambda0_nm must be > 0");
    if (crystal_kind != "type1" && crystal_kind != "type2")
        errors.push_back("crystal.kind must be 'type1' or 'type2'");
    if (!(crystal_length >= 0.0)) errors.push_back("crystal.length must be >= 0");
    if (spectrum_shape != "gaussian" && spectrum_shape != "rectangular")
        errors.push_back("spectrum.shape must be 'gaussian' or 'rectangular'");
    if (!(sigma_rel > 0.0)) errors.push_back("spectrum.sigma_rel must be > 0");
    if (!(sigma_p_rel >= 0.0)) errors.push_back("pump.sigma_p_rel must be >= 0");
    if (!(l1_um >= 0.0)) errors.push_back("geometry.l1_um must be >= 0");
    if (!(l2_um >= 0.0)) errors.push_back("geometry.l2_um must be >= 0");
    if (!(x1_um >= 0.0)) errors.push_back("geometry.x1_um must be >= 0");
    if (!(x2_um >= 0.0)) errors.push_back("geometry.x2_um must be >= 0");
    if (grid_points < 1) errors.push_back("grid.n_points must be >= 1");
    if (!(nu_max_sigmas > 0.0)) errors.push_back("grid.nu_max_sigmas must be > 0");
    if (scan_samples < 2) errors.push_back("scan.n_samples must be >= 2");
    if (!(dx_max_um > dx_min_um)) errors.push_back("scan.dx_max_um must exceed scan.dx_min_um");
    if (dx_max_um > 0.5 * (x1_um + x2_um))
        errors.push_back("scan.dx_max_um must not exceed half the total output path x1_um + x2_um");
    if (z_samples < 2) errors.push_back("zscan.n_samples must be >= 2");
    if (!(z_max_um > z_min_um)) errors.push_back("zscan.z_max_um must exceed zscan.z_min_um");
    if (format != "csv" && format != "json") errors.push_back("output.format must be 'csv' or 'json'");
    return errors;
}

NonlinearCrystal RunConfig::make_crystal() const {
    if (crystal_kind == "type1") return NonlinearCrystal::type1(crystal_length, d_prime);
    return NonlinearCrystal::type2(crystal_length, d_const);
}

SignalSpectrum RunConfig::make_spectrum() const {
    if (spectrum_shape == "rectangular") return SignalSpectrum::rectangular(sigma_internal());
    return SignalSpectrum::gaussian(sigma_internal());
}

FrequencyGrid RunConfig::make_grid() const { return make_grid(grid_points); }

FrequencyGrid RunConfig::make_grid(std::size_t n_points) const {
    return FrequencyGrid::make(n_points, nu_max_sigmas * sigma_internal());
}

Geometry RunConfig::make_geometry() const {
    const UnitSystem u = units();
    return Geometry(u.length_from_um(l1_um), u.length_from_um(l2_um), u.length_from_um(x1_um),
                    u.length_from_um(x2_um));
}

PumpEnvelope RunConfig::make_pump_envelope() const {
    return PumpEnvelope(sigma_p_rel * UnitSystem::omega0());
}

ordered_json RunConfig::to_json() const {
    ordered_json j;
    j["lambda0_nm"] = lambda0_nm;
    j["crystal"] = {{"kind", crystal_kind},
                    {"length", crystal_length},
                    {"d", d_const},
                    {"dprime", d_prime}};
    j["spectrum"] = {{"shape", spectrum_shape}, {"sigma_rel", sigma_rel}};
    j["pump"] = {{"sigma_p_rel", sigma_p_rel}};
    j["geometry"] = {{"l1_um", l1_um}, {"l2_um", l2_um}, {"x1_um", x1_um}, {"x2_um", x2_um}};
    j["grid"] = {{"n_points", grid_points}, {"nu_max_sigmas", nu_max_sigmas}};
    j["scan"] = {{"dx_min_um", dx_min_um}, {"dx_max_um", dx_max_um}, {"n_samples", scan_samples}};
    j["zscan"] = {{"z_min_um", z_min_um}, {"z_max_um", z_max_um}, {"n_samples", z_samples}};
    j["output"] = {{"path", out_path}, {"format", format}};
    return j;
}

RunConfig RunConfig::from_json(const ordered_json& input) {
    const ordered_json& j =
        (input.contains("config") && input.at("config").is_object()) ? input.at("config") : input;

    RunConfig cfg;
    read_key(j, "lambda0_nm", cfg.lambda0_nm);
    if (j.contains("crystal")) {
        const auto& c = j.at("crystal");
        read_key(c, "kind", cfg.crystal_kind);
        read_key(c, "length", cfg.crystal_length);
        read_key(c, "d", cfg.d_const);
        read_key(c, "dprime", cfg.d_prime);
    }
    if (j.contains("spectrum")) {
        const auto& s = j.at("spectrum");
        read_key(s, "shape", cfg.spectrum_shape);
        read_key(s, "sigma_rel", cfg.sigma_rel);
    }
    if (j.contains("pump")) read_key(j.at("pump"), "sigma_p_rel", cfg.sigma_p_rel);
    if (j.contains("geometry")) {
        const auto& g = j.at("geometry");
        read_key(g, "l1_um", cfg.l1_um);
        read_key(g, "l2_um", cfg.l2_um);
        read_key(g, "x1_um", cfg.x1_um);
        read_key(g, "x2_um", cfg.x2_um);
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        read_key(g, "n_points", cfg.grid_points);
        read_key(g, "nu_max_sigmas", cfg.nu_max_sigmas);
    }
    if (j.contains("scan")) {
        const auto& s = j.at("scan");
        read_key(s, "dx_min_um", cfg.dx_min_um);
        read_key(s, "dx_max_um", cfg.dx_max_um);
        read_key(s, "n_samples", cfg.scan_samples);
    }
    if (j.contains("zscan")) {
        const auto& s = j.at("zscan");
        read_key(s, "z_min_um", cfg.z_min_um);
        read_key(s, "z_max_um", cfg.z_max_um);
        read_key(s, "n_samples", cfg.z_samples);
    }
    if (j.contains("output")) {
        const auto& o = j.at("output");
        read_key(o, "path", cfg.out_path);
        read_key(o, "format", cfg.format);
    }
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ordered_json j;
    in >> j;
    return from_json(j);
}

} // namespace qlitho
