#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlitho/correlation.hpp"
#include "qlitho/grid.hpp"
#include "qlitho/interferometer.hpp"
#include "qlitho/spectra.hpp"
#include "qlitho/units.hpp"

namespace qlitho {

using ordered_json = nlohmann::ordered_json;

/// One run configuration, user-facing units at the boundary: lengths in
/// micrometers, the reference wavelength in nanometers, bandwidths as
/// fractions of omega0, dispersion constants directly in internal units.
/// All conversion to internal units happens in the make_* builders.
struct RunConfig {
    double lambda0_nm = 800.0;

    std::string crystal_kind = "type2";
    double crystal_length = 1.0; // internal units
    double d_const = 1.0;        // type-II group-delay constant
    double d_prime = 1.0;        // type-I dispersion constant

    std::string spectrum_shape = "gaussian";
    double sigma_rel = 0.05; // sigma / omega0

    double sigma_p_rel = 0.0; // pump bandwidth / omega0, 0 = plane wave

    double l1_um = 80.0;
    double l2_um = 80.0;
    double x1_um = 40.0;
    double x2_um = 40.0;

    std::size_t grid_points = 4096;
    double nu_max_sigmas = 8.0;

    double dx_min_um = 0.0;
    double dx_max_um = 1.6;
    std::size_t scan_samples = 2048;

    double z_min_um = -25.6;
    double z_max_um = 25.6;
    std::size_t z_samples = 401;

    std::string out_path;
    std::string format = "csv";

    /// Field-by-field validation; each message names the offending key.
    std::vector<std::string> validate() const;

    UnitSystem units() const { return UnitSystem(lambda0_nm * 1e-9); }
    NonlinearCrystal make_crystal() const;
    SignalSpectrum make_spectrum() const;
    FrequencyGrid make_grid() const;
    FrequencyGrid make_grid(std::size_t n_points) const;
    Geometry make_geometry() const;
    PumpEnvelope make_pump_envelope() const;

    double sigma_internal() const { return sigma_rel * UnitSystem::omega0(); }

    ordered_json to_json() const;

    /// Accepts either a bare config object or a run sidecar (an object
    /// holding the config under a "config" key), so sidecars replay runs.
    static RunConfig from_json(const ordered_json& j);
    static RunConfig load(const std::string& path);
};

} // namespace qlitho
