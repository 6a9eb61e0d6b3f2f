#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "qlitho/config.hpp"
#include "qlitho/io.hpp"

using namespace qlitho;

namespace {

bool has_error(const std::vector<std::string>& errors, const std::string& needle) {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("unit system: k0 is exactly 2 pi, lengths round-trip") {
    const UnitSystem u(800e-9);
    CHECK(UnitSystem::k0() == kTwoPi);
    CHECK(UnitSystem::omega0() == kTwoPi);
    CHECK(u.length_from_um(0.8) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u.length_to_um(u.length_from_um(123.4)) == doctest::Approx(123.4).epsilon(1e-14));
    CHECK_THROWS_AS(UnitSystem(0.0), std::invalid_argument);
}

TEST_CASE("default config validates cleanly and builds internal objects") {
    RunConfig cfg;
    CHECK(cfg.validate().empty());
    CHECK(cfg.make_crystal().kind() == CrystalKind::TypeII);
    CHECK(cfg.make_spectrum().sigma() == doctest::Approx(0.05 * UnitSystem::omega0()).epsilon(1e-15));
    CHECK(cfg.make_grid().size() == 4096);

    const Geometry g = cfg.make_geometry();
    CHECK(g.dl() == 0.0); // identical arm inputs subtract exactly
    CHECK(g.l1() == doctest::Approx(100.0).epsilon(1e-12)); // 80 um at 800 nm
}

TEST_CASE("validation names the offending field") {
    RunConfig cfg;
    cfg.scan_samples = 1;
    CHECK(has_error(cfg.validate(), "n_samples must be >= 2"));

    cfg = RunConfig{};
    cfg.crystal_kind = "type3";
    CHECK(has_error(cfg.validate(), "crystal.kind"));

    cfg = RunConfig{};
    cfg.sigma_rel = 0.0;
    CHECK(has_error(cfg.validate(), "spectrum.sigma_rel"));

    cfg = RunConfig{};
    cfg.dx_max_um = cfg.dx_min_um;
    CHECK(has_error(cfg.validate(), "scan.dx_max_um"));

    cfg = RunConfig{};
    cfg.format = "xml";
    CHECK(has_error(cfg.validate(), "output.format"));

    cfg = RunConfig{};
    cfg.l1_um = -1.0;
    CHECK(has_error(cfg.validate(), "geometry.l1_um"));
}

TEST_CASE("config json round trip, including sidecar unwrapping") {
    RunConfig cfg;
    cfg.crystal_kind = "type1";
    cfg.sigma_rel = 0.11;
    cfg.grid_points = 512;
    cfg.out_path = "run42";

    const ordered_json j = cfg.to_json();
    const RunConfig back = RunConfig::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.crystal_kind == "type1");
    CHECK(back.sigma_rel == 0.11);
    CHECK(back.grid_points == 512);

    ordered_json sidecar;
    sidecar["config"] = j;
    sidecar["summary"] = {{"anything", 1}};
    CHECK(RunConfig::from_json(sidecar).to_json() == j);
}

TEST_CASE("double formatting is shortest-round-trip and deterministic") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-2.5e-7) == "-2.4999999999999999e-07");
    CHECK(format_double(0.1) == format_double(0.1));

    double x = 0.1;
    for (int i = 0; i < 5; ++i) x = std::nextafter(x, 1.0);
    CHECK(format_double(x) != format_double(0.1)); // distinct doubles stay distinct
}

TEST_CASE("csv table layout") {
    const std::string csv = csv_table("a,b", {{1.0, 2.0}, {0.5, -1.0}});
    CHECK(csv == "a,b\n1,2\n0.5,-1\n");
}
