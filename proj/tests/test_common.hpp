#pragma once

#include <cstdint>
#include <random>

namespace qlitho::testing {

/// Uniform doubles in [0, 1) from the standardized mt19937_64 stream.
/// std::uniform_real_distribution is implementation-defined, so the
/// mapping is done by hand to keep test data identical everywhere.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : rng_(seed) {}

    double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double in(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 rng_;
};

} // namespace qlitho::testing
