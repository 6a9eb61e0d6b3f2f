#include "qlitho/grid.hpp"

#include <stdexcept>

namespace qlitho {

FrequencyGrid FrequencyGrid::make(std::size_t n_points, double nu_max) {
    if (n_points == 0) throw std::invalid_argument("FrequencyGrid: n_points must be >= 1");

    FrequencyGrid g;
    if (n_points == 1) {
        g.nodes_ = {0.0};
        g.weights_ = {1.0};
        g.nu_max_ = 0.0;
        g.spacing_ = 0.0;
        return g;
    }

    if (!(nu_max > 0.0)) throw std::invalid_argument("FrequencyGrid: nu_max must be > 0");

    const std::size_t n = n_points;
    const double spacing = 2.0 * nu_max / static_cast<double>(n - 1);
    g.nodes_.resize(n);
    g.weights_.assign(n, spacing);
    g.weights_.front() = 0.5 * spacing;
    g.weights_.back() = 0.5 * spacing;
    g.nu_max_ = nu_max;
    g.spacing_ = spacing;

    // left half computed, right half mirrored for bitwise symmetry
    for (std::size_t j = 0; j < n / 2; ++j) {
        const double nu = -nu_max + static_cast<double>(j) * spacing;
        g.nodes_[j] = nu;
        g.nodes_[n - 1 - j] = -nu;
    }
    if (n % 2 == 1) g.nodes_[n / 2] = 0.0;
    return g;
}

} // namespace qlitho
