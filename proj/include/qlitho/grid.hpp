#pragma once

#include <cstddef>
#include <vector>

namespace qlitho {

/// Uniform symmetric detuning grid with composite-trapezoid weights.
/// Nodes are built in mirror pairs, node[n-1-j] == -node[j] bitwise, so
/// odd-integrand cancellations and the Kronecker pairing nu <-> -nu used
/// by the Fock oracle are exact. A single-node grid is the plane-wave
/// limit {nu = 0, weight = 1}.
class FrequencyGrid {
public:
    static FrequencyGrid make(std::size_t n_points, double nu_max);

    std::size_t size() const { return nodes_.size(); }
    double node(std::size_t j) const { return nodes_[j]; }
    double weight(std::size_t j) const { return weights_[j]; }
    std::size_t mirror_index(std::size_t j) const { return nodes_.size() - 1 - j; }

    double nu_max() const { return nu_max_; }
    double spacing() const { return spacing_; }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    bool operator==(const FrequencyGrid& other) const {
        return nodes_ == other.nodes_ && weights_ == other.weights_;
    }

private:
    FrequencyGrid() = default;

    std::vector<double> nodes_;
    std::vector<double> weights_;
    double nu_max_ = 0.0;
    double spacing_ = 0.0;
};

} // namespace qlitho
