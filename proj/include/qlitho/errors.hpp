#pragma once

#include <stdexcept>
#include <string>

namespace qlitho {

/// Requested z exceeds what the frequency grid can resolve (Nyquist bound
/// for the oscillatory factor exp(i nu z)). Remedy: more grid points or a
/// smaller nu_max.
class GridTooCoarseError : public std::runtime_error {
public:
    explicit GridTooCoarseError(const std::string& what) : std::runtime_error(what) {}
};

/// A state and a field expansion built on different frequency grids were
/// combined. The discrete mode pairing requires identical grids.
class GridMismatchError : public std::runtime_error {
public:
    explicit GridMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data cannot determine the requested quantity (e.g. two exposure
/// points with equal intensities).
class DegenerateInputError : public std::invalid_argument {
public:
    explicit DegenerateInputError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qlitho
