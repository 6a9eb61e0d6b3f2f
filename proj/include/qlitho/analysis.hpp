#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qlitho {

/// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

/// Brute-force DFT, any size. Reference for the FFT and fallback for
/// non-power-of-two scans.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> data);

struct SpectralPeak {
    double frequency = 0.0;  // cycles per unit of `spacing`
    std::size_t bin = 0;
    double resolution = 0.0; // one bin, 1 / (n * spacing)
};

/// Dominant nonzero frequency of a real uniformly sampled signal: the mean
/// is removed and the largest-magnitude bin in (0, n/2] wins.
SpectralPeak spectral_peak(std::span<const double> samples, double spacing);

} // namespace qlitho
