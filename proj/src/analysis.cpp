#include "qlitho/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qlitho {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

void fft_radix2(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft_radix2: size must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen{std::cos(angle), std::sin(angle)};
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto even = data[i + j];
                const auto odd = data[i + j + len / 2] * w;
                data[i + j] = even + odd;
                data[i + j + len / 2] = even - odd;
                w *= wlen;
            }
        }
    }
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> data) {
    const std::size_t n = data.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double angle =
                -2.0 * std::numbers::pi * static_cast<double>(k) * static_cast<double>(j) / static_cast<double>(n);
            sum += data[j] * std::complex<double>{std::cos(angle), std::sin(angle)};
        }
        out[k] = sum;
    }
    return out;
}

SpectralPeak spectral_peak(std::span<const double> samples, double spacing) {
    const std::size_t n = samples.size();
    if (n < 4) throw std::invalid_argument("spectral_peak: need at least 4 samples");
    if (!(spacing > 0.0)) throw std::invalid_argument("spectral_peak: spacing must be > 0");

    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(n);

    std::vector<std::complex<double>> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = samples[j] - mean;

    std::vector<std::complex<double>> spectrum;
    if (is_power_of_two(n)) {
        fft_radix2(x);
        spectrum = std::move(x);
    } else {
        spectrum = dft(x);
    }

    std::size_t best = 1;
    double best_mag = 0.0;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        const double mag = std::abs(spectrum[k]);
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }

    const double window = static_cast<double>(n) * spacing;
    return {static_cast<double>(best) / window, best, 1.0 / window};
}

} // namespace qlitho
