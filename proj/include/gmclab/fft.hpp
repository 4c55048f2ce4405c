#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace gmclab {

// In-place iterative radix-2 FFT. sign = -1 forward, +1 inverse (unscaled).
inline void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_radix2: length must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Fourier coefficients c_j = (1/L) sum_m f(2*pi*m/L) e^{-ij 2*pi*m/L} for
// j = 0..L-1 (negative j wrap around). Input consumed.
inline std::vector<std::complex<double>> fourier_coefficients(std::vector<std::complex<double>> samples) {
    const double inv = 1.0 / static_cast<double>(samples.size());
    fft_radix2(samples, -1);
    for (auto& c : samples) c *= inv;
    return samples;
}

inline size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace gmclab
