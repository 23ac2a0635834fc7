#include "sft/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sft {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::span<cplx> a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_radix2: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // precomputed twiddles for the longest stage, strided for shorter ones
    std::vector<cplx> tw(n / 2);
    const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k)
        tw[k] = std::polar(1.0, base * static_cast<double>(k));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx w = tw[k * stride];
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

void centered_dft_2d(cplx* data, int n0, int n1, int sign) {
    if (!is_pow2(static_cast<std::size_t>(n0)) || !is_pow2(static_cast<std::size_t>(n1)))
        throw std::invalid_argument("centered_dft_2d: dimensions must be powers of two");
    if (n0 < 2 || n1 < 2)
        throw std::invalid_argument("centered_dft_2d: dimensions must be even");

    // exp(sign i 2pi (n - N/2)(p - N/2)/N) = (-1)^n (-1)^p (-1)^{N/2} e^{sign 2pi i np/N}
    const double global = (((n0 / 2 + n1 / 2) % 2) != 0) ? -1.0 : 1.0;

    for (int n = 0; n < n0; ++n)
        for (int j = 0; j < n1; ++j)
            if ((n + j) & 1) data[static_cast<std::size_t>(n) * n1 + j] *= -1.0;

    for (int n = 0; n < n0; ++n)
        fft_radix2(std::span<cplx>(data + static_cast<std::size_t>(n) * n1,
                                   static_cast<std::size_t>(n1)),
                   sign);

    std::vector<cplx> col(static_cast<std::size_t>(n0));
    for (int q = 0; q < n1; ++q) {
        for (int n = 0; n < n0; ++n) col[static_cast<std::size_t>(n)] = data[static_cast<std::size_t>(n) * n1 + q];
        fft_radix2(col, sign);
        for (int p = 0; p < n0; ++p) data[static_cast<std::size_t>(p) * n1 + q] = col[static_cast<std::size_t>(p)];
    }

    for (int p = 0; p < n0; ++p)
        for (int q = 0; q < n1; ++q) {
            double s = global;
            if ((p + q) & 1) s = -s;
            data[static_cast<std::size_t>(p) * n1 + q] *= s;
        }
}

}  // namespace sft
