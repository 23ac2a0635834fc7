#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace sft {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n);

/// In-place radix-2 Cooley-Tukey FFT, unnormalized.
/// sign = -1: X[k] = sum_n x[n] e^{-2 pi i n k / N}; sign = +1: conjugate
/// phases (still no 1/N factor). N must be a power of two.
void fft_radix2(std::span<cplx> a, int sign);

/// Centered 2D DFT on a row-major n0 x n1 plane:
///   X[p][q] = sum_{n,j} exp(sign * i * 2pi * ((n - n0/2)(p - n0/2)/n0
///                                           + (j - n1/2)(q - n1/2)/n1)) x[n][j]
/// n0, n1 must be even powers of two. Implemented as pre/post (-1)^index
/// twiddles around row/column FFTs.
void centered_dft_2d(cplx* data, int n0, int n1, int sign);

}  // namespace sft
