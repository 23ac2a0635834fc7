#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sft/fft.hpp"

using namespace sft;

namespace {

std::vector<cplx> naive_dft(const std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t)
            out[k] += x[t] * std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                                 static_cast<double>(k * t) / n);
    return out;
}

std::vector<cplx> naive_centered_2d(const std::vector<cplx>& x, int n0, int n1, int sign) {
    std::vector<cplx> out(x.size(), 0.0);
    for (int p = 0; p < n0; ++p)
        for (int q = 0; q < n1; ++q) {
            cplx acc = 0.0;
            for (int n = 0; n < n0; ++n)
                for (int j = 0; j < n1; ++j) {
                    const double ph = 2.0 * std::numbers::pi *
                                      ((n - n0 / 2) * (p - n0 / 2) / static_cast<double>(n0) +
                                       (j - n1 / 2) * (q - n1 / 2) / static_cast<double>(n1));
                    acc += x[static_cast<std::size_t>(n) * n1 + j] * std::polar(1.0, sign * ph);
                }
            out[static_cast<std::size_t>(p) * n1 + q] = acc;
        }
    return out;
}

}  // namespace

TEST_CASE("radix-2 FFT matches the naive DFT") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {2u, 8u, 32u, 64u}) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = cplx(u(rng), u(rng));
        for (int sign : {-1, +1}) {
            std::vector<cplx> got = x;
            fft_radix2(got, sign);
            const auto want = naive_dft(x, sign);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-11);
        }
    }
    std::vector<cplx> bad(3);
    CHECK_THROWS_AS(fft_radix2(bad, -1), std::invalid_argument);
}

TEST_CASE("FFT round trip") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> x(128);
    for (auto& v : x) v = cplx(u(rng), u(rng));
    std::vector<cplx> y = x;
    fft_radix2(y, -1);
    fft_radix2(y, +1);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(std::abs(y[i] / static_cast<double>(x.size()) - x[i]) < 1e-12);
}

TEST_CASE("centered 2D DFT matches the quadratic-phase sum") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n0 = 8, n1 = 16;
    std::vector<cplx> x(static_cast<std::size_t>(n0) * n1);
    for (auto& v : x) v = cplx(u(rng), u(rng));
    for (int sign : {-1, +1}) {
        std::vector<cplx> got = x;
        centered_dft_2d(got.data(), n0, n1, sign);
        const auto want = naive_centered_2d(x, n0, n1, sign);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-10);
    }
}
