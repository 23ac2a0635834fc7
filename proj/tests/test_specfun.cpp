#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <numbers>

#include "sft/specfun.hpp"

using namespace sft;

namespace {

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / i;
    return v;
}

// Finite series oracle: L_t^k(x) = sum_{i=0}^t (-1)^i C(t+k, t-i) x^i / i!
double laguerre_series(int t, int k, double x) {
    double sum = 0.0;
    double xpow = 1.0;
    for (int i = 0; i <= t; ++i) {
        sum += ((i % 2 == 0) ? 1.0 : -1.0) * binom(t + k, t - i) * xpow / factorial(i);
        xpow *= x;
    }
    return sum;
}

}  // namespace

TEST_CASE("laguerre point values") {
    CHECK(laguerre(0, 3, 2.5) == 1.0);
    CHECK(laguerre(1, 1, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(laguerre(2, 1, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS(laguerre(-1, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre(0, -2, 1.0), std::invalid_argument);
}

TEST_CASE("laguerre recurrence equals the finite series") {
    for (int t = 0; t <= 20; t += 4)
        for (int k = 0; k <= 20; k += 5)
            for (double x : {-50.0, -3.2, 0.0, 0.7, 12.0, 50.0}) {
                const double a = laguerre(t, k, x);
                const double b = laguerre_series(t, k, x);
                const double scale = std::max({1.0, std::abs(a), std::abs(b)});
                CHECK(std::abs(a - b) / scale < 1e-12);
            }
}

TEST_CASE("laguerre ODE residual converges at O(h^2)") {
    // x y'' + (k + 1 - x) y' + t y = 0
    const int t = 5, k = 2;
    auto residual = [&](double h) {
        double worst = 0.0;
        for (double x = 0.5; x < 8.0; x += 0.25) {
            const double y0 = laguerre(t, k, x);
            const double yp = (laguerre(t, k, x + h) - laguerre(t, k, x - h)) / (2 * h);
            const double ypp =
                (laguerre(t, k, x + h) - 2 * y0 + laguerre(t, k, x - h)) / (h * h);
            worst = std::max(worst, std::abs(x * ypp + (k + 1 - x) * yp + t * y0));
        }
        return worst;
    };
    const double r = residual(1e-2) / residual(5e-3);
    CHECK(r > 3.5);
    CHECK(r < 4.5);
}

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_value(1.0) == 1.0);
    CHECK(gamma_value(4.0) == 6.0);
    CHECK(gamma_value(1.5) == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-15));
    CHECK(gamma_value(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_value(0.75), std::invalid_argument);
    CHECK_THROWS_AS(gamma_value(-1.0), std::invalid_argument);
}

TEST_CASE("gaussian weight") {
    CHECK(gaussian_weight(0.0, 0.0, 0.7) == 1.0);
    CHECK(gaussian_weight(2.0, 0.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(gaussian_weight(1.0, 1.0, 0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(gaussian_weight(0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto [x, w] = gauss_legendre(6);
    auto integrate = [&](auto&& f) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
        return s;
    };
    CHECK(integrate([](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate([](double t) { return t * t; }) == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(integrate([](double t) { return std::pow(t, 10); }) ==
          doctest::Approx(2.0 / 11).epsilon(1e-13));
    CHECK(integrate([](double t) { return t * t * t; }) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(5) == 120.0);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}
