#include "sft/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sft {

double laguerre(int t, int k, double x) {
    if (t < 0 || k < 0) throw std::invalid_argument("laguerre: negative degree or order");
    if (t == 0) return 1.0;
    double prev = 1.0;             // L_0
    double cur = 1.0 + k - x;      // L_1^k
    for (int n = 1; n < t; ++n) {
        const double next = ((2.0 * n + 1.0 + k - x) * cur - (n + k) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gamma_value(double s) {
    const double two_s = 2.0 * s;
    const double rounded = std::round(two_s);
    if (!(s > 0.0) || std::abs(two_s - rounded) > 1e-12)
        throw std::invalid_argument("gamma_value: argument must be a positive multiple of 1/2");
    const long n2 = static_cast<long>(rounded);
    double value;
    double arg;
    if (n2 % 2 == 0) {
        value = 1.0;  // Gamma(1)
        arg = 1.0;
    } else {
        value = std::sqrt(std::numbers::pi);  // Gamma(1/2)
        arg = 0.5;
    }
    while (arg + 0.5 < s) {
        value *= arg;
        arg += 1.0;
    }
    return value;
}

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    double v = 1.0;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

double gaussian_weight(double x0, double r, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("gaussian_weight: c must be positive");
    return std::exp(-(x0 * x0 + r * r) / (4.0 * c));
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return {x, w};
}

}  // namespace sft
