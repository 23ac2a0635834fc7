#pragma once

#include <utility>
#include <vector>

namespace sft {

/// Generalized Laguerre polynomial L_t^k(x), evaluated with the three-term
/// recurrence in the degree t (stable for large t; the finite series form is
/// kept as a test oracle only).
double laguerre(int t, int k, double x);

/// Gamma(s) for s = n or n + 1/2 with n >= 0 integer (2s must be a positive
/// integer). Built from Gamma(1) = 1, Gamma(1/2) = sqrt(pi) and the
/// recursion Gamma(s+1) = s Gamma(s).
double gamma_value(double s);

double factorial(int n);

/// exp(-(x0^2 + r^2) / (4c)).
double gaussian_weight(double x0, double r, double c);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace sft
