#include "sft/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sft/specfun.hpp"

namespace sft {

Params::Params(int m_, double c_) : m(m_), c(c_) {
    if (m < 2) throw std::invalid_argument("Params: m must be >= 2");
    if (!(c > 0.0)) throw std::invalid_argument("Params: c must be positive");
}

Multivector::Multivector(int dim) : dim_(dim), coeffs_(std::size_t{1} << dim) {
    if (dim < 1 || dim > 16) throw std::invalid_argument("Multivector: bad dimension");
}

Multivector Multivector::scalar(int dim, cplx value) {
    Multivector a(dim);
    a[0] = value;
    return a;
}

Multivector Multivector::basis(int dim, unsigned blade, cplx value) {
    Multivector a(dim);
    if (blade >= a.size()) throw std::invalid_argument("Multivector: blade out of range");
    a[blade] = value;
    return a;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void Multivector::add_scaled(const Multivector& x, cplx s) {
    if (dim_ != x.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * x.coeffs_[i];
}

void Multivector::clear() {
    std::fill(coeffs_.begin(), coeffs_.end(), cplx(0.0));
}

double Multivector::norm_inf() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool Multivector::is_zero(double tol) const { return norm_inf() <= tol; }

int blade_product_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
    swaps += std::popcount(a & b);  // e_i e_i = -1
    return (swaps & 1) ? -1 : 1;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Multivector: dimension mismatch");
    Multivector out(a.dim());
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx ca = a[static_cast<unsigned>(i)];
        if (ca == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx cb = b[static_cast<unsigned>(j)];
            if (cb == 0.0) continue;
            const unsigned ia = static_cast<unsigned>(i);
            const unsigned jb = static_cast<unsigned>(j);
            const int sign = blade_product_sign(ia, jb);
            out[ia ^ jb] += static_cast<double>(sign) * ca * cb;
        }
    }
    return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

void geometric_accumulate(Multivector& acc, const Multivector& a, const Multivector& b,
                          cplx scale) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx ca = a[static_cast<unsigned>(i)];
        if (ca == 0.0) continue;
        const cplx sca = scale * ca;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx cb = b[static_cast<unsigned>(j)];
            if (cb == 0.0) continue;
            const unsigned ia = static_cast<unsigned>(i);
            const unsigned jb = static_cast<unsigned>(j);
            acc[ia ^ jb] += static_cast<double>(blade_product_sign(ia, jb)) * sca * cb;
        }
    }
}

Multivector clifford_conjugate(const Multivector& a) {
    Multivector out(a.dim());
    for (unsigned blade = 0; blade < a.size(); ++blade) {
        const int k = std::popcount(blade);
        const int sign = ((k * (k + 1) / 2) & 1) ? -1 : 1;
        out[blade] = static_cast<double>(sign) * std::conj(a[blade]);
    }
    return out;
}

Multivector grade_project(const Multivector& a, int k) {
    if (k < 0 || k > a.dim()) throw std::invalid_argument("grade_project: grade out of range");
    Multivector out(a.dim());
    for (unsigned blade = 0; blade < a.size(); ++blade)
        if (std::popcount(blade) == k) out[blade] = a[blade];
    return out;
}

cplx scalar_part(const Multivector& a) { return a[0]; }

Multivector complex_conjugate(const Multivector& a) {
    Multivector out(a.dim());
    for (unsigned blade = 0; blade < a.size(); ++blade) out[blade] = std::conj(a[blade]);
    return out;
}

Multivector eta_sandwich(const Multivector& a, int m) {
    if (a.dim() != m + 1) throw std::invalid_argument("eta_sandwich: a.dim must equal m+1");
    Multivector out(a.dim());
    for (unsigned blade = 0; blade < a.size(); ++blade) {
        const cplx c = a[blade];
        if (c == 0.0) continue;
        const int k = std::popcount(blade & ~1u);  // grade over e1..em only
        double factor = ((k & 1) ? -1.0 : 1.0) * (2.0 * k - m) / m;
        if (blade & 1u) factor = -factor;  // e0 anticommutes with eta
        out[blade] = factor * c;
    }
    return out;
}

namespace {

Multivector unit_vector(int dim, const std::vector<double>& comps) {
    // comps[i] multiplies e_{i+1}
    Multivector eta(dim);
    for (std::size_t i = 0; i < comps.size(); ++i)
        eta[1u << (i + 1)] = comps[i];
    return eta;
}

}  // namespace

Multivector sphere_sandwich_oracle(const Multivector& a, int m, int n_points) {
    if (m != 2 && m != 3) throw std::invalid_argument("sphere_sandwich_oracle: m must be 2 or 3");
    if (n_points < 64) throw std::invalid_argument("sphere_sandwich_oracle: too few points");
    if (a.dim() != m + 1) throw std::invalid_argument("sphere_sandwich_oracle: dimension mismatch");

    Multivector acc(a.dim());
    if (m == 2) {
        const double w = 2.0 * std::numbers::pi / n_points;
        for (int t = 0; t < n_points; ++t) {
            const double th = w * t;
            const Multivector eta = unit_vector(a.dim(), {std::cos(th), std::sin(th)});
            acc.add_scaled(eta * a * eta, w);
        }
    } else {
        // Product grid: Gauss-Legendre in cos(phi), trapezoid in theta.
        int n_theta = 2;
        while (n_theta * (n_theta / 2) < n_points) n_theta += 2;
        const int n_phi = n_theta / 2;
        const auto [nodes, weights] = gauss_legendre(n_phi);
        const double wt = 2.0 * std::numbers::pi / n_theta;
        for (int i = 0; i < n_phi; ++i) {
            const double u = nodes[i];
            const double s = std::sqrt(1.0 - u * u);
            for (int t = 0; t < n_theta; ++t) {
                const double th = wt * t;
                const Multivector eta =
                    unit_vector(a.dim(), {s * std::cos(th), s * std::sin(th), u});
                acc.add_scaled(eta * a * eta, weights[i] * wt);
            }
        }
    }
    return acc;
}

double sphere_area(int m) {
    return 2.0 * std::pow(std::numbers::pi, m / 2.0) / gamma_value(m / 2.0);
}

std::string blade_label(unsigned blade) {
    if (blade == 0) return "1";
    std::string s;
    for (int i = 0; blade >> i; ++i)
        if (blade & (1u << i)) s += "e" + std::to_string(i);
    return s;
}

}  // namespace sft
