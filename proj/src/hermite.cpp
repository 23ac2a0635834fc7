#include "sft/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sft/specfun.hpp"
#include "sft/transform.hpp"

namespace sft {

SlicePoint::SlicePoint(double x0_, double r_, Multivector omega_)
    : x0(x0_), r(r_), omega(std::move(omega_)) {
    if (r < 0.0) throw std::invalid_argument("SlicePoint: r must be non-negative");
    if (omega[0] != 0.0 || (omega.size() > 1 && omega[1] != 0.0))
        throw std::invalid_argument("SlicePoint: omega must have no scalar or e0 component");
}

Multivector SlicePoint::position() const {
    Multivector x = omega * cplx(r);
    x[1] = x0;  // e0 component
    return x;
}

Multivector axis_direction(int dim, int axis) {
    if (axis < 1 || axis >= dim) throw std::invalid_argument("axis_direction: axis out of range");
    return Multivector::basis(dim, 1u << axis);
}

Multivector monomial_m_k(const SlicePoint& p, int k) {
    if (k < 0) throw std::invalid_argument("monomial_m_k: negative degree");
    const int dim = p.omega.dim();
    Multivector base = p.omega * cplx(p.r);
    base[0] = p.x0;  // x0 + r omega
    Multivector pow = Multivector::scalar(dim, 1.0);
    for (int i = 0; i < k; ++i) pow = pow * base;
    Multivector e0m1 = Multivector::basis(dim, 1u);
    e0m1[0] = -1.0;
    return e0m1 * pow;
}

double coefficient_C(int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("coefficient_C: negative index");
    const int t = j / 2;
    return (j % 2 == 0) ? -2.0 * t : -2.0 * (k + t + 1);
}

Multivector hermite_function(HermiteIndex idx, const SlicePoint& p, const Params& params) {
    if (idx.j < 0 || idx.k < 0) throw std::invalid_argument("hermite_function: negative index");
    const int t = idx.j / 2;
    const double c = params.c;
    const double xi = (p.x0 * p.x0 + p.r * p.r) / (2.0 * c);
    const double scale = std::pow(2.0 * c, t) * factorial(t);
    const double G = gaussian_weight(p.x0, p.r, c);

    Multivector out = monomial_m_k(p, idx.k);
    if (idx.j % 2 == 0) {
        out *= scale * laguerre(t, idx.k, xi) * G;
    } else {
        out = p.position() * out;
        out *= scale * laguerre(t, idx.k + 1, xi) * G;
    }
    return out;
}

double norm_A(HermiteIndex idx, const Params& params) {
    if (idx.j < 0 || idx.k < 0) throw std::invalid_argument("norm_A: negative index");
    const int t = idx.j / 2;
    const double c2 = 2.0 * params.c;
    const double common =
        2.0 * std::pow(std::numbers::pi, params.m / 2.0 + 1.0) / gamma_value(params.m / 2.0);
    if (idx.j % 2 == 0)
        return common * std::pow(c2, 2 * t + idx.k + 1) * factorial(t) * factorial(idx.k + t);
    return common * std::pow(c2, 2 * t + idx.k + 2) * factorial(t) * factorial(idx.k + t + 1);
}

SliceField raising_apply(const SliceField& f) {
    SliceField xf = multiply_by_x(f);
    SliceField d0f = apply_D0(f);
    xf *= 0.5;
    d0f *= -f.params().c;
    return xf + d0f;
}

SliceField sample_hermite(HermiteIndex idx, const GridSpec& grid, const Params& params) {
    const int dim = params.m + 1;
    const Multivector omega = axis_direction(dim, 1);
    const Multivector minus_omega = -1.0 * omega;
    // f1 = (psi(+omega) + psi(-omega))/2, omega f2 = (psi(+omega) - psi(-omega))/2,
    // so f2 = -omega * (difference)/2.
    return sample(
        [&](double x0, double r) {
            const Multivector vp = hermite_function(idx, SlicePoint(x0, r, omega), params);
            const Multivector vm = hermite_function(idx, SlicePoint(x0, r, minus_omega), params);
            Multivector f1 = 0.5 * (vp + vm);
            Multivector f2 = minus_omega * (0.5 * (vp - vm));
            return std::make_pair(std::move(f1), std::move(f2));
        },
        grid, params);
}

}  // namespace sft
