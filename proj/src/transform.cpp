#include "sft/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sft/fft.hpp"
#include "sft/parallel.hpp"
#include "sft/specfun.hpp"

namespace sft {

namespace {

constexpr cplx kI{0.0, 1.0};

double kernel_prefactor(const Params& p) {
    return gamma_value(p.m / 2.0) / (8.0 * p.c * std::pow(std::numbers::pi, p.m / 2.0 + 1.0));
}

void check_directions(const SlicePoint& x, const SlicePoint& y, const Params& params) {
    if (x.omega.dim() != params.m + 1 || y.omega.dim() != params.m + 1)
        throw std::invalid_argument("kernel: direction dimension mismatch");
}

}  // namespace

Multivector kernel_closed(const SlicePoint& x, const SlicePoint& y, const Params& params) {
    check_directions(x, y, params);
    const double c2 = 2.0 * params.c;
    const cplx C = -kI * kernel_prefactor(params);
    const cplx em = std::exp(-kI * ((x.x0 * y.x0 - x.r * y.r) / c2));
    const cplx ep = std::exp(-kI * ((x.x0 * y.x0 + x.r * y.r) / c2));
    const Multivector eta_omega = y.omega * x.omega;
    Multivector out = Multivector::scalar(params.m + 1, C * (em + ep));
    out.add_scaled(eta_omega, C * (em - ep));
    return out;
}

Multivector kernel_closed_trig(const SlicePoint& x, const SlicePoint& y, const Params& params) {
    check_directions(x, y, params);
    const double c2 = 2.0 * params.c;
    const cplx C = -kI * 2.0 * kernel_prefactor(params);
    const cplx phase = std::exp(-kI * (x.x0 * y.x0 / c2));
    const double cs = std::cos(x.r * y.r / c2);
    const double sn = std::sin(x.r * y.r / c2);
    const Multivector eta_omega = y.omega * x.omega;
    Multivector out = Multivector::scalar(params.m + 1, C * phase * cs);
    out.add_scaled(eta_omega, C * phase * kI * sn);
    return out;
}

Multivector kernel_inverse(const SlicePoint& x, const SlicePoint& y, const Params& params) {
    return complex_conjugate(kernel_closed(x, y, params));
}

MehlerTable::MehlerTable(const SlicePoint& x, const SlicePoint& y, const Params& params,
                         int j_max, int k_max)
    : j_max_(j_max), k_max_(k_max), dim_(params.m + 1) {
    if (j_max < 0 || k_max < 0) throw std::invalid_argument("MehlerTable: negative order");
    const double c = params.c;
    const double xi = (x.x0 * x.x0 + x.r * x.r) / (2.0 * c);
    const double up = (y.x0 * y.x0 + y.r * y.r) / (2.0 * c);
    const double gx = gaussian_weight(x.x0, x.r, c);
    const double gy = gaussian_weight(y.x0, y.r, c);

    // Monomial ladders m_k and x m_k at both points.
    Multivector base_x = x.omega * cplx(x.r);
    base_x[0] = x.x0;
    Multivector base_y = y.omega * cplx(y.r);
    base_y[0] = y.x0;
    Multivector e0m1 = Multivector::basis(dim_, 1u);
    e0m1[0] = -1.0;
    const Multivector pos_x = x.position();
    const Multivector pos_y = y.position();

    basis_.reserve(2 * (k_max + 1));
    Multivector pw_x = Multivector::scalar(dim_, 1.0);
    Multivector pw_y = Multivector::scalar(dim_, 1.0);
    for (int k = 0; k <= k_max; ++k) {
        const Multivector mk_x = e0m1 * pw_x;
        const Multivector mk_y = e0m1 * pw_y;
        basis_.push_back(mk_y * clifford_conjugate(mk_x));
        basis_.push_back((pos_y * mk_y) * clifford_conjugate(pos_x * mk_x));
        if (k < k_max) {
            pw_x = pw_x * base_x;
            pw_y = pw_y * base_y;
        }
    }

    weights_.resize(static_cast<std::size_t>(j_max + 1) * (k_max + 1));
    for (int j = 0; j <= j_max; ++j) {
        const int t = j / 2;
        const double s = std::pow(2.0 * c, t) * factorial(t);
        for (int k = 0; k <= k_max; ++k) {
            const int order = (j % 2 == 0) ? k : k + 1;
            const double lx = laguerre(t, order, xi);
            const double ly = laguerre(t, order, up);
            weights_[static_cast<std::size_t>(j) * (k_max + 1) + k] =
                s * s * lx * ly * gx * gy / norm_A({j, k}, params);
        }
    }
}

Multivector MehlerTable::eval(double rho) const {
    if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("MehlerTable: rho must be in (0,1]");
    Multivector acc(dim_);
    // i-powers of (-i)^{j+k+1}
    const cplx ipow[4] = {-kI, cplx(-1.0), kI, cplx(1.0)};
    std::vector<double> rpow(static_cast<std::size_t>(j_max_ + k_max_) + 1);
    rpow[0] = 1.0;
    for (std::size_t n = 1; n < rpow.size(); ++n) rpow[n] = rpow[n - 1] * rho;
    for (int j = 0; j <= j_max_; ++j)
        for (int k = 0; k <= k_max_; ++k) {
            const double w = weights_[static_cast<std::size_t>(j) * (k_max_ + 1) + k];
            const cplx z = ipow[(j + k) % 4] * rpow[static_cast<std::size_t>(j + k)] * w;
            acc.add_scaled(basis_[2 * k + (j & 1)], z);
        }
    return acc;
}

Multivector mehler_series(const SlicePoint& x, const SlicePoint& y, const Params& params,
                          int j_max, int k_max, double abel_rho) {
    return MehlerTable(x, y, params, j_max, k_max).eval(abel_rho);
}

namespace {

// Shared direct quadrature for forward (sign = -1) and inverse (sign = +1).
SliceField direct_transform(const SliceField& f, int sign) {
    const GridSpec& g = f.grid();
    const Params& par = f.params();
    const GridSpec og = g.frequency_grid(par.c);
    SliceField out(og, par);

    const double c2 = 2.0 * par.c;
    const double measure = g.h0() * g.hr();
    const cplx coef1 = (sign < 0 ? -kI : kI) / (2.0 * std::numbers::pi * par.c) * measure;
    const cplx coef2 = cplx(-1.0 / (2.0 * std::numbers::pi * par.c)) * measure;

    // phase[p][n] = exp(sign i x_n y_p / 2c); cos/sin tables carry the
    // half weight of the r = 0 row.
    std::vector<cplx> phase(static_cast<std::size_t>(og.N0) * g.N0);
    for (int p = 0; p < og.N0; ++p)
        for (int n = 0; n < g.N0; ++n)
            phase[static_cast<std::size_t>(p) * g.N0 + n] =
                std::exp(cplx(0.0, sign * g.x0(n) * og.x0(p) / c2));
    std::vector<double> ctab(static_cast<std::size_t>(og.Nr) * g.Nr);
    std::vector<double> stab(static_cast<std::size_t>(og.Nr) * g.Nr);
    for (int q = 0; q < og.Nr; ++q)
        for (int j = 0; j < g.Nr; ++j) {
            const double arg = g.r(j) * og.r(q) / c2;
            const double w = (j == 0) ? 0.5 : 1.0;
            ctab[static_cast<std::size_t>(q) * g.Nr + j] = w * std::cos(arg);
            stab[static_cast<std::size_t>(q) * g.Nr + j] = w * std::sin(arg);
        }

    parallel_for(0, og.N0, [&](int p) {
        std::vector<Multivector> t1(g.Nr, Multivector(par.m + 1));
        std::vector<Multivector> t2(g.Nr, Multivector(par.m + 1));
        for (int n = 0; n < g.N0; ++n) {
            const cplx ph = phase[static_cast<std::size_t>(p) * g.N0 + n];
            for (int j = 0; j < g.Nr; ++j) {
                t1[j].add_scaled(f.f1(n, j), ph);
                t2[j].add_scaled(f.f2(n, j), ph);
            }
        }
        for (int q = 0; q < og.Nr; ++q) {
            Multivector& o1 = out.f1(p, q);
            Multivector& o2 = out.f2(p, q);
            for (int j = 0; j < g.Nr; ++j) {
                o1.add_scaled(t1[j], ctab[static_cast<std::size_t>(q) * g.Nr + j]);
                o2.add_scaled(t2[j], stab[static_cast<std::size_t>(q) * g.Nr + j]);
            }
            o1 *= coef1;
            o2 *= coef2;
        }
    });
    return out;
}

// Fast path: one centered 2D DFT per blade over the extended plane.
SliceField fast_transform(const SliceField& f, int sign) {
    const GridSpec& g = f.grid();
    const Params& par = f.params();
    const int M = 2 * g.Nr;
    if (!is_pow2(static_cast<std::size_t>(g.N0)) || !is_pow2(static_cast<std::size_t>(M))) {
        SliceField out = direct_transform(f, sign);
        out.fast_fallback = true;
        return out;
    }
    const GridSpec og = g.frequency_grid(par.c);
    SliceField out(og, par);

    const double c2 = 2.0 * par.c;
    const double scale = g.h0() * g.hr() / (2.0 * std::numbers::pi);
    const cplx coef_even = (sign < 0 ? -kI : kI) / c2 * scale;
    const cplx coef_odd = cplx(1.0 / c2) * scale;
    const int nblades = 1 << (par.m + 1);

    parallel_for(0, nblades, [&](int b) {
        const unsigned blade = static_cast<unsigned>(b);
        std::vector<cplx> plane(static_cast<std::size_t>(g.N0) * M, cplx(0.0));
        for (int n = 0; n < g.N0; ++n)
            for (int j = 1; j < M; ++j) {
                const int jr = std::abs(j - g.Nr);
                const cplx c1 = f.f1(n, jr)[blade];
                cplx val = c1;
                if (j != g.Nr) {
                    // odd extension of f2, folded in as -i f2^- (forward)
                    // or +i f2^- (inverse)
                    cplx iu(0.0, j > g.Nr ? 1.0 : -1.0);
                    if (sign < 0) iu = -iu;
                    val += iu * f.f2(n, jr)[blade];
                }
                plane[static_cast<std::size_t>(n) * M + j] = val;
            }
        centered_dft_2d(plane.data(), g.N0, M, sign);
        for (int p = 0; p < g.N0; ++p)
            for (int q = 0; q < g.Nr; ++q) {
                const cplx hi = plane[static_cast<std::size_t>(p) * M + (g.Nr + q)];
                const cplx lo = plane[static_cast<std::size_t>(p) * M + (g.Nr - q)];
                out.f1(p, q)[blade] = coef_even * (0.5 * (hi + lo));
                out.f2(p, q)[blade] = coef_odd * (0.5 * (hi - lo));
            }
    });
    return out;
}

}  // namespace

SliceField forward(const SliceField& f) { return direct_transform(f, -1); }
SliceField inverse(const SliceField& f) { return direct_transform(f, +1); }
SliceField forward_fast(const SliceField& f) { return fast_transform(f, -1); }
SliceField inverse_fast(const SliceField& f) { return fast_transform(f, +1); }

SliceField auto_forward(const SliceField& f) {
    SliceField out = forward_fast(f);
    return out;
}

SliceField auto_inverse(const SliceField& f) {
    SliceField out = inverse_fast(f);
    return out;
}

SliceField apply_D0(const SliceField& f) {
    const SliceField dx = derivative_x0(f);
    const SliceField dr = derivative_r(f);
    const GridSpec& g = f.grid();
    const Multivector e0 = Multivector::basis(f.mv_dim(), 1u);
    SliceField out(g, f.params());
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            out.f1(n, j) = e0 * dx.f1(n, j) - dr.f2(n, j);
            out.f2(n, j) = dr.f1(n, j) - e0 * dx.f2(n, j);
        }
    return out;
}

namespace {

struct ProbeBox {
    double a0, a1;  // first coordinate range
    double b0, b1;  // second coordinate range
};

// max-norm FD residual of eq1 over the y-box for a fixed x
double eq1_residual(const Params& par, const SlicePoint& x, const Multivector& eta, int n,
                    const ProbeBox& box) {
    const int dim = par.m + 1;
    const double hy = (box.a1 - box.a0) / (n - 1);
    const double hg = (box.b1 - box.b0) / (n - 1);
    std::vector<Multivector> K;
    K.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            K.push_back(kernel_closed(
                x, SlicePoint(box.a0 + i * hy, box.b0 + j * hg, eta), par));
    const Multivector e0 = Multivector::basis(dim, 1u);
    const Multivector xv = x.position();
    const cplx lam = kI / (2.0 * par.c);
    double worst = 0.0;
    for (int i = 1; i + 1 < n; ++i)
        for (int j = 1; j + 1 < n; ++j) {
            const auto& at = [&](int ii, int jj) -> const Multivector& {
                return K[static_cast<std::size_t>(ii) * n + jj];
            };
            Multivector dK0 = (0.5 / hy) * (at(i + 1, j) - at(i - 1, j));
            Multivector dKg = (0.5 / hg) * (at(i, j + 1) - at(i, j - 1));
            Multivector res = e0 * dK0 + eta * dKg + lam * (at(i, j) * xv);
            worst = std::max(worst, res.norm_inf());
        }
    return worst;
}

// max-norm FD residual of eq2 over the x-box for a fixed y
double eq2_residual(const Params& par, const SlicePoint& y, const Multivector& omega, int n,
                    const ProbeBox& box) {
    const int dim = par.m + 1;
    const double hx = (box.a1 - box.a0) / (n - 1);
    const double hr = (box.b1 - box.b0) / (n - 1);
    std::vector<Multivector> K;
    K.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            K.push_back(kernel_closed(
                SlicePoint(box.a0 + i * hx, box.b0 + j * hr, omega), y, par));
    const Multivector e0 = Multivector::basis(dim, 1u);
    const Multivector yv = y.position();
    double worst = 0.0;
    for (int i = 1; i + 1 < n; ++i)
        for (int j = 1; j + 1 < n; ++j) {
            const auto& at = [&](int ii, int jj) -> const Multivector& {
                return K[static_cast<std::size_t>(ii) * n + jj];
            };
            Multivector dK0 = (0.5 / hx) * (at(i + 1, j) - at(i - 1, j));
            Multivector dKr = (0.5 / hr) * (at(i, j + 1) - at(i, j - 1));
            // i y K + 2c [K D0^x], the operator acting from the right
            Multivector res = kI * (yv * at(i, j));
            res += (2.0 * par.c) * (dK0 * e0 + dKr * omega);
            worst = std::max(worst, res.norm_inf());
        }
    return worst;
}

}  // namespace

KernelPdeResidual kernel_pde_residual(const Params& params, int n) {
    if (n < 5) throw std::invalid_argument("kernel_pde_residual: n too small");
    const int dim = params.m + 1;
    const Multivector e1 = axis_direction(dim, 1);
    const Multivector e2 = axis_direction(dim, 2);
    const ProbeBox box{-1.2, 1.2, 0.4, 2.8};

    const SlicePoint xs[] = {{0.7, 1.3, e1}, {-1.1, 0.4, e1}, {0.4, 2.2, e1}};
    const SlicePoint ys[] = {{0.9, 0.8, e2}, {-0.5, 1.7, e2}, {0.2, 2.4, e2}};

    KernelPdeResidual out;
    for (const auto& x : xs)
        for (const Multivector& eta : {e1, e2})
            out.eq1 = std::max(out.eq1, eq1_residual(params, x, eta, n, box));
    for (const auto& y : ys)
        for (const Multivector& omega : {e1, e2})
            out.eq2 = std::max(out.eq2, eq2_residual(params, y, omega, n, box));
    return out;
}

double PropertyReport::max_deviation() const {
    return std::max({translation, reflection, conjugation, e0_commutation, twofold});
}

namespace {

int mirror_index(int n, int N0) { return (N0 - n) % N0; }

// A(n,j) -> B(mirror(n),j) with optional sign flips per part.
SliceField mirrored(const SliceField& f, double s1, double s2) {
    const GridSpec& g = f.grid();
    SliceField out(g, f.params());
    for (int n = 0; n < g.N0; ++n) {
        const int nm = mirror_index(n, g.N0);
        for (int j = 0; j < g.Nr; ++j) {
            out.f1(n, j) = s1 * f.f1(nm, j);
            out.f2(n, j) = s2 * f.f2(nm, j);
        }
    }
    return out;
}

double rel_dev(const SliceField& got, const SliceField& want) {
    const double scale = std::max(want.norm_inf(), 1e-300);
    return max_abs_diff(got, want) / scale;
}

}  // namespace

PropertyReport property_checks(const SliceField& f, double a) {
    const GridSpec& g = f.grid();
    const Params& par = f.params();
    const double c2 = 2.0 * par.c;
    const int shift = static_cast<int>(std::lround(a / g.h0()));
    if (std::abs(shift * g.h0() - a) > 1e-9 * std::max(1.0, std::abs(a)))
        throw std::invalid_argument("property_checks: a must be an integer multiple of h0");

    PropertyReport rep;
    const SliceField F = auto_forward(f);

    {  // translation: F_S(t_a f)(y) = e^{-i a y0/2c} F_S(f)(y)
        SliceField taf(g, par);
        for (int n = 0; n < g.N0; ++n) {
            const int src = n - shift;
            if (src < 0 || src >= g.N0) continue;
            for (int j = 0; j < g.Nr; ++j) {
                taf.f1(n, j) = f.f1(src, j);
                taf.f2(n, j) = f.f2(src, j);
            }
        }
        SliceField want = F;
        const GridSpec& og = F.grid();
        for (int p = 0; p < og.N0; ++p) {
            const cplx ph = std::exp(-kI * (a * og.x0(p) / c2));
            for (int q = 0; q < og.Nr; ++q) {
                want.f1(p, q) *= ph;
                want.f2(p, q) *= ph;
            }
        }
        rep.translation = rel_dev(auto_forward(taf), want);
    }

    {  // reflection: F_S(s f) = s F_S(f) with s f(x0,r,w) = f(-x0,r,-w)
        rep.reflection = rel_dev(auto_forward(mirrored(f, 1.0, -1.0)), mirrored(F, 1.0, -1.0));
    }

    {  // conjugation: F_S(f*) = -F_S^*(f)(-y0, g, -eta)
        const SliceField got = auto_forward(complex_conjugate(f));
        rep.conjugation = rel_dev(got, complex_conjugate(mirrored(F, -1.0, 1.0)));
    }

    {  // e0 commutation
        rep.e0_commutation = rel_dev(auto_forward(left_multiply_e0(f)), left_multiply_e0(F));
    }

    {  // twofold: F_S(F_S f)(x) = -f(-x)
        const SliceField FF = auto_forward(F);
        SliceField want(FF.grid(), par);
        for (int n = 0; n < g.N0; ++n) {
            const int nm = mirror_index(n, g.N0);
            for (int j = 0; j < g.Nr; ++j) {
                want.f1(n, j) = -1.0 * f.f1(nm, j);
                want.f2(n, j) = f.f2(nm, j);
            }
        }
        rep.twofold = rel_dev(FF, want);
    }
    return rep;
}

}  // namespace sft
