#include "sft/convolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sft/fft.hpp"
#include "sft/parallel.hpp"
#include "sft/specfun.hpp"
#include "sft/transform.hpp"

namespace sft {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_same(const SliceField& f, const SliceField& g) {
    if (!(f.grid() == g.grid()) || f.params().m != g.params().m ||
        f.params().c != g.params().c)
        throw std::invalid_argument("convolution: grid or params mismatch");
}

double translate_prefactor(const Params& p) {
    // Gamma(m/2) / (8 c pi^{m/2+1})
    return gamma_value(p.m / 2.0) / (8.0 * p.c * std::pow(std::numbers::pi, p.m / 2.0 + 1.0));
}

}  // namespace

SliceField eta_sandwich_field(const SliceField& f) {
    const GridSpec& g = f.grid();
    const int m = f.params().m;
    SliceField out(g, f.params());
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            out.f1(n, j) = eta_sandwich(f.f1(n, j), m);
            out.f2(n, j) = eta_sandwich(f.f2(n, j), m);
        }
    return out;
}

SliceField spectral_product(const SliceField& F, const SliceField& G) {
    require_same(F, G);
    const GridSpec& gr = F.grid();
    const int m = F.params().m;
    SliceField out(gr, F.params());
    for (int n = 0; n < gr.N0; ++n)
        for (int j = 0; j < gr.Nr; ++j) {
            const Multivector SF1 = eta_sandwich(F.f1(n, j), m);
            const Multivector SF2 = eta_sandwich(F.f2(n, j), m);
            Multivector& h1 = out.f1(n, j);
            Multivector& h2 = out.f2(n, j);
            geometric_accumulate(h1, F.f1(n, j), G.f1(n, j), 1.0);
            geometric_accumulate(h1, SF2, G.f2(n, j), 1.0);
            geometric_accumulate(h2, F.f2(n, j), G.f1(n, j), 1.0);
            geometric_accumulate(h2, SF1, G.f2(n, j), -1.0);
        }
    return out;
}

SliceField mustard_spectral(const SliceField& f, const SliceField& g) {
    require_same(f, g);
    return auto_inverse(spectral_product(auto_forward(f), auto_forward(g)));
}

namespace {

// Centered circular 2D convolution of multivector planes (linear row order,
// N0 x M), scaled by the quadrature measure.
std::vector<Multivector> conv2d_planes(const std::vector<Multivector>& u,
                                       const std::vector<Multivector>& v, int N0, int M,
                                       int dim, double measure) {
    const std::size_t total = static_cast<std::size_t>(N0) * M;
    const int nb = 1 << dim;
    std::vector<std::vector<cplx>> U(nb), V(nb), W(nb);
    for (int b = 0; b < nb; ++b) {
        U[b].resize(total);
        V[b].resize(total);
        W[b].assign(total, cplx(0.0));
        for (std::size_t t = 0; t < total; ++t) {
            U[b][t] = u[t][static_cast<unsigned>(b)];
            V[b][t] = v[t][static_cast<unsigned>(b)];
        }
        centered_dft_2d(U[b].data(), N0, M, -1);
        centered_dft_2d(V[b].data(), N0, M, -1);
    }
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            const unsigned ia = static_cast<unsigned>(a), ib = static_cast<unsigned>(b);
            const double sgn = blade_product_sign(ia, ib);
            auto& dst = W[ia ^ ib];
            for (std::size_t t = 0; t < total; ++t) dst[t] += sgn * U[a][t] * V[b][t];
        }
    const double scale = measure / (static_cast<double>(N0) * M);
    std::vector<Multivector> out(total, Multivector(dim));
    for (int b = 0; b < nb; ++b) {
        centered_dft_2d(W[b].data(), N0, M, +1);
        for (std::size_t t = 0; t < total; ++t)
            out[t][static_cast<unsigned>(b)] = scale * W[b][t];
    }
    return out;
}

std::vector<Multivector> sandwich_plane(const std::vector<Multivector>& u, int m) {
    std::vector<Multivector> out;
    out.reserve(u.size());
    for (const auto& a : u) out.push_back(eta_sandwich(a, m));
    return out;
}

}  // namespace

cplx calibrate_mustard_kappa(const GridSpec& grid, const Params& params) {
    const SliceField psi = sample_hermite({0, 0}, grid, params);
    const SliceField ref = mustard_spectral(psi, psi);
    const SliceField raw = mustard_spatial(psi, psi, 1.0);
    cplx num = 0.0;
    double den = 0.0;
    for (int n = 0; n < grid.N0; ++n)
        for (int j = 0; j < grid.Nr; ++j)
            for (unsigned b = 0; b < raw.f1(n, j).size(); ++b) {
                num += std::conj(raw.f1(n, j)[b]) * ref.f1(n, j)[b];
                num += std::conj(raw.f2(n, j)[b]) * ref.f2(n, j)[b];
                den += std::norm(raw.f1(n, j)[b]) + std::norm(raw.f2(n, j)[b]);
            }
    if (den == 0.0) throw std::runtime_error("calibrate_mustard_kappa: degenerate fields");
    return num / den;
}

SliceField mustard_spatial(const SliceField& f, const SliceField& g, cplx kappa) {
    require_same(f, g);
    const GridSpec& gr = f.grid();
    const int M = 2 * gr.Nr;
    if (!is_pow2(static_cast<std::size_t>(gr.N0)) || !is_pow2(static_cast<std::size_t>(M)))
        throw std::invalid_argument("mustard_spatial: N0 and 2Nr must be powers of two");
    const int dim = f.mv_dim();
    const int m = f.params().m;
    const double measure = gr.h0() * gr.hr();

    const auto f1e = even_extension(f);
    const auto f2o = odd_extension(f);
    const auto g1e = even_extension(g);
    const auto g2o = odd_extension(g);
    const auto Sf1e = sandwich_plane(f1e, m);
    const auto Sf2o = sandwich_plane(f2o, m);

    const auto a = conv2d_planes(f1e, g1e, gr.N0, M, dim, measure);
    const auto b = conv2d_planes(Sf2o, g2o, gr.N0, M, dim, measure);
    const auto c = conv2d_planes(f2o, g1e, gr.N0, M, dim, measure);
    const auto d = conv2d_planes(Sf1e, g2o, gr.N0, M, dim, measure);

    SliceField out(gr, f.params());
    for (int n = 0; n < gr.N0; ++n)
        for (int j = 0; j < gr.Nr; ++j) {
            const std::size_t t = static_cast<std::size_t>(n) * M + (gr.Nr + j);
            out.f1(n, j) = kappa * (a[t] + b[t]);
            out.f2(n, j) = kappa * (c[t] - d[t]);
        }
    return out;
}

SliceField mustard_spatial(const SliceField& f, const SliceField& g) {
    return mustard_spatial(f, g, calibrate_mustard_kappa(f.grid(), f.params()));
}

namespace {

int snapped_index(double value, double step, const char* what) {
    const int idx = static_cast<int>(std::lround(value / step));
    if (std::abs(idx * step - value) > 1e-9 * std::max(1.0, std::abs(value)))
        throw std::invalid_argument(std::string("generalized_translate: ") + what +
                                    " must lie on the grid");
    return idx;
}

SliceField translate_spectral(const SliceField& f, const SlicePoint& y) {
    const Params& par = f.params();
    const double c2 = 2.0 * par.c;
    const cplx C = -kI * translate_prefactor(par);
    const SliceField F = auto_forward(f);
    const GridSpec& og = F.grid();
    const int m = par.m;

    SliceField H(og, par);
    for (int p = 0; p < og.N0; ++p) {
        const cplx phase = std::exp(-kI * (y.x0 * og.x0(p) / c2));
        for (int q = 0; q < og.Nr; ++q) {
            const double arg = y.r * og.r(q) / c2;
            const cplx cosf = 2.0 * std::cos(arg);
            const cplx sinf = 2.0 * kI * std::sin(arg);
            const Multivector SF1eta = eta_sandwich(F.f1(p, q), m) * y.omega;
            const Multivector SF2eta = eta_sandwich(F.f2(p, q), m) * y.omega;
            Multivector h1 = cosf * F.f1(p, q) + sinf * SF2eta;
            Multivector h2 = cosf * F.f2(p, q) - sinf * SF1eta;
            h1 *= C * phase;
            h2 *= C * phase;
            H.f1(p, q) = std::move(h1);
            H.f2(p, q) = std::move(h2);
        }
    }
    return auto_inverse(H);
}

SliceField translate_spatial(const SliceField& f, const SlicePoint& y) {
    const GridSpec& g = f.grid();
    const Params& par = f.params();
    const int m = par.m;
    const int s = snapped_index(y.x0, g.h0(), "y0");
    const int t = snapped_index(y.r, g.hr(), "g");
    if (std::abs(y.x0) > g.L || y.r >= g.R)
        throw std::invalid_argument("generalized_translate: y outside grid extent");
    const cplx C = -kI * translate_prefactor(par);

    // Right-multiplied sandwich copies: S(f1) eta, S(f2) eta.
    SliceField Sf_eta(g, par);
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            Sf_eta.f1(n, j) = eta_sandwich(f.f1(n, j), m) * y.omega;
            Sf_eta.f2(n, j) = eta_sandwich(f.f2(n, j), m) * y.omega;
        }

    SliceField out(g, par);
    for (int n = 0; n < g.N0; ++n) {
        const int nu = n - s;
        if (nu < 0 || nu >= g.N0) continue;
        for (int j = 0; j < g.Nr; ++j) {
            Multivector& o1 = out.f1(n, j);
            Multivector& o2 = out.f2(n, j);
            const int v1 = j - t;   // r - g copy
            const int v2 = j + t;   // r + g copy
            const int v3 = t - j;   // g - r reflected copy
            if (v1 >= 0) {
                o1 += f.f1(nu, v1) - Sf_eta.f2(nu, v1);
                o2 += f.f2(nu, v1) + Sf_eta.f1(nu, v1);
            }
            if (v2 < g.Nr) {
                o1 += f.f1(nu, v2) + Sf_eta.f2(nu, v2);
                o2 += f.f2(nu, v2) - Sf_eta.f1(nu, v2);
            }
            if (v3 > 0 && v3 < g.Nr) {
                o1 += f.f1(nu, v3) + Sf_eta.f2(nu, v3);
                o2 += Sf_eta.f1(nu, v3) - f.f2(nu, v3);
            }
            o1 *= C;
            o2 *= C;
        }
    }
    return out;
}

}  // namespace

SliceField generalized_translate(const SliceField& f, const SlicePoint& y, TranslatePath path) {
    if (y.omega.dim() != f.mv_dim())
        throw std::invalid_argument("generalized_translate: direction dimension mismatch");
    return path == TranslatePath::spectral ? translate_spectral(f, y) : translate_spatial(f, y);
}

SliceField translate_convolve(const SliceField& f, const SliceField& g) {
    require_same(f, g);
    const GridSpec& gr = f.grid();
    const Params& par = f.params();
    const int m = par.m;
    const cplx coef = -kI / (4.0 * std::numbers::pi * par.c);

    const SliceField Sf = eta_sandwich_field(f);
    SliceField out(gr, par);

    parallel_for(0, gr.N0, [&](int n) {
        for (int j = 0; j < gr.Nr; ++j) {
            Multivector& o1 = out.f1(n, j);
            Multivector& o2 = out.f2(n, j);
            for (int ny = 0; ny < gr.N0; ++ny) {
                const int nu = n - ny + gr.N0 / 2;  // index of x0 - y0
                if (nu < 0 || nu >= gr.N0) continue;
                for (int jg = 0; jg < gr.Nr; ++jg) {
                    const double w = (jg == 0) ? 0.5 : 1.0;
                    const Multivector& G1 = g.f1(ny, jg);
                    const Multivector& G2 = g.f2(ny, jg);
                    const int v1 = j - jg;
                    const int v2 = j + jg;
                    const int v3 = jg - j;
                    if (v1 >= 0) {
                        geometric_accumulate(o1, f.f1(nu, v1), G1, w);
                        geometric_accumulate(o1, Sf.f2(nu, v1), G2, w);
                        geometric_accumulate(o2, f.f2(nu, v1), G1, w);
                        geometric_accumulate(o2, Sf.f1(nu, v1), G2, -w);
                    }
                    if (v2 < gr.Nr) {
                        geometric_accumulate(o1, f.f1(nu, v2), G1, w);
                        geometric_accumulate(o1, Sf.f2(nu, v2), G2, -w);
                        geometric_accumulate(o2, f.f2(nu, v2), G1, w);
                        geometric_accumulate(o2, Sf.f1(nu, v2), G2, w);
                    }
                    if (v3 > 0 && v3 < gr.Nr) {
                        geometric_accumulate(o1, f.f1(nu, v3), G1, w);
                        geometric_accumulate(o1, Sf.f2(nu, v3), G2, -w);
                        geometric_accumulate(o2, f.f2(nu, v3), G1, -w);
                        geometric_accumulate(o2, Sf.f1(nu, v3), G2, -w);
                    }
                }
            }
            o1 *= coef * gr.h0() * gr.hr();
            o2 *= coef * gr.h0() * gr.hr();
        }
    });
    return out;
}

}  // namespace sft
