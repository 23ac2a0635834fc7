#include "sft/slicefield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sft {

GridSpec::GridSpec(double L_, int N0_, double R_, int Nr_) : L(L_), N0(N0_), R(R_), Nr(Nr_) {
    if (!(L > 0.0) || !(R > 0.0)) throw std::invalid_argument("GridSpec: extents must be positive");
    if (N0 < 8 || (N0 % 2) != 0) throw std::invalid_argument("GridSpec: N0 must be even and >= 8");
    if (Nr < 4) throw std::invalid_argument("GridSpec: Nr must be >= 4");
}

GridSpec GridSpec::frequency_grid(double c) const {
    const double dy0 = 2.0 * std::numbers::pi * (2.0 * c) / (N0 * h0());
    const double dg = 2.0 * std::numbers::pi * (2.0 * c) / (2.0 * Nr * hr());
    return GridSpec(N0 / 2 * dy0, N0, Nr * dg, Nr);
}

bool GridSpec::operator==(const GridSpec& o) const {
    auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    return N0 == o.N0 && Nr == o.Nr && close(L, o.L) && close(R, o.R);
}

SliceField::SliceField(GridSpec grid, Params params)
    : grid_(grid),
      params_(params),
      f1_(static_cast<std::size_t>(grid.N0) * grid.Nr, Multivector(params.m + 1)),
      f2_(static_cast<std::size_t>(grid.N0) * grid.Nr, Multivector(params.m + 1)) {}

std::size_t SliceField::idx(int n, int j) const {
    return static_cast<std::size_t>(n) * grid_.Nr + j;
}

SliceField& SliceField::operator+=(const SliceField& rhs) {
    if (!(grid_ == rhs.grid_)) throw std::invalid_argument("SliceField: grid mismatch");
    for (std::size_t i = 0; i < f1_.size(); ++i) {
        f1_[i] += rhs.f1_[i];
        f2_[i] += rhs.f2_[i];
    }
    return *this;
}

SliceField& SliceField::operator-=(const SliceField& rhs) {
    if (!(grid_ == rhs.grid_)) throw std::invalid_argument("SliceField: grid mismatch");
    for (std::size_t i = 0; i < f1_.size(); ++i) {
        f1_[i] -= rhs.f1_[i];
        f2_[i] -= rhs.f2_[i];
    }
    return *this;
}

SliceField& SliceField::operator*=(cplx s) {
    for (std::size_t i = 0; i < f1_.size(); ++i) {
        f1_[i] *= s;
        f2_[i] *= s;
    }
    return *this;
}

SliceField SliceField::right_multiplied(const Multivector& lambda) const {
    SliceField out(grid_, params_);
    for (std::size_t i = 0; i < f1_.size(); ++i) {
        out.f1_[i] = f1_[i] * lambda;
        out.f2_[i] = f2_[i] * lambda;
    }
    return out;
}

double SliceField::norm_inf() const {
    double m = 0.0;
    for (std::size_t i = 0; i < f1_.size(); ++i) {
        m = std::max(m, f1_[i].norm_inf());
        m = std::max(m, f2_[i].norm_inf());
    }
    return m;
}

SliceField sample(const PointEvaluator& eval, const GridSpec& grid, const Params& params) {
    SliceField out(grid, params);
    for (int n = 0; n < grid.N0; ++n) {
        const double x0 = grid.x0(n);
        for (int j = 0; j < grid.Nr; ++j) {
            auto [v1, v2] = eval(x0, grid.r(j));
            out.f1(n, j) = std::move(v1);
            out.f2(n, j) = std::move(v2);
        }
    }
    return out;
}

std::vector<Multivector> even_extension(const SliceField& f) {
    const GridSpec& g = f.grid();
    const int M = 2 * g.Nr;
    std::vector<Multivector> out(static_cast<std::size_t>(g.N0) * M, Multivector(f.mv_dim()));
    for (int n = 0; n < g.N0; ++n)
        for (int j = 1; j < M; ++j) {
            const int jr = std::abs(j - g.Nr);
            if (jr < g.Nr) out[static_cast<std::size_t>(n) * M + j] = f.f1(n, jr);
        }
    return out;
}

std::vector<Multivector> odd_extension(const SliceField& f) {
    const GridSpec& g = f.grid();
    const int M = 2 * g.Nr;
    std::vector<Multivector> out(static_cast<std::size_t>(g.N0) * M, Multivector(f.mv_dim()));
    for (int n = 0; n < g.N0; ++n)
        for (int j = 1; j < M; ++j) {
            if (j == g.Nr) continue;  // r = 0 row forced to zero
            const int jr = std::abs(j - g.Nr);
            if (jr < g.Nr) {
                Multivector v = f.f2(n, jr);
                if (j < g.Nr) v *= -1.0;
                out[static_cast<std::size_t>(n) * M + j] = std::move(v);
            }
        }
    return out;
}

namespace {

// [clifford_conjugate(a) b]_0 reduces to the Hermitian dot product of the
// coefficient vectors: the conjugation sign on grade k equals the sign of
// e_A e_A, so the two cancel blade by blade.
cplx conj_dot(const Multivector& a, const Multivector& b) {
    cplx s = 0.0;
    for (unsigned blade = 0; blade < a.size(); ++blade)
        s += std::conj(a[blade]) * b[blade];
    return s;
}

}  // namespace

cplx inner_product(const SliceField& f, const SliceField& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("inner_product: grid mismatch");
    if (f.params().m != g.params().m)
        throw std::invalid_argument("inner_product: params mismatch");
    const GridSpec& gr = f.grid();
    cplx acc = 0.0;
    for (int n = 0; n < gr.N0; ++n)
        for (int j = 0; j < gr.Nr; ++j) {
            cplx term = conj_dot(f.f1(n, j), g.f1(n, j)) + conj_dot(f.f2(n, j), g.f2(n, j));
            if (j == 0) term *= 0.5;
            acc += term;
        }
    return sphere_area(f.params().m) * gr.h0() * gr.hr() * acc;
}

double field_norm(const SliceField& f) {
    return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

double max_abs_diff(const SliceField& a, const SliceField& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("max_abs_diff: grid mismatch");
    double m = 0.0;
    const GridSpec& g = a.grid();
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            Multivector d1 = a.f1(n, j) - b.f1(n, j);
            Multivector d2 = a.f2(n, j) - b.f2(n, j);
            m = std::max({m, d1.norm_inf(), d2.norm_inf()});
        }
    return m;
}

namespace {

// Second-order first derivative along one axis of both components.
template <bool AlongX0>
SliceField derive(const SliceField& f) {
    const GridSpec& g = f.grid();
    const int n_axis = AlongX0 ? g.N0 : g.Nr;
    if (n_axis < 3) throw std::invalid_argument("derivative: grid too small");
    const double h = AlongX0 ? g.h0() : g.hr();
    SliceField out(g, f.params());

    auto get1 = [&](int n, int j) -> const Multivector& { return f.f1(n, j); };
    auto get2 = [&](int n, int j) -> const Multivector& { return f.f2(n, j); };

    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            const int t = AlongX0 ? n : j;
            auto stencil = [&](auto&& get, Multivector& dst) {
                auto at = [&](int s) -> const Multivector& {
                    return AlongX0 ? get(s, j) : get(n, s);
                };
                if (t == 0) {
                    dst.add_scaled(at(0), -1.5 / h);
                    dst.add_scaled(at(1), 2.0 / h);
                    dst.add_scaled(at(2), -0.5 / h);
                } else if (t == n_axis - 1) {
                    dst.add_scaled(at(t), 1.5 / h);
                    dst.add_scaled(at(t - 1), -2.0 / h);
                    dst.add_scaled(at(t - 2), 0.5 / h);
                } else {
                    dst.add_scaled(at(t + 1), 0.5 / h);
                    dst.add_scaled(at(t - 1), -0.5 / h);
                }
            };
            stencil(get1, out.f1(n, j));
            stencil(get2, out.f2(n, j));
        }
    return out;
}

}  // namespace

SliceField derivative_x0(const SliceField& f) { return derive<true>(f); }
SliceField derivative_r(const SliceField& f) { return derive<false>(f); }

SliceField multiply_by_x(const SliceField& f) {
    const GridSpec& g = f.grid();
    const Multivector e0 = Multivector::basis(f.mv_dim(), 1u);
    SliceField out(g, f.params());
    for (int n = 0; n < g.N0; ++n) {
        const double x0 = g.x0(n);
        for (int j = 0; j < g.Nr; ++j) {
            const double r = g.r(j);
            Multivector e0f1 = e0 * f.f1(n, j);
            Multivector e0f2 = e0 * f.f2(n, j);
            out.f1(n, j) = x0 * e0f1 - r * f.f2(n, j);
            out.f2(n, j) = r * f.f1(n, j) - x0 * e0f2;
        }
    }
    return out;
}

SliceField left_multiply_e0(const SliceField& f) {
    const GridSpec& g = f.grid();
    const Multivector e0 = Multivector::basis(f.mv_dim(), 1u);
    SliceField out(g, f.params());
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            out.f1(n, j) = e0 * f.f1(n, j);
            out.f2(n, j) = -1.0 * (e0 * f.f2(n, j));
        }
    return out;
}

SliceField complex_conjugate(const SliceField& f) {
    const GridSpec& g = f.grid();
    SliceField out(g, f.params());
    for (int n = 0; n < g.N0; ++n)
        for (int j = 0; j < g.Nr; ++j) {
            out.f1(n, j) = complex_conjugate(f.f1(n, j));
            out.f2(n, j) = complex_conjugate(f.f2(n, j));
        }
    return out;
}

}  // namespace sft
