#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sft/multivector.hpp"

namespace sft {

/// Uniform rectangular grid in slice coordinates.
/// x0 runs over [-L, L) with N0 samples, x0_n = (n - N0/2) h0, h0 = 2L/N0;
/// r runs over [0, R) with Nr samples, r_j = j hr, hr = R/Nr.
struct GridSpec {
    double L = 12.0;
    int N0 = 256;
    double R = 12.0;
    int Nr = 256;

    GridSpec() = default;
    GridSpec(double L_, int N0_, double R_, int Nr_);

    double h0() const { return 2.0 * L / N0; }
    double hr() const { return R / Nr; }
    double x0(int n) const { return (n - N0 / 2) * h0(); }
    double r(int j) const { return j * hr(); }

    /// Grid induced in the frequency domain by the transform phase
    /// e^{-i x0 y0 / 2c}: spacing 2pi(2c)/(N0 h0) in y0 and, on the doubled
    /// r-axis, 2pi(2c)/(2 Nr hr) in g. Applying it twice returns the
    /// original grid.
    GridSpec frequency_grid(double c) const;

    /// Point counts exact, extents to relative 1e-12 (a frequency-grid
    /// round trip reproduces L and R only up to rounding).
    bool operator==(const GridSpec& o) const;
};

/// Sampled slice function f(x) = f1(x0, r) + omega f2(x0, r) with
/// multivector-valued components on a GridSpec. omega is the slice
/// direction; all field operations work on the (f1, f2) pair, with the
/// omega bookkeeping (omega^2 = -1, omega e0 = -e0 omega) applied
/// symbolically.
class SliceField {
  public:
    SliceField(GridSpec grid, Params params);

    const GridSpec& grid() const { return grid_; }
    const Params& params() const { return params_; }
    int mv_dim() const { return params_.m + 1; }

    Multivector& f1(int n, int j) { return f1_[idx(n, j)]; }
    const Multivector& f1(int n, int j) const { return f1_[idx(n, j)]; }
    Multivector& f2(int n, int j) { return f2_[idx(n, j)]; }
    const Multivector& f2(int n, int j) const { return f2_[idx(n, j)]; }

    /// Set when a fast-path operation had to fall back to direct quadrature.
    bool fast_fallback = false;

    SliceField& operator+=(const SliceField& rhs);
    SliceField& operator-=(const SliceField& rhs);
    SliceField& operator*=(cplx s);
    friend SliceField operator+(SliceField a, const SliceField& b) { return a += b; }
    friend SliceField operator-(SliceField a, const SliceField& b) { return a -= b; }
    friend SliceField operator*(SliceField a, cplx s) { return a *= s; }
    friend SliceField operator*(cplx s, SliceField a) { return a *= s; }

    /// f * lambda for a constant algebra element (right module action).
    SliceField right_multiplied(const Multivector& lambda) const;

    double norm_inf() const;

  private:
    std::size_t idx(int n, int j) const;
    GridSpec grid_;
    Params params_;
    std::vector<Multivector> f1_, f2_;
};

using PointEvaluator =
    std::function<std::pair<Multivector, Multivector>(double x0, double r)>;

/// Tabulates (f1, f2) at the grid nodes.
SliceField sample(const PointEvaluator& eval, const GridSpec& grid, const Params& params);

/// Even extension of f1 over r in [-R, R), linear row order
/// j in [0, 2Nr) <-> r = (j - Nr) hr. The unsampled r = -R row is zero.
std::vector<Multivector> even_extension(const SliceField& f);

/// Odd extension of f2; the r = 0 row is forced to zero.
std::vector<Multivector> odd_extension(const SliceField& f);

/// Inner product <f, g> = Area(S^{m-1}) * integral of
/// [conj(f1) g1 + conj(f2) g2]_0 dx0 dr, by trapezoid quadrature with half
/// weight on the r = 0 row (the integrands of interest extend evenly
/// across r = 0, which makes the rule spectrally accurate).
cplx inner_product(const SliceField& f, const SliceField& g);

/// sqrt(Re <f, f>).
double field_norm(const SliceField& f);

double max_abs_diff(const SliceField& a, const SliceField& b);

/// Componentwise d/dx0 and d/dr: central differences in the interior,
/// second-order one-sided stencils at the boundary rows.
SliceField derivative_x0(const SliceField& f);
SliceField derivative_r(const SliceField& f);

/// Pointwise left multiplication by x = x0 e0 + r omega:
/// (x f)_1 = x0 e0 f1 - r f2, (x f)_2 = r f1 - x0 e0 f2.
SliceField multiply_by_x(const SliceField& f);

/// Left multiplication by e0: (e0 f1, -e0 f2).
SliceField left_multiply_e0(const SliceField& f);

/// Complex conjugation of all coefficients.
SliceField complex_conjugate(const SliceField& f);

}  // namespace sft
