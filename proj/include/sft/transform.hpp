#pragma once

#include <vector>

#include "sft/hermite.hpp"
#include "sft/multivector.hpp"
#include "sft/slicefield.hpp"

namespace sft {

/// Closed-form kernel of the slice Fourier transform at the point pair
/// (x, y), x = x0 e0 + r omega, y = y0 e0 + g eta:
///   K(x,y) = -i Gamma(m/2) / (8 c pi^{m/2+1})
///            * [ (1 + eta omega) e^{-i(x0 y0 - r g)/2c}
///              + (1 - eta omega) e^{-i(x0 y0 + r g)/2c} ].
Multivector kernel_closed(const SlicePoint& x, const SlicePoint& y, const Params& params);

/// Equivalent trigonometric form
///   -i Gamma(m/2)/(4 c pi^{m/2+1}) e^{-i x0 y0/2c}
///   [cos(rg/2c) + i eta omega sin(rg/2c)].
Multivector kernel_closed_trig(const SlicePoint& x, const SlicePoint& y, const Params& params);

/// Kernel of the inverse transform (complex conjugate of K).
Multivector kernel_inverse(const SlicePoint& x, const SlicePoint& y, const Params& params);

/// Precomputed dyads psi_{j,k}(y) conj(psi_{j,k}(x)) / A(j,k) for the Mehler
/// series, so the Abel-damped partial sum can be evaluated at many rho
/// values cheaply.
class MehlerTable {
  public:
    MehlerTable(const SlicePoint& x, const SlicePoint& y, const Params& params, int j_max,
                int k_max);

    /// Partial sum  sum_{j,k} dyad_{j,k} * (-i) * (-i rho)^{j+k}.
    Multivector eval(double rho) const;

  private:
    int j_max_, k_max_, dim_;
    // The multivector factor of a dyad depends only on k and the parity of
    // j; the rest is a real scalar weight.
    std::vector<Multivector> basis_;   // 2 per k: [even, odd]
    std::vector<double> weights_;      // (j_max+1) x (k_max+1), row-major in j
};

/// Abel-regularized Mehler partial sum of the kernel,
///   sum_{j<=j_max, k<=k_max} psi_{j,k}(y) (-i)(-i rho)^{j+k}
///                            conj(psi_{j,k}(x)) / A(j,k),
/// 0 < rho <= 1.
Multivector mehler_series(const SlicePoint& x, const SlicePoint& y, const Params& params,
                          int j_max, int k_max, double abel_rho);

/// Slice Fourier transform by direct quadrature of the reduced 2D form
/// (the sphere integral is carried out analytically):
///   G1(y0,g) = -i/(2 pi c) * int e^{-i x0 y0/2c} cos(rg/2c) f1 dx0 dr
///   G2(y0,g) = -1/(2 pi c) * int e^{-i x0 y0/2c} sin(rg/2c) f2 dx0 dr
/// Output is indexed on the induced frequency grid.
SliceField forward(const SliceField& f);

/// Same contract as forward, computed with one centered 2D DFT per blade
/// coefficient over the even/odd-extended plane F = f1^+ - i f2^-. Requires
/// N0 and 2 Nr to be powers of two; otherwise falls back to forward and
/// sets fast_fallback on the result.
SliceField forward_fast(const SliceField& f);

/// Inverse transform (conjugate kernel), direct quadrature.
SliceField inverse(const SliceField& f);

/// Fast inverse via the 2D DFT of F1^+ + i F2^-.
SliceField inverse_fast(const SliceField& f);

/// forward_fast when the grid allows it, forward otherwise.
SliceField auto_forward(const SliceField& f);
SliceField auto_inverse(const SliceField& f);

/// Slice Dirac operator on the split representation:
///   D0 f = (e0 d/dx0 f1 - d/dr f2) + omega (d/dr f1 - e0 d/dx0 f2),
/// central differences in the interior, one-sided at the boundary.
SliceField apply_D0(const SliceField& f);

struct KernelPdeResidual {
    double eq1 = 0.0;  // || D0^y K + (i/2c) K x ||_inf
    double eq2 = 0.0;  // || i y K + 2c [K D0^x] ||_inf
};

/// Finite-difference residuals of the kernel PDE system, sampled over an
/// n x n probe box per equation (interior points only). Halving the grid
/// step reduces both residuals by ~4 (second-order stencils).
KernelPdeResidual kernel_pde_residual(const Params& params, int n);

struct PropertyReport {
    double translation = 0.0;
    double reflection = 0.0;
    double conjugation = 0.0;
    double e0_commutation = 0.0;
    double twofold = 0.0;

    double max_deviation() const;
};

/// Relative deviations of the five basic transform identities
/// (translation by a along e0, reflection, complex conjugation,
/// e0-commutation, twofold transform) evaluated on the given field.
/// a must be an integer multiple of the x0 grid step.
PropertyReport property_checks(const SliceField& f, double a);

}  // namespace sft
