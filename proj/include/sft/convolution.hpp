#pragma once

#include "sft/hermite.hpp"
#include "sft/multivector.hpp"
#include "sft/slicefield.hpp"

namespace sft {

/// eta_sandwich applied pointwise to both components.
SliceField eta_sandwich_field(const SliceField& f);

/// Effective split form of the pointwise product F * G of two transformed
/// fields, with the sphere average of the inverse transform folded in:
///   H1 = F1 G1 + S(F2) G2,   H2 = F2 G1 - S(F1) G2,
/// where S is the eta sandwich. On span{1, e0}-valued components this
/// agrees with carrying the eta dependence symbolically through the
/// geometric product.
SliceField spectral_product(const SliceField& F, const SliceField& G);

/// Mustard convolution, spectral route: f *_S g = Finv(F(f) F(g)).
/// This is the defining form and serves as ground truth for the others.
SliceField mustard_spectral(const SliceField& f, const SliceField& g);

/// Overall constant of the spatial Mustard formula, measured once by least
/// squares against the spectral route on the pair (psi_00, psi_00).
/// Analytically it equals -i / (4 pi c) with plain (unnormalized) 2D
/// convolutions over the extended plane.
cplx calibrate_mustard_kappa(const GridSpec& grid, const Params& params);

/// Mustard convolution, explicit spatial route:
///   kappa * { f1^+ * g1^+ + S(f2)^- * g2^-
///             + omega ( f2^- * g1^+ - S(f1)^+ * g2^- ) }
/// with +/- the even/odd extensions, * the plain 2D convolution over the
/// extended (x0, r)-plane (computed by FFT, circular on the doubled
/// domain), restricted back to r >= 0. Requires N0 and 2 Nr powers of two.
SliceField mustard_spatial(const SliceField& f, const SliceField& g, cplx kappa);

/// Convenience overload; calibrates kappa on the field's own grid.
SliceField mustard_spatial(const SliceField& f, const SliceField& g);

enum class TranslatePath { spectral, spatial };

/// Generalized translation T_y f = Finv( F(f)(z) K(y, z) ).
/// spectral: reference route through the transform pair.
/// spatial: three shifted/reflected copies
///   C { [f1(u, r-g) - S(f2)(u, r-g) eta] + [f1(u, r+g) + S(f2)(u, r+g) eta]
///       + [f1(u, g-r) + S(f2)(u, g-r) eta]
///       + omega([f2(u, r-g) + S(f1)(u, r-g) eta]
///             + [f2(u, r+g) - S(f1)(u, r+g) eta]
///             + [-f2(u, g-r) + S(f1)(u, g-r) eta]) },
/// u = x0 - y0, C = -i Gamma(m/2)/(8 c pi^{m/2+1}); a term is dropped when
/// its second argument is negative (the g-r copy needs it strictly
/// positive so the shared r = g row is counted once).
/// y must lie on the grid (x0 and r both integer multiples of the steps).
SliceField generalized_translate(const SliceField& f, const SlicePoint& y, TranslatePath path);

/// (f *_S g)(x) = int T_y(f)(x) g(y) dy by direct quadrature over the
/// grid of g (trapezoid, half weight on the r = 0 row), with the sphere
/// integrals carried out analytically.
SliceField translate_convolve(const SliceField& f, const SliceField& g);

}  // namespace sft
