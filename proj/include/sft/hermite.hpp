#pragma once

#include "sft/multivector.hpp"
#include "sft/slicefield.hpp"

namespace sft {

/// Index (j, k) of the Clifford-Hermite function psi_{j,k}; its eigenvalue
/// under the slice Fourier transform is (-i)^{j+k+1}.
struct HermiteIndex {
    int j = 0;
    int k = 0;
};

/// Point in slice coordinates: x = x0 e0 + r omega with omega a unit
/// 1-vector in span{e1..em}.
struct SlicePoint {
    double x0 = 0.0;
    double r = 0.0;
    Multivector omega;

    SlicePoint(double x0_, double r_, Multivector omega_);

    /// The 1-vector x0 e0 + r omega.
    Multivector position() const;
};

/// Unit vector along generator e_axis (axis in 1..m), the default slice
/// direction used by the CLI.
Multivector axis_direction(int dim, int axis);

/// Monomial m_k(x) = (e0 - 1)(x0 + r omega)^k, a null solution of the slice
/// Dirac operator.
Multivector monomial_m_k(const SlicePoint& p, int k);

/// C(j,k) = -2t for j = 2t, -2(k + t + 1) for j = 2t + 1.
double coefficient_C(int j, int k);

/// Clifford-Hermite function psi_{j,k}(x) in Laguerre closed form:
///   j = 2t:     (2c)^t t! L_t^k(|x|^2/2c) m_k(x) G(x)
///   j = 2t + 1: (2c)^t t! x L_t^{k+1}(|x|^2/2c) m_k(x) G(x)
/// with G(x) = exp(-|x|^2 / 4c) and |x|^2 = x0^2 + r^2.
Multivector hermite_function(HermiteIndex idx, const SlicePoint& p, const Params& params);

/// Squared L2 norm A(j,k) = <psi_{j,k}, psi_{j,k}>:
///   j = 2t:     2 (2c)^{2t+k+1} t! (k+t)!   pi^{m/2+1} / Gamma(m/2)
///   j = 2t + 1: 2 (2c)^{2t+k+2} t! (k+t+1)! pi^{m/2+1} / Gamma(m/2)
double norm_A(HermiteIndex idx, const Params& params);

/// Raising operator D~_c = x/2 - c D0 applied by finite differences;
/// psi_{j,k} = D~_c psi_{j-1,k} up to O(h^2).
SliceField raising_apply(const SliceField& f);

/// Splits psi_{j,k} into the (f1, f2) pair and tabulates it on the grid.
/// The split is extracted exactly from evaluations at +omega and -omega.
SliceField sample_hermite(HermiteIndex idx, const GridSpec& grid, const Params& params);

}  // namespace sft
