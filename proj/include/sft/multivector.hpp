#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace sft {

using cplx = std::complex<double>;

/// Transform parameters: sphere dimension parameter m (algebra is Cl(m+1),
/// generators e0..em) and the positive scale c of the Gaussian weight.
struct Params {
    int m = 2;
    double c = 0.5;

    Params() = default;
    Params(int m_, double c_);
};

/// Dense element of the complexified Clifford algebra Cl(m+1).
///
/// Generators e0..e_{dim-1} satisfy e_i e_j + e_j e_i = -2 delta_ij.
/// Coefficients are indexed by blade bitmask: bit i set <=> the blade
/// contains e_i, so coeffs[0] is the scalar part and coeffs[0b101] is the
/// e0e2 coefficient. The complex unit i commutes with all generators.
class Multivector {
  public:
    explicit Multivector(int dim);

    static Multivector scalar(int dim, cplx value);
    static Multivector basis(int dim, unsigned blade, cplx value = 1.0);

    int dim() const { return dim_; }
    std::size_t size() const { return coeffs_.size(); }

    cplx& operator[](unsigned blade) { return coeffs_[blade]; }
    const cplx& operator[](unsigned blade) const { return coeffs_[blade]; }

    Multivector& operator+=(const Multivector& rhs);
    Multivector& operator-=(const Multivector& rhs);
    Multivector& operator*=(cplx s);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
    friend Multivector operator*(cplx s, Multivector a) { return a *= s; }
    friend Multivector operator-(Multivector a) { return a *= -1.0; }
    friend Multivector operator*(const Multivector& a, const Multivector& b);

    /// y += s * x, without allocating.
    void add_scaled(const Multivector& x, cplx s);

    void clear();

    double norm_inf() const;
    bool is_zero(double tol = 0.0) const;

  private:
    int dim_;
    std::vector<cplx> coeffs_;
};

/// Sign of the blade product e_A e_B = sign * e_{A xor B} under the metric
/// e_i^2 = -1. Counts transpositions between the bitmasks plus one flip per
/// repeated generator.
int blade_product_sign(unsigned a, unsigned b);

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// acc += scale * (a * b), without allocating.
void geometric_accumulate(Multivector& acc, const Multivector& a, const Multivector& b,
                          cplx scale);

/// Clifford conjugation: complex-conjugates scalars, maps e_i -> -e_i and
/// reverses products. On a grade-k blade this is the sign (-1)^{k(k+1)/2}.
Multivector clifford_conjugate(const Multivector& a);

/// Keeps exactly the coefficients whose blade has popcount k.
Multivector grade_project(const Multivector& a, int k);

cplx scalar_part(const Multivector& a);

/// Complex conjugation of the coefficients only (basis blades untouched).
Multivector complex_conjugate(const Multivector& a);

/// Spherical average of eta * a * eta over unit 1-vectors eta in
/// span{e1..em}. Writing a = b + e0 c with b, c free of e0 and grading over
/// e1..em only,
///    S_m(a) = sum_k (-1)^k ((2k - m)/m) (b^(k) - e0 c^(k)).
/// The e0-free case is the normalized sphere integral of Theorem
/// int omega a omega; the e0 part picks up a sign because e0 anticommutes
/// with every eta.
Multivector eta_sandwich(const Multivector& a, int m);

/// Direct quadrature of int_{S^{m-1}} eta a eta dsigma (area included).
/// m = 2: trapezoid in the circle angle; m = 3: Gauss-Legendre x trapezoid
/// product grid. Supports m in {2, 3}.
Multivector sphere_sandwich_oracle(const Multivector& a, int m, int n_points);

/// Surface area of S^{m-1}: 2 pi^{m/2} / Gamma(m/2).
double sphere_area(int m);

/// Blade label in generator order: "1", "e0", "e0e2", ...
std::string blade_label(unsigned blade);

}  // namespace sft
