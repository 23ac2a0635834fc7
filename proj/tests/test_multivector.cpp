#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "sft/multivector.hpp"
#include "test_util.hpp"

using namespace sft;
using sft_test::diff_inf;
using sft_test::random_multivector;

namespace {

// Brute-force product oracle: expand both blades into generator strings,
// sort the concatenation with adjacent swaps (each swap flips the sign),
// cancel equal neighbors with e_i e_i = -1.
std::pair<int, unsigned> blade_product_oracle(unsigned a, unsigned b) {
    std::vector<int> gens;
    for (int i = 0; i < 16; ++i)
        if (a & (1u << i)) gens.push_back(i);
    for (int i = 0; i < 16; ++i)
        if (b & (1u << i)) gens.push_back(i);
    int sign = 1;
    // bubble sort, counting swaps
    for (std::size_t pass = 0; pass + 1 < gens.size(); ++pass)
        for (std::size_t i = 0; i + 1 < gens.size(); ++i)
            if (gens[i] > gens[i + 1]) {
                std::swap(gens[i], gens[i + 1]);
                sign = -sign;
            }
    unsigned blade = 0;
    for (std::size_t i = 0; i < gens.size();) {
        if (i + 1 < gens.size() && gens[i] == gens[i + 1]) {
            sign = -sign;  // e_i^2 = -1
            i += 2;
        } else {
            blade |= 1u << gens[i];
            i += 1;
        }
    }
    return {sign, blade};
}

}  // namespace

TEST_CASE("blade product sign matches the string-sorting oracle") {
    for (int dim : {2, 3, 4}) {
        const unsigned n = 1u << dim;
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                const auto [sign, blade] = blade_product_oracle(a, b);
                CHECK(blade == (a ^ b));
                CHECK(blade_product_sign(a, b) == sign);
            }
    }
}

TEST_CASE("generator relations") {
    const int dim = 3;
    const Multivector e0 = Multivector::basis(dim, 0b001);
    const Multivector e1 = Multivector::basis(dim, 0b010);

    SUBCASE("e0 * e0 = -1") {
        const Multivector p = e0 * e0;
        CHECK(p[0] == cplx(-1.0));
        CHECK(p.norm_inf() == 1.0);
    }
    SUBCASE("1 * a = a") {
        std::mt19937_64 rng(7);
        const Multivector a = random_multivector(dim, rng);
        CHECK(diff_inf(Multivector::scalar(dim, 1.0) * a, a) == 0.0);
    }
    SUBCASE("(e0 e1) * e1 = -e0") {
        const Multivector p = (e0 * e1) * e1;
        CHECK(diff_inf(p, -1.0 * e0) == 0.0);
    }
    SUBCASE("anti-commutation e_i e_j + e_j e_i = -2 delta_ij") {
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) {
                const Multivector ei = Multivector::basis(dim, 1u << i);
                const Multivector ej = Multivector::basis(dim, 1u << j);
                Multivector s = ei * ej + ej * ei;
                if (i == j) CHECK(diff_inf(s, Multivector::scalar(dim, -2.0)) == 0.0);
                else CHECK(s.norm_inf() == 0.0);
            }
    }
}

TEST_CASE("product is associative and bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 3;
        const Multivector a = random_multivector(dim, rng);
        const Multivector b = random_multivector(dim, rng);
        const Multivector c = random_multivector(dim, rng);
        CHECK(diff_inf((a * b) * c, a * (b * c)) < 1e-13);
        const cplx s(0.3, -0.8);
        CHECK(diff_inf((s * a) * b, s * (a * b)) < 1e-13);
        CHECK(diff_inf((a + b) * c, a * c + b * c) < 1e-13);
    }
}

TEST_CASE("geometric_accumulate matches operator*") {
    std::mt19937_64 rng(23);
    const Multivector a = random_multivector(4, rng);
    const Multivector b = random_multivector(4, rng);
    Multivector acc = random_multivector(4, rng);
    const cplx s(1.7, -0.4);
    const Multivector want = acc + s * (a * b);
    geometric_accumulate(acc, a, b, s);
    CHECK(diff_inf(acc, want) < 1e-14);
}

TEST_CASE("clifford conjugation") {
    const int dim = 3;
    SUBCASE("complex scalar conjugates") {
        const Multivector a = Multivector::scalar(dim, cplx(2.0, 3.0));
        CHECK(clifford_conjugate(a)[0] == cplx(2.0, -3.0));
    }
    SUBCASE("generators negate") {
        for (int i = 0; i < dim; ++i) {
            const Multivector ei = Multivector::basis(dim, 1u << i);
            CHECK(diff_inf(clifford_conjugate(ei), -1.0 * ei) == 0.0);
        }
    }
    SUBCASE("bivector e0e1 negates") {
        const Multivector b = Multivector::basis(dim, 0b011);
        CHECK(diff_inf(clifford_conjugate(b), -1.0 * b) == 0.0);
    }
    SUBCASE("anti-automorphism and involution on random elements") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 30; ++t) {
            const Multivector a = random_multivector(dim, rng);
            const Multivector b = random_multivector(dim, rng);
            CHECK(diff_inf(clifford_conjugate(a * b),
                           clifford_conjugate(b) * clifford_conjugate(a)) < 1e-13);
            CHECK(diff_inf(clifford_conjugate(clifford_conjugate(a)), a) == 0.0);
        }
    }
}

TEST_CASE("grade projection") {
    const int dim = 3;
    Multivector a(dim);
    a[0] = 3.0;          // scalar
    a[0b010] = 1.0;      // e1
    a[0b110] = 1.0;      // e1e2
    SUBCASE("picks a single grade") {
        const Multivector g1 = grade_project(a, 1);
        CHECK(g1[0b010] == cplx(1.0));
        CHECK(g1[0] == cplx(0.0));
        CHECK(g1[0b110] == cplx(0.0));
    }
    SUBCASE("projections sum to the identity") {
        std::mt19937_64 rng(5);
        const Multivector r = random_multivector(dim, rng);
        Multivector sum(dim);
        for (int k = 0; k <= dim; ++k) sum += grade_project(r, k);
        CHECK(diff_inf(sum, r) == 0.0);
    }
    SUBCASE("top grade maps to itself") {
        const Multivector top = Multivector::basis(dim, 0b111);
        CHECK(diff_inf(grade_project(top, 3), top) == 0.0);
    }
    CHECK_THROWS_AS(grade_project(a, 4), std::invalid_argument);
}

TEST_CASE("scalar part") {
    const int dim = 3;
    Multivector a(dim);
    a[0] = 5.0;
    a[0b001] = 2.0;
    CHECK(scalar_part(a) == cplx(5.0));
    CHECK(scalar_part(Multivector::basis(dim, 0b110)) == cplx(0.0));
    // scalar_part(conj(a) a) for a = e0 + e1 evaluates (-e0-e1)(e0+e1) = 2
    Multivector v(dim);
    v[0b001] = 1.0;
    v[0b010] = 1.0;
    CHECK(scalar_part(clifford_conjugate(v) * v) == cplx(2.0));
}

TEST_CASE("eta sandwich closed form") {
    SUBCASE("scalar averages to -1") {
        for (int m : {2, 3}) {
            const Multivector one = Multivector::scalar(m + 1, 1.0);
            CHECK(diff_inf(eta_sandwich(one, m), Multivector::scalar(m + 1, -1.0)) == 0.0);
        }
    }
    SUBCASE("e1 at m=2 vanishes") {
        CHECK(eta_sandwich(Multivector::basis(3, 0b010), 2).norm_inf() == 0.0);
    }
    SUBCASE("e0 at m=2 maps to itself") {
        const Multivector e0 = Multivector::basis(3, 0b001);
        CHECK(diff_inf(eta_sandwich(e0, 2), e0) == 0.0);
    }
    CHECK_THROWS_AS(eta_sandwich(Multivector::scalar(3, 1.0), 3), std::invalid_argument);
}

TEST_CASE("lemma: sum_i e_i a^(k) e_i = (-1)^k (2k - m) a^(k) on blades") {
    for (int m : {2, 3}) {
        const int dim = m + 1;
        for (unsigned blade = 0; blade < (1u << dim); ++blade) {
            if (blade & 1u) continue;  // e0-free blades only
            const int k = std::popcount(blade);
            const Multivector a = Multivector::basis(dim, blade);
            Multivector sum(dim);
            for (int i = 1; i <= m; ++i) {
                const Multivector ei = Multivector::basis(dim, 1u << i);
                sum += ei * a * ei;
            }
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            CHECK(diff_inf(sum, sgn * (2.0 * k - m) * a) == 0.0);
        }
    }
}

TEST_CASE("sphere quadrature oracle") {
    const double pi = std::numbers::pi;
    SUBCASE("int omega^2 = -2pi at m=2") {
        const Multivector got = sphere_sandwich_oracle(Multivector::scalar(3, 1.0), 2, 256);
        CHECK(diff_inf(got, Multivector::scalar(3, -2.0 * pi)) < 1e-12);
    }
    SUBCASE("e1e2 at m=2 gives +2pi e1e2") {
        const Multivector b = Multivector::basis(3, 0b110);
        CHECK(diff_inf(sphere_sandwich_oracle(b, 2, 256), 2.0 * pi * b) < 1e-12);
    }
    SUBCASE("oracle / area equals eta_sandwich on random elements") {
        std::mt19937_64 rng(17);
        for (int m : {2, 3}) {
            const double tol = m == 2 ? 1e-10 : 1e-6;
            for (int t = 0; t < 20; ++t) {
                const Multivector a = random_multivector(m + 1, rng);
                const Multivector avg = (1.0 / sphere_area(m)) * sphere_sandwich_oracle(a, m, 512);
                CHECK(diff_inf(avg, eta_sandwich(a, m)) < tol);
            }
        }
    }
    CHECK_THROWS_AS(sphere_sandwich_oracle(Multivector::scalar(5, 1.0), 4, 256),
                    std::invalid_argument);
    CHECK_THROWS_AS(sphere_sandwich_oracle(Multivector::scalar(3, 1.0), 2, 8),
                    std::invalid_argument);
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(Params(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Params(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(2, -1.0), std::invalid_argument);
    const Params p(3, 0.25);
    CHECK(p.m == 3);
}

TEST_CASE("dimension mismatch raises") {
    const Multivector a = Multivector::scalar(3, 1.0);
    const Multivector b = Multivector::scalar(4, 1.0);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("blade labels") {
    CHECK(blade_label(0) == "1");
    CHECK(blade_label(0b001) == "e0");
    CHECK(blade_label(0b101) == "e0e2");
}
