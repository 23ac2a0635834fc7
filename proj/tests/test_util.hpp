#pragma once

#include <random>

#include "sft/multivector.hpp"

namespace sft_test {

inline sft::Multivector random_multivector(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    sft::Multivector a(dim);
    for (unsigned b = 0; b < a.size(); ++b) a[b] = sft::cplx(u(rng), u(rng));
    return a;
}

inline double diff_inf(const sft::Multivector& a, const sft::Multivector& b) {
    return (a - b).norm_inf();
}

}  // namespace sft_test
