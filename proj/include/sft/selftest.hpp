#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "sft/multivector.hpp"
#include "sft/slicefield.hpp"
#include "sft/transform.hpp"

namespace sft::selftest {

struct CriterionResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct Options {
    Params params{2, 0.5};
    unsigned long long seed = 20240817ULL;
    /// Shrinks the heavy grids; keeps every criterion running but loosens
    /// nothing. Intended for smoke runs, not for acceptance.
    bool quick = false;
};

/// Runs the full acceptance suite, one entry per criterion, printing one
/// pass/fail line per criterion to `log` when given.
std::vector<CriterionResult> run_acceptance(const Options& opts, std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

/// Random finite combination sum psi_{j,k} lambda_{j,k} of the sampled
/// basis fields, with complex scalar or full-algebra coefficients.
SliceField random_combination(const std::vector<SliceField>& basis, std::mt19937_64& rng,
                              bool algebra_coeffs);

/// Sampled psi_{j,k} for all j <= j_max, k <= k_max (row-major in j).
std::vector<SliceField> hermite_basis(const GridSpec& grid, const Params& params, int j_max,
                                      int k_max);

/// Polynomial (Neville) extrapolation of the Abel-damped Mehler sums
/// S(rho_i) to rho = 1.
Multivector extrapolate_to_one(const MehlerTable& table, const std::vector<double>& rhos);

}  // namespace sft::selftest
