/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <string>

#include "aglist/code.hpp"

namespace aglist {

// Multiplication bound for the pair-reduction interpolation:
// [max_j b_j + m(n+2g-1) + u(ell-m)]^2 / a_1 * sum of i^2. The literal
// value runs the sum to a_1(ell+1); the alternate runs it to ell+1, the
// reading under which the published figure for the Klein example arises.
// Both are surfaced because the two disagree.
struct LoBound {
    long long bracket = 0;
    long long literal = 0;
    long long alternate = 0;
};
LoBound bound_lee_osullivan(const Code& code, int m, int ell);

// Constraint count of the plain interpolation linear system: n*m(m+1)/2.
long long count_gs_equations(long long n, long long m);

// Size of the structured linear system parameterized by the divisor degree
// A: equations sum (m-i)n - dim((A-iu)Q) + dim(-(m-i)D + (A-iu)Q) over
// i = 0..m; unknowns sum dim((A-iu)Q) over i = m+1..ell plus the second
// dim term over i = 0..m.
struct BhSystem {
    long long equations = 0;
    long long unknowns = 0;
};
BhSystem count_bh_system(const Code& code, int m, int ell, long long a_degree);

// Gaussian-elimination estimate floor(N^3/3), as the comparison uses it.
long long cubic_solve_estimate(long long n_unknowns);

// All numbers of the three-way interpolation cost comparison at the given
// parameters, computed from curve data alone.
struct CostComparison {
    int m = 0;
    int ell = 0;
    int tau = 0;
    long long a_degree = 0;
    long long gs_equations = 0;
    long long gs_estimate = 0;
    BhSystem bh;
    long long bh_estimate = 0;
    LoBound lo;
    std::optional<long long> measured_mults;  // live pair-reduction counter
};
CostComparison compare_report(const Code& code, int m, int ell, int tau, std::optional<long long> measured = std::nullopt);

// Aligned text table for terminal display.
std::string cost_comparison_text(const CostComparison& c);

}  // namespace aglist
