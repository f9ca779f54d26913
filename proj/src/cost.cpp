/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/cost.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace aglist {

namespace {

long long to_ll(unsigned __int128 v) {
    if (v > (unsigned __int128)std::numeric_limits<long long>::max())
        throw std::domain_error("cost bound exceeds the 64-bit range");
    return (long long)v;
}

// sum of i^2 for i = 1..n
unsigned __int128 square_pyramid(long long n) {
    if (n <= 0) return 0;
    return (unsigned __int128)n * (n + 1) * (2 * n + 1) / 6;
}

}  // namespace

LoBound bound_lee_osullivan(const Code& code, int m, int ell) {
    if (m < 0 || ell < m) throw std::invalid_argument("need 0 <= m <= ell");
    const Curve& C = code.curve();
    long long bmax = 0;
    for (const auto& e : C.apery()) bmax = std::max(bmax, e.b);
    LoBound r;
    r.bracket = bmax + (long long)m * (code.n() + 2 * C.genus() - 1) + code.u() * (long long)(ell - m);
    unsigned __int128 b2 = (unsigned __int128)r.bracket * r.bracket;
    long long a1 = C.a1();
    // Ceiling division keeps the value an upper bound when a_1 does not
    // divide evenly; on the shipped fixtures the division is exact.
    r.literal = to_ll((b2 * square_pyramid(a1 * (ell + 1)) + a1 - 1) / a1);
    r.alternate = to_ll((b2 * square_pyramid(ell + 1) + a1 - 1) / a1);
    return r;
}

long long count_gs_equations(long long n, long long m) {
    return n * m * (m + 1) / 2;
}

BhSystem count_bh_system(const Code& code, int m, int ell, long long a_degree) {
    if (m < 0 || ell < m) throw std::invalid_argument("need 0 <= m <= ell");
    const Curve& C = code.curve();
    const long long n = code.n();
    const long long u = code.u();
    BhSystem s;
    for (int i = 0; i <= m; ++i) {
        long long b = a_degree - (long long)i * u;
        long long vanish_dim = code.dim_ldq(m - i, b);
        s.equations += (long long)(m - i) * n - C.semigroup_dim(b) + vanish_dim;
        s.unknowns += vanish_dim;
    }
    for (int i = m + 1; i <= ell; ++i) s.unknowns += C.semigroup_dim(a_degree - (long long)i * u);
    return s;
}

long long cubic_solve_estimate(long long n_unknowns) {
    if (n_unknowns < 0) throw std::invalid_argument("negative system size");
    return to_ll((unsigned __int128)n_unknowns * n_unknowns * n_unknowns / 3);
}

CostComparison compare_report(const Code& code, int m, int ell, int tau, std::optional<long long> measured) {
    CostComparison c;
    c.m = m;
    c.ell = ell;
    c.tau = tau;
    c.a_degree = (long long)m * (code.n() - tau) - 1;
    c.gs_equations = count_gs_equations(code.n(), m);
    c.gs_estimate = cubic_solve_estimate(c.gs_equations);
    c.bh = count_bh_system(code, m, ell, c.a_degree);
    c.bh_estimate = cubic_solve_estimate(c.bh.unknowns);
    c.lo = bound_lee_osullivan(code, m, ell);
    c.measured_mults = measured;
    return c;
}

std::string cost_comparison_text(const CostComparison& c) {
    std::ostringstream os;
    os << "interpolation cost comparison (m=" << c.m << ", ell=" << c.ell << ", tau=" << c.tau << ", A=" << c.a_degree << ")\n";
    auto row = [&os](const std::string& method, const std::string& eqs, const std::string& unk, const std::string& est) {
        os << "  " << std::left << std::setw(18) << method << std::setw(11) << eqs << std::setw(11) << unk << est << "\n";
    };
    row("method", "equations", "unknowns", "mult estimate");
    row("guruswami-sudan", std::to_string(c.gs_equations), "-", std::to_string(c.gs_estimate));
    row("beelen-hoholdt", std::to_string(c.bh.equations), std::to_string(c.bh.unknowns), std::to_string(c.bh_estimate));
    row("lee-osullivan", "-", "-", std::to_string(c.lo.alternate) + " (sum to ell+1)");
    row("", "", "", std::to_string(c.lo.literal) + " (sum to a1(ell+1), literal)");
    os << "  bracket " << c.lo.bracket << "\n";
    if (c.measured_mults) os << "  measured pair-reduction multiplications " << *c.measured_mults << "\n";
    return os.str();
}

}  // namespace aglist
