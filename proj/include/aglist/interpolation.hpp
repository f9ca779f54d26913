/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <vector>

#include "aglist/code.hpp"
#include "aglist/groebner.hpp"

namespace aglist {

// Polynomial in Z with coordinate-ring coefficients; index = Z-degree.
struct ZPoly {
    std::vector<FunElem> z;

    int zdeg() const {
        for (int k = (int)z.size() - 1; k >= 0; --k)
            if (!z[k].is_zero()) return k;
        return -1;
    }
    bool is_zero() const { return zdeg() < 0; }
};

struct InterpParams {
    int m = 1;    // vanishing multiplicity at each place, >= 1
    int ell = 1;  // Z-degree bound, >= m
};

// Weight of a term x_1^i y_j Z^k is i*a_1 + b_j + k*u; the polynomial's
// weight is the max over nonzero terms, kNegInfWeight for zero.
long long zpoly_weight(const Code& code, const ZPoly& p);

// Module order used for interpolation: position j + k*a_1 holds y_j Z^k and
// weighs b_j + k*u; the x weight is a_1.
OrderSpec interpolation_order(const Code& code, int ell);

ModVec zpoly_to_modvec(const Code& code, const ZPoly& p, int ell);
ZPoly modvec_to_zpoly(const Code& code, const ModVec& v);

// Pascal triangle in the field: row n holds C(n, 0..n) reduced mod p.
std::vector<std::vector<Fe>> binomial_table(const Field& F, int nmax);

// Generators of the module of polynomials vanishing to order m at every
// (P_i, r_i) with Z-degree <= ell: (Z - h_r)^{m-i} f^i y_j for i = 0..m and
// Z^k (Z - h_r)^m y_j for k = 1..ell-m, over j = 0..a_1-1. Sorted so the
// top nonzero position of the i-th generator is exactly i. m = 0 yields the
// y_j alone.
std::vector<ModVec> build_generators(const Code& code, const FunElem& hr, int m, int ell, CostCounter* cc = nullptr);

struct InterpolationResult {
    InterpParams params;
    ZPoly Q;                  // minimal module element, monic leading term
    long long weight = 0;     // zpoly_weight of Q
    std::vector<ModVec> basis;  // Groebner basis after pair reduction
    CostCounter build_cost;   // multiplications building the generators
    CostCounter reduce_cost;  // multiplications inside the pair reduction
};

// Full interpolation step: h_r, generators, pair reduction, minimal element.
InterpolationResult interpolate(const Code& code, const std::vector<Fe>& r, const InterpParams& params);

// Vanishing multiplicity check at one place: shift Q(Z + r_i) = sum a_j Z^j
// and require the valuation of a_j at P to be at least m - j for j < m.
// Precision starts at m + zdeg + 2 and doubles up to 4(m + zdeg) if a
// valuation stays unresolved.
bool verify_multiplicity(const Curve& curve, const ZPoly& Q, const Place& P, Fe ri, int m);

// Horner evaluation of Q at a coordinate-ring element.
FunElem zpoly_eval(const Curve& curve, const ZPoly& Q, const FunElem& f, CostCounter* cc = nullptr);

}  // namespace aglist
