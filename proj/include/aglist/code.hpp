/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aglist/curve.hpp"
#include "aglist/local.hpp"

namespace aglist {

using CurvePtr = std::shared_ptr<const Curve>;

// Report of the divisor assumption behind the generator construction:
// f must lie in GF(q)[x_1], vanish at every evaluation place, and have pole
// order exactly n, so that its zero divisor equals the sum of the places.
struct DivisorAssumptionReport {
    bool pass = true;
    std::vector<std::string> issues;
};
DivisorAssumptionReport check_divisor_assumption(const Curve& curve, const FunElem& f, const std::vector<Place>& places);

// One-point evaluation code: codewords are evaluations at the places of all
// functions with pole order at most u at the designated place.
class Code {
public:
    // Validates 2g-1 <= u < n and the divisor assumption for f.
    Code(CurvePtr curve, long long u, FunElem f, std::vector<Place> places);

    const Curve& curve() const { return *curve_; }
    CurvePtr curve_ptr() const { return curve_; }
    long long u() const { return u_; }
    int n() const { return (int)places_.size(); }
    int k() const { return (int)basis_.size(); }
    long long goppa_distance() const { return (long long)n() - u_; }
    const FunElem& f() const { return f_; }
    const std::vector<Place>& places() const { return places_; }
    // Message basis: footprint monomials of pole order <= u, increasing order.
    const std::vector<FunElem>& basis() const { return basis_; }
    // Interpolation basis psi_1..psi_n: greedily chosen footprint monomials
    // whose evaluation vectors are independent; pole orders <= n + 2g - 1.
    const std::vector<FunElem>& psi() const { return psi_; }

    std::vector<Fe> encode(const std::vector<Fe>& msg) const;
    FunElem message_function(const std::vector<Fe>& msg) const;
    std::vector<Fe> evaluate_at_places(const FunElem& a) const;

    // The unique combination h of psi_1..psi_n with h(P_i) = r_i. Its pole
    // order is at most n + 2g - 1.
    FunElem compute_hr(const std::vector<Fe>& r) const;

    // dim of the function space with pole order <= b that vanishes on every
    // place with multiplicity >= j (equals dim L(bQ - j n Q) under the
    // divisor assumption).
    long long dim_ldq(long long j, long long b) const;

private:
    CurvePtr curve_;
    long long u_ = 0;
    FunElem f_;
    std::vector<Place> places_;
    std::vector<FunElem> basis_;
    std::vector<FunElem> psi_;
    std::vector<std::vector<Fe>> psi_eval_inv_;  // inverse of M[i][j] = psi_j(P_i)
};

}  // namespace aglist
