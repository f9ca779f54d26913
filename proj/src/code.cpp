/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "aglist/errors.hpp"

namespace aglist {

DivisorAssumptionReport check_divisor_assumption(const Curve& curve, const FunElem& f, const std::vector<Place>& places) {
    DivisorAssumptionReport rep;
    auto bad = [&](std::string msg) {
        rep.pass = false;
        rep.issues.push_back(std::move(msg));
    };
    if (f.is_zero()) {
        bad("f is zero");
        return rep;
    }
    if (!curve.is_univariate(f)) bad("f is not a polynomial in x_1 alone");
    const long long n = (long long)places.size();
    if (n == 0) bad("no evaluation places");
    if (curve.pole_order(f) != n) bad("pole order of f is " + std::to_string(curve.pole_order(f)) + ", expected n = " + std::to_string(n));
    std::set<std::vector<uint32_t>> coord_seen;
    for (size_t i = 0; i < places.size(); ++i) {
        const Place& pl = places[i];
        if ((int)pl.coords.size() != curve.t()) {
            bad("place " + std::to_string(i) + " has wrong coordinate count");
            continue;
        }
        std::vector<uint32_t> key;
        key.reserve(pl.coords.size());
        for (Fe c : pl.coords) key.push_back(c.code);
        if (!coord_seen.insert(key).second) bad("duplicate place at index " + std::to_string(i));
        bool on_curve = true;
        for (const TermList& rel : curve.ideal_basis())
            if (curve.evaluate_terms(rel, pl.coords) != curve.field().zero()) on_curve = false;
        if (!on_curve) bad("place " + std::to_string(i) + " does not lie on the curve");
        if (curve.evaluate(f, pl.coords) != curve.field().zero())
            bad("f does not vanish at place " + std::to_string(i));
        if (pl.lp < 1 || pl.lp > curve.t()) bad("place " + std::to_string(i) + " has local coordinate index out of range");
    }
    return rep;
}

Code::Code(CurvePtr curve, long long u, FunElem f, std::vector<Place> places)
    : curve_(std::move(curve)), u_(u), f_(std::move(f)), places_(std::move(places)) {
    if (!curve_) throw ValidationError("code requires a curve");
    const Curve& C = *curve_;
    const Field& F = C.field();
    const long long n = (long long)places_.size();
    const long long g = C.genus();
    std::vector<std::string> issues;
    if (u_ < 2 * g - 1) issues.push_back("u = " + std::to_string(u_) + " is below 2g - 1 = " + std::to_string(2 * g - 1));
    if (u_ >= n) issues.push_back("u = " + std::to_string(u_) + " is not below n = " + std::to_string(n));
    DivisorAssumptionReport rep = check_divisor_assumption(C, f_, places_);
    for (auto& s : rep.issues) issues.push_back(s);
    if (!issues.empty()) throw ValidationError(issues);

    // Message basis: one footprint monomial per semigroup element <= u.
    for (long long w = 0; w <= u_; ++w) {
        auto m = C.footprint_mono_of_weight(w);
        if (m) basis_.push_back(C.monomial_elem(*m, F.one()));
    }

    // Interpolation basis: scan footprint monomials by increasing pole order,
    // keep those whose evaluation vectors extend the span, until rank n.
    // Pole orders stay below n + 2g since the weights <= n + 2g - 1 already
    // give n independent vectors (n + g semigroup elements, g relations).
    std::vector<std::vector<Fe>> echelon;  // reduced rows
    std::vector<int> pivot_of_row;
    auto eval_vec = [&](const FunElem& a) {
        std::vector<Fe> v(places_.size());
        for (size_t i = 0; i < places_.size(); ++i) v[i] = C.evaluate(a, places_[i].coords);
        return v;
    };
    for (long long w = 0; w <= n + 2 * g - 1 && (long long)psi_.size() < n; ++w) {
        auto m = C.footprint_mono_of_weight(w);
        if (!m) continue;
        FunElem cand = C.monomial_elem(*m, F.one());
        std::vector<Fe> v = eval_vec(cand);
        // Reduce against the echelon rows.
        for (size_t r = 0; r < echelon.size(); ++r) {
            Fe c = v[pivot_of_row[r]];
            if (c == F.zero()) continue;
            for (size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(c, echelon[r][i]));
        }
        int piv = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != F.zero()) { piv = (int)i; break; }
        if (piv < 0) continue;
        Fe inv = F.inv(v[piv]);
        for (auto& c : v) c = F.mul(c, inv);
        echelon.push_back(v);
        pivot_of_row.push_back(piv);
        psi_.push_back(std::move(cand));
    }
    if ((long long)psi_.size() != n)
        throw ValidationError("interpolation basis construction failed: rank " + std::to_string(psi_.size()) + " of " + std::to_string(n));

    // Invert M[i][j] = psi_j(P_i) once; compute_hr is then a product.
    std::vector<std::vector<Fe>> M(n, std::vector<Fe>(2 * n, F.zero()));
    for (long long j = 0; j < n; ++j) {
        std::vector<Fe> col = eval_vec(psi_[(size_t)j]);
        for (long long i = 0; i < n; ++i) M[(size_t)i][(size_t)j] = col[(size_t)i];
    }
    for (long long i = 0; i < n; ++i) M[(size_t)i][(size_t)(n + i)] = F.one();
    for (long long c = 0; c < n; ++c) {
        long long pr = -1;
        for (long long r = c; r < n; ++r)
            if (M[(size_t)r][(size_t)c] != F.zero()) { pr = r; break; }
        if (pr < 0) throw ValidationError("evaluation matrix is singular");
        std::swap(M[(size_t)c], M[(size_t)pr]);
        Fe inv = F.inv(M[(size_t)c][(size_t)c]);
        for (auto& x : M[(size_t)c]) x = F.mul(x, inv);
        for (long long r = 0; r < n; ++r) {
            if (r == c) continue;
            Fe fac = M[(size_t)r][(size_t)c];
            if (fac == F.zero()) continue;
            for (long long k = c; k < 2 * n; ++k)
                M[(size_t)r][(size_t)k] = F.sub(M[(size_t)r][(size_t)k], F.mul(fac, M[(size_t)c][(size_t)k]));
        }
    }
    psi_eval_inv_.assign((size_t)n, std::vector<Fe>((size_t)n, F.zero()));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) psi_eval_inv_[(size_t)i][(size_t)j] = M[(size_t)i][(size_t)(n + j)];
}

FunElem Code::message_function(const std::vector<Fe>& msg) const {
    if (msg.size() != basis_.size())
        throw std::invalid_argument("message length " + std::to_string(msg.size()) + " != k = " + std::to_string(basis_.size()));
    const Curve& C = *curve_;
    FunElem a = C.zero_elem();
    for (size_t i = 0; i < msg.size(); ++i)
        if (msg[i] != C.field().zero()) a = C.add(a, C.mul_scalar(basis_[i], msg[i]));
    return a;
}

std::vector<Fe> Code::evaluate_at_places(const FunElem& a) const {
    std::vector<Fe> out(places_.size());
    for (size_t i = 0; i < places_.size(); ++i) out[i] = curve_->evaluate(a, places_[i].coords);
    return out;
}

std::vector<Fe> Code::encode(const std::vector<Fe>& msg) const {
    return evaluate_at_places(message_function(msg));
}

FunElem Code::compute_hr(const std::vector<Fe>& r) const {
    const Curve& C = *curve_;
    const Field& F = C.field();
    if ((int)r.size() != n()) throw std::invalid_argument("word length != n");
    FunElem h = C.zero_elem();
    for (size_t j = 0; j < psi_.size(); ++j) {
        Fe c = F.zero();
        for (size_t i = 0; i < r.size(); ++i) c = F.add(c, F.mul(psi_eval_inv_[j][i], r[i]));
        if (c != F.zero()) h = C.add(h, C.mul_scalar(psi_[j], c));
    }
    return h;
}

long long Code::dim_ldq(long long j, long long b) const {
    // Under the divisor assumption the space equals f^j times the functions
    // of pole order <= b - j n, whose dimension is a semigroup count.
    return curve_->semigroup_dim(b - j * (long long)n());
}

}  // namespace aglist
