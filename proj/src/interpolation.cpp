/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/interpolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "aglist/local.hpp"

namespace aglist {

long long zpoly_weight(const Code& code, const ZPoly& p) {
    const Curve& C = code.curve();
    long long best = kNegInfWeight;
    for (int k = 0; k < (int)p.z.size(); ++k) {
        if (p.z[k].is_zero()) continue;
        long long w = C.pole_order(p.z[k]) + (long long)k * code.u();
        best = std::max(best, w);
    }
    return best;
}

OrderSpec interpolation_order(const Code& code, int ell) {
    const Curve& C = code.curve();
    if (ell < 0) throw std::invalid_argument("negative Z-degree bound");
    OrderSpec ord;
    ord.xw = C.a1();
    ord.posw.resize((size_t)C.a1() * (ell + 1));
    for (int k = 0; k <= ell; ++k)
        for (int j = 0; j < C.a1(); ++j)
            ord.posw[(size_t)(j + k * C.a1())] = C.apery()[j].b + (long long)k * code.u();
    return ord;
}

ModVec zpoly_to_modvec(const Code& code, const ZPoly& p, int ell) {
    const Curve& C = code.curve();
    if (p.zdeg() > ell) throw std::invalid_argument("Z-degree exceeds the bound");
    ModVec v((size_t)C.a1() * (ell + 1));
    for (int k = 0; k <= p.zdeg(); ++k) {
        if (p.z[k].is_zero()) continue;
        std::vector<UniPoly> comps = C.to_modvec(p.z[k]);
        for (int j = 0; j < C.a1(); ++j) v[(size_t)(j + k * C.a1())] = std::move(comps[(size_t)j]);
    }
    return v;
}

ZPoly modvec_to_zpoly(const Code& code, const ModVec& v) {
    const Curve& C = code.curve();
    if (v.size() % C.a1() != 0) throw std::invalid_argument("component count is not a multiple of the module rank");
    int levels = (int)(v.size() / C.a1());
    ZPoly p;
    p.z.assign(levels, C.zero_elem());
    for (int k = 0; k < levels; ++k) {
        std::vector<UniPoly> comps(v.begin() + (long)k * C.a1(), v.begin() + (long)(k + 1) * C.a1());
        p.z[(size_t)k] = C.from_modvec(comps);
    }
    return p;
}

std::vector<std::vector<Fe>> binomial_table(const Field& F, int nmax) {
    std::vector<std::vector<Fe>> t(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        t[n].assign(n + 1, F.zero());
        t[n][0] = F.one();
        t[n][n] = F.one();
        for (int k = 1; k < n; ++k) t[n][k] = F.add(t[n - 1][k - 1], t[n - 1][k]);
    }
    return t;
}

std::vector<ModVec> build_generators(const Code& code, const FunElem& hr, int m, int ell, CostCounter* cc) {
    const Curve& C = code.curve();
    if (m < 0) throw std::invalid_argument("multiplicity must be nonnegative");
    if (ell < m) throw std::invalid_argument("Z-degree bound below the multiplicity");

    // Memoized powers serve every j.
    std::vector<FunElem> fpow(m + 1), hpow(m + 1);
    fpow[0] = C.one();
    hpow[0] = C.one();
    FunElem hneg = C.neg(hr);
    for (int i = 1; i <= m; ++i) {
        fpow[i] = C.mul(fpow[i - 1], code.f(), cc);
        hpow[i] = C.mul(hpow[i - 1], hneg, cc);
    }
    auto binom = binomial_table(C.field(), m);

    std::vector<ModVec> gens;
    gens.reserve((size_t)C.a1() * (ell + 1));
    for (int i = 0; i <= m; ++i) {
        // (Z - h)^{m-i} f^i y_j: coefficient of Z^c is C(m-i,c) (-h)^{m-i-c} f^i.
        std::vector<FunElem> base(m - i + 1);
        for (int c = 0; c <= m - i; ++c)
            base[c] = C.mul(C.mul_scalar(hpow[(size_t)(m - i - c)], binom[m - i][c], cc), fpow[(size_t)i], cc);
        for (int j = 0; j < C.a1(); ++j) {
            ZPoly p;
            p.z.assign((size_t)(m - i + 1), C.zero_elem());
            for (int c = 0; c <= m - i; ++c) p.z[(size_t)c] = C.mul(base[(size_t)c], C.y(j), cc);
            gens.push_back(zpoly_to_modvec(code, p, ell));
        }
    }
    for (int k = 1; k <= ell - m; ++k) {
        for (int j = 0; j < C.a1(); ++j) {
            ZPoly p;
            p.z.assign((size_t)(k + m + 1), C.zero_elem());
            for (int c = 0; c <= m; ++c)
                p.z[(size_t)(k + c)] = C.mul(C.mul_scalar(hpow[(size_t)(m - c)], binom[m][c], cc), C.y(j), cc);
            gens.push_back(zpoly_to_modvec(code, p, ell));
        }
    }

    std::sort(gens.begin(), gens.end(), [](const ModVec& a, const ModVec& b) { return mv_ind(a) < mv_ind(b); });
    for (size_t i = 0; i < gens.size(); ++i)
        if (mv_ind(gens[i]) != (int)i)
            throw std::logic_error("generator top positions collide; the construction is broken");
    return gens;
}

InterpolationResult interpolate(const Code& code, const std::vector<Fe>& r, const InterpParams& params) {
    if (params.m < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (params.ell < params.m) throw std::invalid_argument("Z-degree bound below the multiplicity");
    if ((int)r.size() != code.n()) throw std::invalid_argument("received word length != n");

    InterpolationResult res;
    res.params = params;
    FunElem hr = code.compute_hr(r);
    std::vector<ModVec> gens = build_generators(code, hr, params.m, params.ell, &res.build_cost);
    OrderSpec ord = interpolation_order(code, params.ell);
    res.basis = algorithm_g(code.curve().field(), ord, std::move(gens), &res.reduce_cost);
    ModVec qv = minimal_element(code.curve().field(), ord, res.basis);
    res.Q = modvec_to_zpoly(code, qv);
    res.weight = zpoly_weight(code, res.Q);
    return res;
}

bool verify_multiplicity(const Curve& curve, const ZPoly& Q, const Place& P, Fe ri, int m) {
    if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
    int ell = Q.zdeg();
    if (ell < 0) throw std::invalid_argument("zero polynomial has no multiplicity");
    const Field& F = curve.field();

    // Shift: Q(Z + r) = sum_j a_j Z^j with a_j = sum_{k>=j} C(k,j) r^{k-j} z_k.
    auto binom = binomial_table(F, ell);
    std::vector<FunElem> alpha((size_t)std::min(m, ell + 1), curve.zero_elem());
    for (int j = 0; j < (int)alpha.size(); ++j) {
        FunElem acc = curve.zero_elem();
        Fe rp = F.one();
        for (int k = j; k <= ell; ++k) {
            Fe c = F.mul(binom[k][j], rp);
            if (c != F.zero() && !Q.z[(size_t)k].is_zero()) acc = curve.add(acc, curve.mul_scalar(Q.z[(size_t)k], c));
            rp = F.mul(rp, ri);
        }
        alpha[(size_t)j] = std::move(acc);
    }

    int prec = m + ell + 2;
    const int prec_cap = std::max(prec, 4 * (m + ell));
    for (;;) {
        PlaceExpansion expn = expand_coordinates(curve, P, prec);
        bool unresolved = false;
        for (int j = 0; j < (int)alpha.size(); ++j) {
            int needed = m - j;
            if (alpha[(size_t)j].is_zero()) continue;
            LocalSeries s = expand_function(curve, alpha[(size_t)j], expn);
            int val = -1;
            for (int i = 0; i < s.prec(); ++i)
                if (s.c[(size_t)i] != F.zero()) { val = i; break; }
            if (val >= 0) {
                if (val < needed) return false;
            } else if (prec < needed) {
                unresolved = true;  // all computed coefficients vanish but too few were computed
            }
        }
        if (!unresolved) return true;
        if (prec >= prec_cap) throw std::runtime_error("local precision cap reached without resolving a valuation");
        prec = std::min(2 * prec, prec_cap);
    }
}

FunElem zpoly_eval(const Curve& curve, const ZPoly& Q, const FunElem& f, CostCounter* cc) {
    int d = Q.zdeg();
    if (d < 0) return curve.zero_elem();
    FunElem acc = Q.z[(size_t)d];
    for (int k = d - 1; k >= 0; --k) acc = curve.add(curve.mul(acc, f, cc), Q.z[(size_t)k]);
    return acc;
}

}  // namespace aglist
