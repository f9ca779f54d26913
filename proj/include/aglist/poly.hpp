/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <vector>

#include "aglist/field.hpp"

namespace aglist {

// Dense univariate polynomial over a Field. Invariant: the coefficient
// vector is empty (the zero polynomial) or its last entry is nonzero.
// All operations take the field explicitly; UniPoly itself is plain data.
class UniPoly {
public:
    UniPoly() = default;
    static UniPoly constant(Fe c) {
        UniPoly r;
        if (c.code != 0) r.c_.push_back(c);
        return r;
    }
    static UniPoly monomial(Fe c, int deg) {
        UniPoly r;
        if (c.code != 0) {
            r.c_.assign(deg + 1, Fe{0});
            r.c_.back() = c;
        }
        return r;
    }
    static UniPoly from_coeffs(std::vector<Fe> coeffs) {
        UniPoly r;
        r.c_ = std::move(coeffs);
        r.trim();
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return (int)c_.size() - 1; }  // -1 for zero
    Fe coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Fe{0}; }
    Fe lc() const { return c_.empty() ? Fe{0} : c_.back(); }
    const std::vector<Fe>& coeffs() const { return c_; }

    void set_coeff(int i, Fe v) {
        if (i >= (int)c_.size()) {
            if (v.code == 0) return;
            c_.resize(i + 1, Fe{0});
        }
        c_[i] = v;
        trim();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    void trim() {
        while (!c_.empty() && c_.back().code == 0) c_.pop_back();
    }

private:
    std::vector<Fe> c_;
};

inline UniPoly up_add(const Field& F, const UniPoly& a, const UniPoly& b) {
    std::vector<Fe> r(std::max(a.coeffs().size(), b.coeffs().size()), Fe{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff((int)i), b.coeff((int)i));
    return UniPoly::from_coeffs(std::move(r));
}

inline UniPoly up_scale(const Field& F, Fe c, const UniPoly& a, CostCounter* cc = nullptr) {
    if (c.code == 0) return UniPoly();
    std::vector<Fe> r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.mul(c, a.coeffs()[i], a.coeffs()[i].code != 0 ? cc : nullptr);
    return UniPoly::from_coeffs(std::move(r));
}

inline UniPoly up_mul(const Field& F, const UniPoly& a, const UniPoly& b, CostCounter* cc = nullptr) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Fe> r(a.coeffs().size() + b.coeffs().size() - 1, Fe{0});
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].code == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            if (b.coeffs()[j].code == 0) continue;
            r[i + j] = F.add(r[i + j], F.mul(a.coeffs()[i], b.coeffs()[j], cc));
        }
    }
    return UniPoly::from_coeffs(std::move(r));
}

// a -= c * x^shift * b, the reduction step of the module Groebner pass.
// Multiplications are counted only for nonzero coefficients of b.
inline void up_sub_scaled_shift(const Field& F, UniPoly& a, Fe c, int shift, const UniPoly& b, CostCounter* cc = nullptr) {
    if (c.code == 0 || b.is_zero()) return;
    std::vector<Fe> r = a.coeffs();
    if (r.size() < b.coeffs().size() + shift) r.resize(b.coeffs().size() + shift, Fe{0});
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        Fe bi = b.coeffs()[i];
        if (bi.code == 0) continue;
        r[i + shift] = F.sub(r[i + shift], F.mul(c, bi, cc));
    }
    a = UniPoly::from_coeffs(std::move(r));
}

}  // namespace aglist
