/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aglist/field.hpp"
#include "aglist/poly.hpp"

namespace aglist {

// Exponent tuple of a monomial in x_1..x_t.
using Mono = std::vector<std::uint32_t>;

struct Term {
    Mono e;
    Fe c;
    friend bool operator==(const Term& a, const Term& b) { return a.e == b.e && a.c == b.c; }
};

// Raw multivariate polynomial as a plain term list (file form, unreduced).
using TermList = std::vector<Term>;

inline Mono mono_add(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

// Weight of the zero element in pole-order computations.
inline constexpr long long kNegInfWeight = std::numeric_limits<long long>::min();

// Element of the coordinate ring in normal form: terms sorted ascending in
// the curve's monomial order, every monomial inside the footprint. Only
// Curve operations construct these; FunElem itself is immutable data.
class FunElem {
public:
    FunElem() = default;
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    // Leading (largest) term; only valid on nonzero elements.
    const Term& lead() const { return terms_.back(); }
    friend bool operator==(const FunElem& a, const FunElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FunElem& a, const FunElem& b) { return !(a == b); }

private:
    friend class Curve;
    std::vector<Term> terms_;
};

// One Apery basis element: b = pole order, L = its exponent tuple (first
// entry zero), y = the corresponding monomial as a ring element.
struct AperyEntry {
    long long b = 0;
    Mono L;
};

// Coordinate ring of a curve in standard form: GF(q)[x_1..x_t]/I presented by
// the reduced Groebner basis of I under the weighted order, with weight(x_i)
// equal to the pole order of x_i at the designated place.
//
// Construction validates the presentation: positive weights with gcd 1,
// leading monomials with first exponent zero, auto-reducedness, S-polynomial
// closure, and agreement between the footprint and the Apery set of the
// weight semigroup. Throws ValidationError listing every failure.
class Curve {
public:
    Curve(Field field, std::vector<long long> weights, std::vector<TermList> ideal_basis);

    const Field& field() const { return field_; }
    int t() const { return (int)weights_.size(); }
    const std::vector<long long>& weights() const { return weights_; }
    long long a1() const { return weights_[0]; }
    long long genus() const { return genus_; }
    const std::vector<TermList>& ideal_basis() const { return basis_; }
    const std::vector<AperyEntry>& apery() const { return apery_; }

    long long weight(const Mono& m) const;
    // Weighted reverse-lex comparison: positive if a is the larger monomial.
    // Ties in weight go to the tuple with the smaller entry at the first
    // differing coordinate.
    int cmp(const Mono& a, const Mono& b) const;

    bool footprint_contains(const Mono& m) const;
    // The unique footprint monomial of pole order w, if w is a pole order.
    std::optional<Mono> footprint_mono_of_weight(long long w) const;
    bool in_semigroup(long long w) const { return footprint_mono_of_weight(w).has_value(); }
    // Number of pole orders <= N, i.e. dim of the space of functions with
    // pole order at most N at the designated place.
    long long semigroup_dim(long long N) const;

    // Full multivariate division by the ideal basis. Deterministic: always
    // reduces the largest reducible monomial, scanning basis elements in
    // file order.
    FunElem normal_form(const TermList& input, CostCounter* cc = nullptr) const;

    FunElem zero_elem() const { return FunElem(); }
    FunElem one() const { return from_const(field_.one()); }
    FunElem from_const(Fe c) const;
    FunElem monomial_elem(const Mono& m, Fe c) const;  // reduces if off-footprint
    FunElem y(int j) const;                            // Apery basis monomial y_j
    FunElem x1_power(int i, Fe c) const;               // c * x_1^i

    FunElem add(const FunElem& a, const FunElem& b) const;
    FunElem sub(const FunElem& a, const FunElem& b) const;
    FunElem neg(const FunElem& a) const;
    FunElem mul(const FunElem& a, const FunElem& b, CostCounter* cc = nullptr) const;
    FunElem mul_scalar(const FunElem& a, Fe c, CostCounter* cc = nullptr) const;
    FunElem pow(const FunElem& a, unsigned n, CostCounter* cc = nullptr) const;

    // Pole order at the designated place: weight of the leading monomial.
    // Returns kNegInfWeight for the zero element.
    long long pole_order(const FunElem& a) const;

    // Free-module view over GF(q)[x_1]: component j collects the x_1^i y_j
    // coefficients. Returns a1 univariate polynomials.
    std::vector<UniPoly> to_modvec(const FunElem& a) const;
    FunElem from_modvec(const std::vector<UniPoly>& comps) const;

    Fe evaluate(const FunElem& a, const std::vector<Fe>& coords) const;
    Fe evaluate_terms(const TermList& terms, const std::vector<Fe>& coords) const;

    // True when every monomial involves x_1 only.
    bool is_univariate(const FunElem& a) const;

private:
    Field field_;
    std::vector<long long> weights_;
    std::vector<TermList> basis_;      // canonical: terms descending, leading first
    std::vector<Fe> basis_lc_inv_;
    std::vector<AperyEntry> apery_;
    std::map<Mono, int> tail_to_j_;    // footprint tail (e_2..e_t) -> Apery index
    long long genus_ = 0;

    FunElem make(std::vector<Term> sorted_terms) const;
    void canonicalize(TermList& terms) const;  // combine duplicates, drop zeros, sort ascending
};

}  // namespace aglist
