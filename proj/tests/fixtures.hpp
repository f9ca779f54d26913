/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <memory>
#include <random>
#include <vector>

#include "aglist/curve.hpp"
#include "aglist/curve_io.hpp"

namespace aglist::testfix {

inline Term term_of(Mono e, uint32_t c) { return Term{std::move(e), Fe{c}}; }

// GF(8) with modulus x^3 + x + 1; x1,x2,x3 of pole orders 3,5,7 cut out by
// x2^2 + x3 x1, x3 x2 + x1^4 + x2, x3^2 + x2 x1^3 + x3. Genus 3.
inline std::shared_ptr<const Curve> klein_curve() {
    Field F(FieldSpec{2, 3, {1, 1, 0, 1}});
    std::vector<TermList> ideal = {
        {term_of({0, 2, 0}, 1), term_of({1, 0, 1}, 1)},
        {term_of({0, 1, 1}, 1), term_of({4, 0, 0}, 1), term_of({0, 1, 0}, 1)},
        {term_of({0, 0, 2}, 1), term_of({3, 1, 0}, 1), term_of({0, 0, 1}, 1)},
    };
    return std::make_shared<const Curve>(F, std::vector<long long>{3, 5, 7}, ideal);
}

// GF(4) with modulus x^2 + x + 1; x1,x2 of pole orders 2,3 cut out by
// x2^2 + x2 + x1^3. Genus 1.
inline std::shared_ptr<const Curve> hermitian_curve() {
    Field F(FieldSpec{2, 2, {1, 1, 1}});
    std::vector<TermList> ideal = {
        {term_of({0, 2}, 1), term_of({0, 1}, 1), term_of({3, 0}, 1)},
    };
    return std::make_shared<const Curve>(F, std::vector<long long>{2, 3}, ideal);
}

inline CurveFile load_klein() { return load_curve_file("curves/klein.json"); }
inline CurveFile load_hermitian() { return load_curve_file("curves/hermitian4.json"); }

inline std::vector<Fe> random_word(const Field& F, int n, std::mt19937_64& rng) {
    std::vector<Fe> w((size_t)n);
    for (int i = 0; i < n; ++i) w[(size_t)i] = F.elem((uint32_t)(rng() % F.q()));
    return w;
}

}  // namespace aglist::testfix
