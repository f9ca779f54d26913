/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include <doctest.h>

#include "aglist/errors.hpp"
#include "fixtures.hpp"

using namespace aglist;
using namespace aglist::testfix;

TEST_CASE("klein presentation: weights, genus, gaps, module basis") {
    auto C = klein_curve();
    CHECK(C->a1() == 3);
    CHECK(C->genus() == 3);
    CHECK(C->t() == 3);
    // Gap sequence 1, 2, 4; everything from 5 on is a pole order.
    CHECK(!C->in_semigroup(1));
    CHECK(!C->in_semigroup(2));
    CHECK(C->in_semigroup(3));
    CHECK(!C->in_semigroup(4));
    for (long long w = 5; w <= 30; ++w) CHECK(C->in_semigroup(w));
    // Minimal pole orders per residue class mod 3: 0, 7, 5.
    REQUIRE(C->apery().size() == 3);
    CHECK(C->apery()[0].b == 0);
    CHECK(C->apery()[1].b == 7);
    CHECK(C->apery()[2].b == 5);
    CHECK(C->y(0) == C->one());
    CHECK(C->y(1) == C->monomial_elem({0, 0, 1}, Fe{1}));
    CHECK(C->y(2) == C->monomial_elem({0, 1, 0}, Fe{1}));
}

TEST_CASE("hermitian presentation: weights, genus, gaps, module basis") {
    auto C = hermitian_curve();
    CHECK(C->a1() == 2);
    CHECK(C->genus() == 1);
    CHECK(!C->in_semigroup(1));
    for (long long w = 2; w <= 20; ++w) CHECK(C->in_semigroup(w));
    REQUIRE(C->apery().size() == 2);
    CHECK(C->apery()[0].b == 0);
    CHECK(C->apery()[1].b == 3);
}

TEST_CASE("klein normal forms of the defining relations") {
    auto C = klein_curve();
    FunElem x1 = C->monomial_elem({1, 0, 0}, Fe{1});
    FunElem x2 = C->monomial_elem({0, 1, 0}, Fe{1});
    FunElem x3 = C->monomial_elem({0, 0, 1}, Fe{1});
    CHECK(C->mul(x2, x2) == C->mul(x3, x1));
    CHECK(C->mul(x3, x2) == C->add(C->monomial_elem({4, 0, 0}, Fe{1}), x2));
    CHECK(C->mul(x3, x3) == C->add(C->mul(x2, C->monomial_elem({3, 0, 0}, Fe{1})), x3));
}

TEST_CASE("hermitian normal form of the defining relation") {
    auto C = hermitian_curve();
    FunElem x1 = C->monomial_elem({1, 0}, Fe{1});
    FunElem x2 = C->monomial_elem({0, 1}, Fe{1});
    CHECK(C->mul(x2, x2) == C->add(x2, C->pow(x1, 3)));
}

TEST_CASE("pole orders add under multiplication") {
    for (auto C : {klein_curve(), hermitian_curve()}) {
        uint64_t state = 99;
        auto next = [&]() { state = state * 6364136223846793005ull + 1442695040888963407ull; return (uint32_t)(state >> 33); };
        auto rand_elem = [&]() {
            TermList terms;
            int t = C->t();
            for (int i = 0; i < 4; ++i) {
                Mono e((size_t)t, 0);
                for (int v = 0; v < t; ++v) e[(size_t)v] = next() % 4;
                terms.push_back(Term{e, Fe{next() % C->field().q()}});
            }
            return C->normal_form(terms);
        };
        for (int trial = 0; trial < 40; ++trial) {
            FunElem a = rand_elem(), b = rand_elem(), c = rand_elem();
            if (!a.is_zero() && !b.is_zero())
                CHECK(C->pole_order(C->mul(a, b)) == C->pole_order(a) + C->pole_order(b));
            CHECK(C->mul(a, b) == C->mul(b, a));
            CHECK(C->mul(C->mul(a, b), c) == C->mul(a, C->mul(b, c)));
            CHECK(C->mul(a, C->add(b, c)) == C->add(C->mul(a, b), C->mul(a, c)));
        }
    }
}

TEST_CASE("semigroup dimension counts pole orders") {
    auto C = klein_curve();
    CHECK(C->semigroup_dim(-1) == 0);
    CHECK(C->semigroup_dim(0) == 1);
    CHECK(C->semigroup_dim(4) == 2);   // 0, 3
    CHECK(C->semigroup_dim(7) == 5);   // 0, 3, 5, 6, 7
    CHECK(C->semigroup_dim(12) == 10);
    // Beyond 2g - 1 every integer is a pole order: dim(N) = N + 1 - g.
    for (long long N = 5; N <= 40; ++N) CHECK(C->semigroup_dim(N) == N + 1 - 3);
}

TEST_CASE("footprint monomial of a weight is unique and correct") {
    auto C = klein_curve();
    auto m10 = C->footprint_mono_of_weight(10);
    REQUIRE(m10.has_value());
    CHECK(*m10 == Mono{1, 0, 1});  // x1 x3 of weight 3 + 7
    CHECK(C->weight(*m10) == 10);
    CHECK(!C->footprint_mono_of_weight(4).has_value());
    CHECK(!C->footprint_mono_of_weight(1).has_value());
    CHECK(*C->footprint_mono_of_weight(0) == Mono{0, 0, 0});
}

TEST_CASE("monomial order: weight first, then smaller entry at the first difference") {
    auto C = klein_curve();
    CHECK(C->cmp({0, 2, 0}, {1, 0, 1}) > 0);  // both weight 10
    CHECK(C->cmp({0, 1, 1}, {4, 0, 0}) > 0);  // both weight 12
    CHECK(C->cmp({1, 0, 0}, {0, 1, 0}) < 0);  // 3 < 5
    CHECK(C->cmp({2, 0, 0}, {2, 0, 0}) == 0);
}

TEST_CASE("module view round-trips") {
    auto C = klein_curve();
    FunElem a = C->normal_form({term_of({2, 0, 1}, 3), term_of({0, 1, 0}, 5), term_of({4, 0, 0}, 1)});
    auto comps = C->to_modvec(a);
    REQUIRE(comps.size() == 3);
    CHECK(C->from_modvec(comps) == a);
    CHECK(C->from_modvec(C->to_modvec(C->zero_elem())) == C->zero_elem());
}

TEST_CASE("evaluation respects the defining relations") {
    auto C = hermitian_curve();
    const Field& F = C->field();
    FunElem rel = C->normal_form({term_of({0, 2}, 1), term_of({0, 1}, 1), term_of({3, 0}, 1)});
    CHECK(rel.is_zero());  // the relation reduces to zero in the ring
    // On-curve points satisfy x2^2 + x2 + x1^3 = 0 under term evaluation.
    TermList raw = {term_of({0, 2}, 1), term_of({0, 1}, 1), term_of({3, 0}, 1)};
    CHECK(C->evaluate_terms(raw, {F.elem(1), F.elem(2)}) == F.zero());
    CHECK(C->evaluate_terms(raw, {F.elem(1), F.elem(1)}) != F.zero());
}

TEST_CASE("invalid presentations are rejected") {
    Field F8(FieldSpec{2, 3, {1, 1, 0, 1}});
    // Dropping a relation breaks closure under S-polynomials.
    CHECK_THROWS_AS(Curve(F8, {3, 5, 7},
                          {{term_of({0, 2, 0}, 1), term_of({1, 0, 1}, 1)},
                           {term_of({0, 1, 1}, 1), term_of({4, 0, 0}, 1), term_of({0, 1, 0}, 1)}}),
                    ValidationError);
    // Weights with a common factor cannot present a semigroup with gcd 1.
    Field F4(FieldSpec{2, 2, {1, 1, 1}});
    CHECK_THROWS_AS(Curve(F4, {2, 4}, {{term_of({0, 2}, 1), term_of({0, 1}, 1), term_of({3, 0}, 1)}}), ValidationError);
    // Swapped weights put the leading monomial on a pure power of x1.
    CHECK_THROWS_AS(Curve(F4, {3, 2}, {{term_of({0, 2}, 1), term_of({0, 1}, 1), term_of({3, 0}, 1)}}), ValidationError);
}

TEST_CASE("is_univariate detects pure x1 elements") {
    auto C = klein_curve();
    CHECK(C->is_univariate(C->normal_form({term_of({7, 0, 0}, 1), term_of({0, 0, 0}, 1)})));
    CHECK(!C->is_univariate(C->normal_form({term_of({0, 1, 0}, 1)})));
    CHECK(C->is_univariate(C->zero_elem()));
}
