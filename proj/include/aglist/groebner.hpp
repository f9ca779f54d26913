/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <vector>

#include "aglist/field.hpp"
#include "aglist/poly.hpp"

namespace aglist {

// Free-module term order over GF(q)[x]: a term x^d at position pos has
// weight d * xw + posw[pos]; larger weight wins, and on equal weight the
// higher position wins.
struct OrderSpec {
    long long xw = 1;
    std::vector<long long> posw;

    int positions() const { return (int)posw.size(); }
    long long term_weight(int pos, int deg) const { return (long long)deg * xw + posw[pos]; }
};

// A term of the free module: x^deg at component pos.
struct ModTerm {
    int pos = 0;
    int deg = 0;
    friend bool operator==(const ModTerm& a, const ModTerm& b) { return a.pos == b.pos && a.deg == b.deg; }
};

// -1, 0, +1 as a is below, equal to, above b.
int lo_cmp(const OrderSpec& ord, const ModTerm& a, const ModTerm& b);

// Element of the free module: one polynomial per position.
using ModVec = std::vector<UniPoly>;

bool mv_is_zero(const ModVec& v);
// Largest index of a nonzero component, -1 for the zero vector. Distinct
// from the leading position, which maximizes the order weight instead.
int mv_ind(const ModVec& v);
// Largest term of v under the order; nullopt for the zero vector.
std::optional<ModTerm> mv_lead(const OrderSpec& ord, const ModVec& v);
Fe mv_lead_coeff(const ModVec& v, const ModTerm& lt);

// Pair reduction: while two generators share a leading position, cancel the
// larger leading term against the smaller. The survivors have pairwise
// distinct leading positions and form a Groebner basis of the module they
// generate. Requires one generator per position with, after sorting by
// mv_ind, ind(g_i) = i exactly; such a set spans a full-rank module, so no
// element can vanish during reduction (that raises an internal error).
// Deterministic: the smallest clashing position is processed first, and the
// element with the largest leading term is reduced by the one with the
// smallest (first index on ties).
std::vector<ModVec> algorithm_g(const Field& F, const OrderSpec& ord, std::vector<ModVec> gens, CostCounter* cc = nullptr);

// Remainder of v modulo a basis with pairwise distinct leading positions:
// leading terms are cancelled while some basis lead divides the current
// lead. A zero remainder proves membership.
ModVec reduce_modvec(const Field& F, const OrderSpec& ord, const std::vector<ModVec>& basis, ModVec v, CostCounter* cc = nullptr);

// Smallest nonzero basis element under the order, scaled monic.
ModVec minimal_element(const Field& F, const OrderSpec& ord, const std::vector<ModVec>& basis);

// Dimension of the quotient of the free module by the span, as a vector
// space: the sum of the leading degrees. Requires one basis element per
// position with pairwise distinct leading positions.
long long quotient_dim(const OrderSpec& ord, const std::vector<ModVec>& basis);

// Linear-algebra oracle for the minimal monic element. Requires one
// generator per position with pairwise distinct ind values, the same shape
// the reduction algorithm takes. Rows are the shifts x^a * g_i up to a
// shift bound; combinations whose high terms cancel can need shifts above
// every generator lead, so the bound deepens until a certificate holds:
// the row space exhibits a lead per position whose degrees sum to the
// degree of the generator matrix determinant, which pins the span as the
// whole module. Returns the minimum if its lead weight is at most the cap
// (default: the smallest generator lead weight, which the minimum never
// exceeds), nullopt otherwise or when the matrix would exceed max_cells.
// Slow; meant for cross-checks on small instances.
std::optional<ModVec> brute_force_minimal(const Field& F, const OrderSpec& ord, const std::vector<ModVec>& gens, std::optional<long long> weight_cap = std::nullopt, std::size_t max_cells = 1000000);

}  // namespace aglist
