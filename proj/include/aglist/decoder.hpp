/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <vector>

#include "aglist/interpolation.hpp"

namespace aglist {

// Parameter selection by counting: W is the smallest weight with more
// module monomials below it than vanishing constraints, so a nonzero
// interpolation polynomial of weight < W exists; tau is the largest error
// count with m(n - tau) >= W, the agreement condition that forces the sent
// function to be a root. tau < 0 means the multiplicity gives no guarantee.
struct RadiusReport {
    int m = 0;
    long long W = 0;
    int tau = -1;
    int ell = 0;      // ceil(W/u), the Z-degree bound the decoder uses
    int ell_min = 0;  // floor((W-1)/u), the largest Z-degree forced by counting
    bool guaranteed() const { return tau >= 0; }
};
RadiusReport a_priori_radius(const Code& code, int m);

struct Candidate {
    std::vector<Fe> message;
    std::vector<Fe> codeword;
    int distance = 0;
};

struct DecodeOptions {
    std::optional<int> m;        // multiplicity; exactly one of m / tau
    std::optional<int> tau;      // target radius; picks the smallest m that guarantees it
    bool verify_only = false;    // skip the root search
    long long root_cap = 1ll << 20;  // largest q^k the exhaustive search accepts
    std::optional<int> max_list_distance;  // filter; defaults to tau in tau mode, n in m mode
};

struct DecodeResult {
    RadiusReport radius;
    InterpParams params;
    ZPoly Q;
    long long q_weight = 0;
    int applied_radius = 0;  // the distance filter actually used
    bool verify_only = false;
    std::vector<Candidate> list;  // sorted by (distance, message)
    CostCounter build_cost;
    CostCounter reduce_cost;
};

// All f in L(uQ) with Q(f) = 0, by exhaustive scan of the q^k message
// space. Throws when q^k exceeds the cap; use verify_root then.
std::vector<FunElem> root_find(const Code& code, const ZPoly& Q, long long cap = 1ll << 20);

// True iff Q(f) = 0 in the coordinate ring.
bool verify_root(const Curve& curve, const ZPoly& Q, const FunElem& f);

// Message coefficients of a function lying in the span of the message
// basis; throws if a term falls outside it.
std::vector<Fe> message_of_function(const Code& code, const FunElem& f);

// Interpolate, root-find, filter to codewords within the applied radius.
// Every listed codeword is re-verified against Q and the distance bound.
DecodeResult list_decode(const Code& code, const std::vector<Fe>& r, const DecodeOptions& opt);

}  // namespace aglist
