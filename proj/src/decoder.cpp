/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/decoder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace aglist {

RadiusReport a_priori_radius(const Code& code, int m) {
    if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
    const Curve& C = code.curve();
    const long long n = code.n();
    const long long u = code.u();
    const long long target = n * m * (m + 1) / 2;

    // Prefix counts of semigroup elements make each candidate W cheap.
    std::vector<long long> sdim;  // sdim[N] = #{h in H : h <= N}
    auto ensure = [&](long long N) {
        while ((long long)sdim.size() <= N) {
            long long v = sdim.empty() ? 0 : sdim.back();
            if (C.in_semigroup((long long)sdim.size())) ++v;
            sdim.push_back(v);
        }
    };
    long long W = 1;
    for (;; ++W) {
        long long count = 0;
        for (long long k = 0; k * u <= W - 1; ++k) {
            ensure(W - 1 - k * u);
            count += sdim[(size_t)(W - 1 - k * u)];
        }
        if (count > target) break;
    }

    RadiusReport r;
    r.m = m;
    r.W = W;
    // Largest tau with m(n - tau) >= W; may be negative.
    r.tau = (int)(n - (W + m - 1) / m);
    r.ell = (int)((W + u - 1) / u);
    r.ell_min = (int)((W - 1) / u);
    return r;
}

std::vector<FunElem> root_find(const Code& code, const ZPoly& Q, long long cap) {
    const Curve& C = code.curve();
    const long long q = C.field().q();
    const int k = code.k();
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > cap)
            throw std::domain_error("message space " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the enumeration cap; use verify mode");
    }
    std::vector<FunElem> roots;
    std::vector<Fe> msg((size_t)k, C.field().zero());
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (int s = 0; s < k; ++s) {
            msg[(size_t)s] = Fe{(uint32_t)(v % q)};
            v /= q;
        }
        FunElem f = code.message_function(msg);
        if (zpoly_eval(C, Q, f).is_zero()) roots.push_back(std::move(f));
    }
    return roots;
}

bool verify_root(const Curve& curve, const ZPoly& Q, const FunElem& f) {
    return zpoly_eval(curve, Q, f).is_zero();
}

std::vector<Fe> message_of_function(const Code& code, const FunElem& f) {
    const Curve& C = code.curve();
    std::map<Mono, size_t> index;
    for (size_t s = 0; s < code.basis().size(); ++s) index[code.basis()[s].lead().e] = s;
    std::vector<Fe> msg(code.basis().size(), C.field().zero());
    for (const Term& t : f.terms()) {
        auto it = index.find(t.e);
        if (it == index.end()) throw std::invalid_argument("function does not lie in the message space");
        msg[it->second] = t.c;
    }
    return msg;
}

DecodeResult list_decode(const Code& code, const std::vector<Fe>& r, const DecodeOptions& opt) {
    const Curve& C = code.curve();
    if ((int)r.size() != code.n()) throw std::invalid_argument("received word length != n");
    if (opt.m.has_value() == opt.tau.has_value())
        throw std::invalid_argument("exactly one of multiplicity and target radius must be given");

    DecodeResult res;
    if (opt.tau) {
        if (*opt.tau < 0) throw std::invalid_argument("target radius must be nonnegative");
        const int m_limit = 64;
        int m = 0;
        RadiusReport rad;
        for (m = 1; m <= m_limit; ++m) {
            rad = a_priori_radius(code, m);
            if (rad.tau >= *opt.tau) break;
        }
        if (m > m_limit)
            throw std::domain_error("no multiplicity up to " + std::to_string(m_limit) + " guarantees radius " + std::to_string(*opt.tau));
        res.radius = rad;
    } else {
        if (*opt.m < 1) throw std::invalid_argument("multiplicity must be at least 1");
        res.radius = a_priori_radius(code, *opt.m);
    }

    res.params.m = res.radius.m;
    res.params.ell = std::max(res.radius.ell, res.radius.m);
    InterpolationResult interp = interpolate(code, r, res.params);
    res.Q = std::move(interp.Q);
    res.q_weight = interp.weight;
    res.build_cost = interp.build_cost;
    res.reduce_cost = interp.reduce_cost;

    int radius = opt.max_list_distance ? *opt.max_list_distance : (opt.tau ? *opt.tau : code.n());
    res.applied_radius = radius;

    long long space = 1;
    bool enumerable = true;
    for (int i = 0; i < code.k() && enumerable; ++i) {
        space *= C.field().q();
        if (space > opt.root_cap) enumerable = false;
    }
    res.verify_only = opt.verify_only || !enumerable;
    if (res.verify_only) return res;

    for (const FunElem& f : root_find(code, res.Q, opt.root_cap)) {
        Candidate c;
        c.codeword = code.evaluate_at_places(f);
        c.distance = 0;
        for (size_t i = 0; i < c.codeword.size(); ++i)
            if (c.codeword[i] != r[i]) ++c.distance;
        if (c.distance > radius) continue;
        if (!verify_root(C, res.Q, f) || c.distance > res.applied_radius)
            throw std::logic_error("candidate fails the soundness re-check");
        c.message = message_of_function(code, f);
        res.list.push_back(std::move(c));
    }
    std::sort(res.list.begin(), res.list.end(), [](const Candidate& a, const Candidate& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        for (size_t i = 0; i < a.message.size(); ++i)
            if (a.message[i].code != b.message[i].code) return a.message[i].code < b.message[i].code;
        return false;
    });
    return res;
}

}  // namespace aglist
