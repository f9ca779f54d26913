/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/curve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "aglist/errors.hpp"

namespace aglist {

namespace {

std::string mono_str(const Mono& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

// Apery set of the numerical semigroup generated by `weights`: b[r] is the
// least semigroup element congruent to r mod a1. Shortest paths on the
// residue graph with edge lengths a_2..a_t; a1 itself never helps because it
// fixes the residue while increasing the value.
std::vector<long long> apery_values(const std::vector<long long>& weights) {
    long long a1 = weights[0];
    std::vector<long long> dist(a1, -1);
    dist[0] = 0;
    using Node = std::pair<long long, long long>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [v, r] = pq.top();
        pq.pop();
        if (dist[r] >= 0 && v > dist[r]) continue;
        for (std::size_t i = 1; i < weights.size(); ++i) {
            long long nv = v + weights[i];
            long long nr = nv % a1;
            if (dist[nr] < 0 || nv < dist[nr]) {
                dist[nr] = nv;
                pq.push({nv, nr});
            }
        }
    }
    return dist;
}

}  // namespace

long long Curve::weight(const Mono& m) const {
    long long w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += (long long)m[i] * weights_[i];
    return w;
}

int Curve::cmp(const Mono& a, const Mono& b) const {
    long long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

void Curve::canonicalize(TermList& terms) const {
    std::sort(terms.begin(), terms.end(), [this](const Term& x, const Term& y) { return cmp(x.e, y.e) < 0; });
    TermList out;
    for (const auto& tm : terms) {
        if (!out.empty() && out.back().e == tm.e) {
            out.back().c = field_.add(out.back().c, tm.c);
        } else {
            out.push_back(tm);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& tm) { return tm.c.code == 0; }), out.end());
    terms = std::move(out);
}

Curve::Curve(Field field, std::vector<long long> weights, std::vector<TermList> ideal_basis)
    : field_(std::move(field)), weights_(std::move(weights)) {
    std::vector<std::string> issues;
    const int t = (int)weights_.size();
    if (t < 1) issues.push_back("weights: at least one weight required");
    for (int i = 0; i < t; ++i)
        if (weights_[i] <= 0) issues.push_back("weights[" + std::to_string(i) + "]: must be positive");
    if (!issues.empty()) throw ValidationError(issues);
    long long g = 0;
    for (long long w : weights_) g = std::gcd(g, w);
    if (g != 1) issues.push_back("weights: gcd must be 1, got " + std::to_string(g));

    // Canonicalize the basis: combined terms, descending order, leading first.
    basis_.resize(ideal_basis.size());
    for (std::size_t i = 0; i < ideal_basis.size(); ++i) {
        TermList tl = ideal_basis[i];
        for (const auto& tm : tl) {
            if ((int)tm.e.size() != t)
                issues.push_back("ideal_basis[" + std::to_string(i) + "]: exponent tuple of length " + std::to_string(tm.e.size()) + ", expected " + std::to_string(t));
        }
        if (!issues.empty()) throw ValidationError(issues);
        canonicalize(tl);
        std::reverse(tl.begin(), tl.end());
        if (tl.empty()) {
            issues.push_back("ideal_basis[" + std::to_string(i) + "]: zero polynomial");
            continue;
        }
        basis_[i] = std::move(tl);
    }
    if (!issues.empty()) throw ValidationError(issues);

    basis_lc_inv_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Mono& lm = basis_[i][0].e;
        if (lm[0] != 0)
            issues.push_back("ideal_basis[" + std::to_string(i) + "]: leading monomial " + mono_str(lm) + " has nonzero x1 exponent (not standard form)");
        basis_lc_inv_[i] = field_.inv(basis_[i][0].c);
    }

    // Auto-reducedness: no monomial of any basis element is divisible by the
    // leading monomial of another, and tails are irreducible by all leads.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t k = 0; k < basis_[i].size(); ++k) {
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j && k == 0) continue;
                if (mono_divides(basis_[j][0].e, basis_[i][k].e))
                    issues.push_back("ideal_basis[" + std::to_string(i) + "]: monomial " + mono_str(basis_[i][k].e) +
                                     " is divisible by the leading monomial of ideal_basis[" + std::to_string(j) + "] (basis not auto-reduced)");
            }
        }
    }
    if (!issues.empty()) throw ValidationError(issues);

    // Footprint tails: exponent tuples in x_2..x_t not divisible by any
    // leading monomial tail. Finiteness requires a pure power of every
    // variable x_v (v >= 2) among the leads.
    std::vector<std::uint32_t> caps(t, 0);
    for (int v = 1; v < t; ++v) {
        for (const auto& b : basis_) {
            const Mono& lm = b[0].e;
            bool pure = lm[v] > 0;
            for (int w = 0; w < t && pure; ++w)
                if (w != v && lm[w] != 0) pure = false;
            if (pure && (caps[v] == 0 || lm[v] < caps[v])) caps[v] = lm[v];
        }
        if (caps[v] == 0)
            issues.push_back("ideal_basis: no pure power of x" + std::to_string(v + 1) + " among leading monomials (footprint is infinite)");
    }
    if (!issues.empty()) throw ValidationError(issues);

    std::vector<Mono> tails;
    Mono cur(t, 0);
    // Enumerate the box [0, caps) over coordinates 1..t-1.
    for (;;) {
        bool reducible = false;
        for (const auto& b : basis_) {
            if (mono_divides(b[0].e, cur)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) tails.push_back(cur);
        if (tails.size() > 65536) throw ValidationError("footprint: more than 65536 monomials with zero x1 exponent (not standard form)");
        int v = 1;
        for (; v < t; ++v) {
            if (++cur[v] < caps[v]) break;
            cur[v] = 0;
        }
        if (v == t) break;
    }

    const long long a1 = weights_[0];
    if ((long long)tails.size() != a1)
        issues.push_back("footprint: expected a1 = " + std::to_string(a1) + " monomials with zero x1 exponent, found " + std::to_string(tails.size()));

    std::vector<long long> b = apery_values(weights_);
    for (long long r = 0; r < a1; ++r)
        if (b[r] < 0) issues.push_back("weights: residue " + std::to_string(r) + " mod a1 unreachable (internal)");
    if (!issues.empty()) throw ValidationError(issues);

    // Match tails against the Apery set of the weight semigroup and compute
    // the minimal exponent tuples L_j by direct enumeration.
    apery_.resize(a1);
    std::vector<bool> seen(a1, false);
    for (const auto& tail : tails) {
        long long w = weight(tail);
        long long r = w % a1;
        if (seen[r]) {
            issues.push_back("footprint: two monomials with pole order congruent to " + std::to_string(r) + " mod a1 (pole orders not distinct)");
            continue;
        }
        seen[r] = true;
        if (w != b[r]) {
            issues.push_back("footprint: monomial " + mono_str(tail) + " has pole order " + std::to_string(w) +
                             " but the weight semigroup expects " + std::to_string(b[r]) + " in its residue class");
            continue;
        }
        apery_[r].b = w;
        apery_[r].L = tail;
    }
    if (!issues.empty()) throw ValidationError(issues);

    // Cross-check the order-theoretic definition: L_j is the minimal tuple
    // under the curve order among all first-entry-zero tuples of weight b_j.
    for (long long r = 0; r < a1; ++r) {
        std::optional<Mono> best;
        Mono m(t, 0);
        std::function<void(int, long long)> rec = [&](int v, long long rem) {
            if (v == t) {
                if (rem == 0 && (!best || cmp(m, *best) < 0)) best = m;
                return;
            }
            for (std::uint32_t e = 0; (long long)e * weights_[v] <= rem; ++e) {
                m[v] = e;
                rec(v + 1, rem - (long long)e * weights_[v]);
            }
            m[v] = 0;
        };
        rec(1, apery_[r].b);
        if (!best || *best != apery_[r].L)
            issues.push_back("footprint: monomial of pole order " + std::to_string(apery_[r].b) +
                             " is not the order-minimal exponent tuple of that weight (inconsistent standard form)");
    }
    if (!issues.empty()) throw ValidationError(issues);

    for (long long r = 0; r < a1; ++r) {
        Mono tail(apery_[r].L.begin() + 1, apery_[r].L.end());
        tail_to_j_[tail] = (int)r;
    }

    genus_ = 0;
    for (long long r = 0; r < a1; ++r) genus_ += (apery_[r].b - r) / a1;

    // Groebner closure: every S-polynomial reduces to zero.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = i + 1; j < basis_.size(); ++j) {
            const Mono &mi = basis_[i][0].e, &mj = basis_[j][0].e;
            Mono lcm(t);
            for (int v = 0; v < t; ++v) lcm[v] = std::max(mi[v], mj[v]);
            TermList spoly;
            Fe ci = basis_[j][0].c, cj = field_.neg(basis_[i][0].c);
            Mono di = mono_sub(lcm, mi), dj = mono_sub(lcm, mj);
            for (const auto& tm : basis_[i]) spoly.push_back({mono_add(tm.e, di), field_.mul(ci, tm.c)});
            for (const auto& tm : basis_[j]) spoly.push_back({mono_add(tm.e, dj), field_.mul(cj, tm.c)});
            if (!normal_form(spoly).is_zero())
                issues.push_back("ideal_basis: S-polynomial of elements " + std::to_string(i) + " and " + std::to_string(j) +
                                 " does not reduce to zero (not a Groebner basis)");
        }
    }
    if (!issues.empty()) throw ValidationError(issues);
}

bool Curve::footprint_contains(const Mono& m) const {
    for (const auto& b : basis_)
        if (mono_divides(b[0].e, m)) return false;
    return true;
}

std::optional<Mono> Curve::footprint_mono_of_weight(long long w) const {
    if (w < 0) return std::nullopt;
    long long a1 = weights_[0];
    const AperyEntry& ap = apery_[w % a1];
    if (ap.b > w) return std::nullopt;
    Mono m = ap.L;
    m[0] = (std::uint32_t)((w - ap.b) / a1);
    return m;
}

long long Curve::semigroup_dim(long long N) const {
    if (N < 0) return 0;
    long long a1 = weights_[0], d = 0;
    for (const auto& ap : apery_)
        if (ap.b <= N) d += (N - ap.b) / a1 + 1;
    return d;
}

FunElem Curve::make(std::vector<Term> sorted_terms) const {
    FunElem r;
    r.terms_ = std::move(sorted_terms);
    return r;
}

FunElem Curve::normal_form(const TermList& input, CostCounter* cc) const {
    TermList work = input;
    canonicalize(work);
    // work stays sorted ascending; scan from the top for a reducible monomial.
    for (;;) {
        int hit = -1;
        std::size_t which = 0;
        for (std::size_t k = work.size(); k-- > 0;) {
            for (std::size_t bi = 0; bi < basis_.size(); ++bi) {
                if (mono_divides(basis_[bi][0].e, work[k].e)) {
                    hit = (int)k;
                    which = bi;
                    break;
                }
            }
            if (hit >= 0) break;
        }
        if (hit < 0) break;
        const TermList& g = basis_[which];
        Mono d = mono_sub(work[hit].e, g[0].e);
        Fe factor = field_.mul(work[hit].c, basis_lc_inv_[which], cc);
        TermList delta;
        delta.reserve(g.size());
        for (const auto& tm : g) delta.push_back({mono_add(tm.e, d), field_.neg(field_.mul(factor, tm.c, cc))});
        work.insert(work.end(), delta.begin(), delta.end());
        canonicalize(work);
    }
    return make(std::move(work));
}

FunElem Curve::from_const(Fe c) const {
    if (c.code == 0) return FunElem();
    return make({Term{Mono(t(), 0), c}});
}

FunElem Curve::monomial_elem(const Mono& m, Fe c) const {
    if (c.code == 0) return FunElem();
    if (footprint_contains(m)) return make({Term{m, c}});
    return normal_form({Term{m, c}});
}

FunElem Curve::y(int j) const {
    return make({Term{apery_[j].L, field_.one()}});
}

FunElem Curve::x1_power(int i, Fe c) const {
    if (c.code == 0) return FunElem();
    Mono m(t(), 0);
    m[0] = (std::uint32_t)i;
    return make({Term{m, c}});
}

FunElem Curve::add(const FunElem& a, const FunElem& b) const {
    // Sums of footprint monomials need no reduction.
    std::vector<Term> r;
    r.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    while (i < a.terms().size() && j < b.terms().size()) {
        int c = cmp(a.terms()[i].e, b.terms()[j].e);
        if (c < 0) {
            r.push_back(a.terms()[i++]);
        } else if (c > 0) {
            r.push_back(b.terms()[j++]);
        } else {
            Fe s = field_.add(a.terms()[i].c, b.terms()[j].c);
            if (s.code != 0) r.push_back({a.terms()[i].e, s});
            ++i;
            ++j;
        }
    }
    while (i < a.terms().size()) r.push_back(a.terms()[i++]);
    while (j < b.terms().size()) r.push_back(b.terms()[j++]);
    return make(std::move(r));
}

FunElem Curve::neg(const FunElem& a) const {
    std::vector<Term> r = a.terms();
    for (auto& tm : r) tm.c = field_.neg(tm.c);
    return make(std::move(r));
}

FunElem Curve::sub(const FunElem& a, const FunElem& b) const { return add(a, neg(b)); }

FunElem Curve::mul(const FunElem& a, const FunElem& b, CostCounter* cc) const {
    if (a.is_zero() || b.is_zero()) return FunElem();
    TermList prod;
    prod.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            prod.push_back({mono_add(ta.e, tb.e), field_.mul(ta.c, tb.c, cc)});
    return normal_form(prod, cc);
}

FunElem Curve::mul_scalar(const FunElem& a, Fe c, CostCounter* cc) const {
    if (c.code == 0) return FunElem();
    std::vector<Term> r = a.terms();
    for (auto& tm : r) tm.c = field_.mul(tm.c, c, cc);
    return make(std::move(r));
}

FunElem Curve::pow(const FunElem& a, unsigned n, CostCounter* cc) const {
    FunElem r = one();
    for (unsigned i = 0; i < n; ++i) r = mul(r, a, cc);
    return r;
}

long long Curve::pole_order(const FunElem& a) const {
    if (a.is_zero()) return kNegInfWeight;
    return weight(a.lead().e);
}

std::vector<UniPoly> Curve::to_modvec(const FunElem& a) const {
    std::vector<std::vector<Fe>> comps(a1());
    for (const auto& tm : a.terms()) {
        Mono tail(tm.e.begin() + 1, tm.e.end());
        auto it = tail_to_j_.find(tail);
        if (it == tail_to_j_.end()) throw std::logic_error("to_modvec: monomial outside footprint rays (internal)");
        auto& v = comps[it->second];
        if (v.size() <= tm.e[0]) v.resize(tm.e[0] + 1, Fe{0});
        v[tm.e[0]] = tm.c;
    }
    std::vector<UniPoly> r(a1());
    for (long long j = 0; j < a1(); ++j) r[j] = UniPoly::from_coeffs(std::move(comps[j]));
    return r;
}

FunElem Curve::from_modvec(const std::vector<UniPoly>& comps) const {
    if ((long long)comps.size() != a1()) throw std::invalid_argument("from_modvec: expected a1 components");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < comps.size(); ++j) {
        for (int i = 0; i <= comps[j].deg(); ++i) {
            Fe c = comps[j].coeff(i);
            if (c.code == 0) continue;
            Mono m = apery_[j].L;
            m[0] = (std::uint32_t)i;
            terms.push_back({std::move(m), c});
        }
    }
    std::sort(terms.begin(), terms.end(), [this](const Term& x, const Term& yv) { return cmp(x.e, yv.e) < 0; });
    return make(std::move(terms));
}

Fe Curve::evaluate_terms(const TermList& terms, const std::vector<Fe>& coords) const {
    if ((int)coords.size() != t()) throw std::invalid_argument("evaluate: expected t coordinates");
    Fe acc = field_.zero();
    for (const auto& tm : terms) {
        Fe v = tm.c;
        for (int i = 0; i < t(); ++i)
            if (tm.e[i] != 0) v = field_.mul(v, field_.pow(coords[i], tm.e[i]));
        acc = field_.add(acc, v);
    }
    return acc;
}

Fe Curve::evaluate(const FunElem& a, const std::vector<Fe>& coords) const { return evaluate_terms(a.terms(), coords); }

bool Curve::is_univariate(const FunElem& a) const {
    for (const auto& tm : a.terms())
        for (int v = 1; v < t(); ++v)
            if (tm.e[v] != 0) return false;
    return true;
}

}  // namespace aglist
