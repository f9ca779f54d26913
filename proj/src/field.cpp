/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "aglist/errors.hpp"

namespace aglist {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense little-endian coefficient vectors over GF(p), used only while
// building the tables.
using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p), b nonzero. Destroys a.
PVec pmod(PVec a, const PVec& b, std::uint32_t p) {
    ptrim(a);
    while (a.size() >= b.size()) {
        std::uint32_t lead = a.back();
        if (lead != 0) {
            // b is monic in every call site, so the quotient digit is lead.
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t v = a[i + shift] + (std::uint64_t)(p - 1) * lead % p * b[i];
                a[i + shift] = (std::uint32_t)(v % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (std::uint32_t)((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    ptrim(r);
    return r;
}

bool irreducible(const PVec& mod, std::uint32_t p) {
    std::size_t e = mod.size() - 1;
    if (e == 0) return false;
    // Trial division by every monic polynomial of degree 1..e/2.
    for (std::size_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            PVec div(d + 1, 0);
            div[d] = 1;
            std::uint64_t t = tail;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = (std::uint32_t)(t % p);
                t /= p;
            }
            if (pmod(mod, div, p).empty()) return false;
        }
    }
    return true;
}

PVec code_to_vec(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
    PVec v(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        v[i] = code % p;
        code /= p;
    }
    ptrim(v);
    return v;
}

std::uint32_t vec_to_code(const PVec& v, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
    return code;
}

}  // namespace

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    std::vector<std::string> issues;
    if (!is_prime(spec_.p)) issues.push_back("field: p = " + std::to_string(spec_.p) + " is not prime");
    if (spec_.e < 1) issues.push_back("field: extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec_.e && issues.empty(); ++i) {
        q *= spec_.p;
        if (q > (1u << 16)) {
            issues.push_back("field: q = p^e exceeds 2^16");
            break;
        }
    }
    if (issues.empty()) {
        if (spec_.modulus.size() != spec_.e + 1) {
            issues.push_back("field: modulus must have e+1 digits, got " + std::to_string(spec_.modulus.size()));
        } else {
            for (std::size_t i = 0; i < spec_.modulus.size(); ++i)
                if (spec_.modulus[i] >= spec_.p)
                    issues.push_back("field: modulus digit " + std::to_string(i) + " = " + std::to_string(spec_.modulus[i]) + " is not a base-p digit");
            if (issues.empty() && spec_.modulus.back() != 1)
                issues.push_back("field: modulus is not monic");
            if (issues.empty() && !irreducible(spec_.modulus, spec_.p))
                issues.push_back("field: modulus is reducible over GF(p)");
        }
    }
    if (!issues.empty()) throw ValidationError(issues);

    q_ = (std::uint32_t)q;
    negtab_.resize(q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
        PVec v = code_to_vec(c, spec_.p, spec_.e);
        for (auto& d : v) d = d == 0 ? 0 : spec_.p - d;
        negtab_[c] = vec_to_code(v, spec_.p);
    }

    // Find a primitive element by direct order computation, then fill the
    // log/antilog tables from its powers.
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    if (q_ == 2) {
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    const PVec mod = spec_.modulus;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        PVec g = code_to_vec(cand, spec_.p, spec_.e);
        PVec acc = {1};
        std::uint32_t order = 0;
        bool primitive = false;
        std::vector<std::uint32_t> powers;
        powers.reserve(q_ - 1);
        for (;;) {
            powers.push_back(vec_to_code(acc, spec_.p));
            acc = pmod(pmul(acc, g, spec_.p), mod, spec_.p);
            ++order;
            if (acc.size() == 1 && acc[0] == 1) {
                primitive = order == q_ - 1;
                break;
            }
            if (order > q_) break;  // defensive; cannot happen for a unit
        }
        if (primitive) {
            for (std::uint32_t k = 0; k < q_ - 1; ++k) {
                exp_[k] = powers[k];
                log_[powers[k]] = k;
            }
            return;
        }
    }
    throw ValidationError("field: no primitive element found (internal)");
}

Fe Field::from_int(long long n) const {
    long long r = n % (long long)spec_.p;
    if (r < 0) r += spec_.p;
    return Fe{(std::uint32_t)r};
}

Fe Field::elem(std::uint64_t code) const {
    if (code >= q_) throw ValidationError("field: element code " + std::to_string(code) + " out of range for q = " + std::to_string(q_));
    return Fe{(std::uint32_t)code};
}

std::uint32_t Field::add_codes(std::uint32_t a, std::uint32_t b) const {
    if (spec_.p == 2) return a ^ b;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < spec_.e; ++i) {
        std::uint32_t da = a % spec_.p, db = b % spec_.p;
        a /= spec_.p;
        b /= spec_.p;
        r += (da + db) % spec_.p * mul;
        mul *= spec_.p;
    }
    return r;
}

Fe Field::add(Fe a, Fe b) const { return Fe{add_codes(a.code, b.code)}; }

Fe Field::neg(Fe a) const { return Fe{negtab_[a.code]}; }

Fe Field::sub(Fe a, Fe b) const { return Fe{add_codes(a.code, negtab_[b.code])}; }

Fe Field::mul(Fe a, Fe b, CostCounter* cc) const {
    if (cc) ++cc->muls;
    if (a.code == 0 || b.code == 0) return Fe{0};
    std::uint32_t k = log_[a.code] + log_[b.code];
    if (k >= q_ - 1) k -= q_ - 1;
    return Fe{exp_[k]};
}

Fe Field::inv(Fe a, CostCounter* cc) const {
    if (a.code == 0) throw std::domain_error("field: inversion of zero");
    if (cc) ++cc->invs;
    std::uint32_t k = (q_ - 1 - log_[a.code]) % (q_ - 1);
    return Fe{exp_[k]};
}

Fe Field::div(Fe a, Fe b, CostCounter* cc) const { return mul(a, inv(b, cc), cc); }

Fe Field::pow(Fe a, unsigned long long n) const {
    if (n == 0) return one();
    if (a.code == 0) return zero();
    unsigned long long k = (unsigned long long)log_[a.code] % (q_ - 1) * (n % (q_ - 1)) % (q_ - 1);
    return Fe{exp_[k]};
}

std::vector<Fe> Field::enumerate() const {
    std::vector<Fe> all(q_);
    for (std::uint32_t c = 0; c < q_; ++c) all[c] = Fe{c};
    return all;
}

}  // namespace aglist
