/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aglist {

// Tally of base-field multiplications and inversions. Additions are free.
// Counters are always explicit per-call-context state, never globals: an
// operation that wants its work measured receives a CostCounter* and threads
// it through.
struct CostCounter {
    std::uint64_t muls = 0;
    std::uint64_t invs = 0;
    std::uint64_t total() const { return muls + invs; }
};

// Element of GF(p^e), stored as its integer code in [0, q). The code is the
// base-p encoding of the coefficient vector of the polynomial representative:
// code = sum_i digit_i * p^i, digit_0 the constant term. Codes serialize as
// plain decimal integers everywhere (files, CLI, JSON).
struct Fe {
    std::uint32_t code = 0;
    friend bool operator==(Fe a, Fe b) { return a.code == b.code; }
    friend bool operator!=(Fe a, Fe b) { return a.code != b.code; }
    friend bool operator<(Fe a, Fe b) { return a.code < b.code; }
};

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    // Little-endian base-p digits of the modulus polynomial, length e+1, monic.
    std::vector<std::uint32_t> modulus;
};

// GF(p^e) arithmetic over log/antilog tables for a fixed primitive element.
// Supports q = p^e <= 2^16. Construction validates the parameters (p prime,
// modulus monic irreducible of degree e) and throws ValidationError otherwise.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t e() const { return spec_.e; }
    std::uint32_t q() const { return q_; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    // Element of the prime subfield representing the integer n mod p.
    Fe from_int(long long n) const;
    // Validated constructor from a serialized code.
    Fe elem(std::uint64_t code) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b, CostCounter* cc = nullptr) const;
    Fe inv(Fe a, CostCounter* cc = nullptr) const;  // throws std::domain_error on 0
    Fe div(Fe a, Fe b, CostCounter* cc = nullptr) const;
    // a^n for n >= 0, with pow(0,0) = 1. Table-based, cost-free.
    Fe pow(Fe a, unsigned long long n) const;

    // All q elements in code order (0, 1, ..., q-1).
    std::vector<Fe> enumerate() const;

    bool same_spec(const Field& other) const { return spec_.p == other.spec_.p && spec_.e == other.spec_.e && spec_.modulus == other.spec_.modulus; }

private:
    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> log_;   // log_[code], code >= 1
    std::vector<std::uint32_t> exp_;   // exp_[k] = code of g^k, k in [0, q-1)
    std::vector<std::uint32_t> negtab_;

    std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;
};

}  // namespace aglist
