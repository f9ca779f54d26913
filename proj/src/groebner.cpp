/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace aglist {

namespace {

void check_order(const OrderSpec& ord) {
    if (ord.xw < 1) throw std::invalid_argument("order needs a positive x weight");
    if (ord.posw.empty()) throw std::invalid_argument("order needs at least one position");
    for (long long w : ord.posw)
        if (w < 0) throw std::invalid_argument("position weights must be nonnegative");
}

void check_vec(const OrderSpec& ord, const ModVec& v) {
    if ((int)v.size() != ord.positions())
        throw std::invalid_argument("module vector has " + std::to_string(v.size()) + " components, order has " + std::to_string(ord.positions()));
}

}  // namespace

int lo_cmp(const OrderSpec& ord, const ModTerm& a, const ModTerm& b) {
    long long wa = ord.term_weight(a.pos, a.deg);
    long long wb = ord.term_weight(b.pos, b.deg);
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.pos != b.pos) return a.pos < b.pos ? -1 : 1;
    return 0;
}

bool mv_is_zero(const ModVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

int mv_ind(const ModVec& v) {
    for (int i = (int)v.size() - 1; i >= 0; --i)
        if (!v[i].is_zero()) return i;
    return -1;
}

std::optional<ModTerm> mv_lead(const OrderSpec& ord, const ModVec& v) {
    check_vec(ord, v);
    std::optional<ModTerm> best;
    for (int pos = 0; pos < (int)v.size(); ++pos) {
        if (v[pos].is_zero()) continue;
        ModTerm t{pos, v[pos].deg()};
        if (!best || lo_cmp(ord, *best, t) < 0) best = t;
    }
    return best;
}

Fe mv_lead_coeff(const ModVec& v, const ModTerm& lt) {
    return v[lt.pos].coeff(lt.deg);
}

std::vector<ModVec> algorithm_g(const Field& F, const OrderSpec& ord, std::vector<ModVec> gens, CostCounter* cc) {
    check_order(ord);
    if ((int)gens.size() != ord.positions())
        throw std::invalid_argument("pair reduction needs exactly one generator per position, got " + std::to_string(gens.size()) + " for " + std::to_string(ord.positions()));
    for (const auto& g : gens) check_vec(ord, g);
    std::sort(gens.begin(), gens.end(), [](const ModVec& a, const ModVec& b) { return mv_ind(a) < mv_ind(b); });
    for (size_t i = 0; i < gens.size(); ++i)
        if (mv_ind(gens[i]) != (int)i)
            throw std::invalid_argument("generator top indices must cover every position exactly once");

    std::vector<ModTerm> lead(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) lead[i] = *mv_lead(ord, gens[i]);

    for (;;) {
        // Smallest position held as lead by two or more generators.
        std::map<int, std::vector<size_t>> by_pos;
        for (size_t i = 0; i < gens.size(); ++i) by_pos[lead[i].pos].push_back(i);
        int clash_pos = -1;
        for (const auto& [pos, idxs] : by_pos)
            if (idxs.size() >= 2) { clash_pos = pos; break; }
        if (clash_pos < 0) break;
        const std::vector<size_t>& idxs = by_pos[clash_pos];

        // w: smallest lead (first index on ties). v: largest lead, never w.
        size_t iw = idxs[0], iv = idxs[0];
        for (size_t i : idxs) {
            if (lead[i].deg < lead[iw].deg) iw = i;
            if (lead[i].deg > lead[iv].deg) iv = i;
        }
        if (iv == iw) iv = idxs[0] == iw ? idxs[1] : idxs[0];

        Fe factor = F.mul(mv_lead_coeff(gens[iv], lead[iv]), F.inv(mv_lead_coeff(gens[iw], lead[iw]), cc), cc);
        int shift = lead[iv].deg - lead[iw].deg;
        for (int pos = 0; pos < ord.positions(); ++pos)
            up_sub_scaled_shift(F, gens[iv][pos], factor, shift, gens[iw][pos], cc);

        if (mv_is_zero(gens[iv]))
            throw std::logic_error("generator vanished during pair reduction; the input did not span a full-rank module");
        lead[iv] = *mv_lead(ord, gens[iv]);
    }
    return gens;
}

ModVec reduce_modvec(const Field& F, const OrderSpec& ord, const std::vector<ModVec>& basis, ModVec v, CostCounter* cc) {
    check_order(ord);
    check_vec(ord, v);
    std::vector<ModTerm> blead(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        check_vec(ord, basis[i]);
        auto lt = mv_lead(ord, basis[i]);
        if (!lt) throw std::invalid_argument("zero vector in reduction basis");
        blead[i] = *lt;
    }
    for (;;) {
        auto lt = mv_lead(ord, v);
        if (!lt) return v;
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (blead[i].pos != lt->pos || blead[i].deg > lt->deg) continue;
            Fe factor = F.mul(mv_lead_coeff(v, *lt), F.inv(mv_lead_coeff(basis[i], blead[i]), cc), cc);
            int shift = lt->deg - blead[i].deg;
            for (int pos = 0; pos < ord.positions(); ++pos)
                up_sub_scaled_shift(F, v[pos], factor, shift, basis[i][pos], cc);
            reduced = true;
            break;
        }
        if (!reduced) return v;
    }
}

ModVec minimal_element(const Field& F, const OrderSpec& ord, const std::vector<ModVec>& basis) {
    check_order(ord);
    const ModVec* best = nullptr;
    ModTerm best_lt{};
    for (const auto& b : basis) {
        auto lt = mv_lead(ord, b);
        if (!lt) continue;
        if (!best || lo_cmp(ord, *lt, best_lt) < 0) {
            best = &b;
            best_lt = *lt;
        }
    }
    if (!best) throw std::invalid_argument("no nonzero basis element");
    Fe inv = F.inv(mv_lead_coeff(*best, best_lt));
    ModVec out = *best;
    for (auto& p : out) p = up_scale(F, inv, p);
    return out;
}

long long quotient_dim(const OrderSpec& ord, const std::vector<ModVec>& basis) {
    check_order(ord);
    if ((int)basis.size() != ord.positions())
        throw std::invalid_argument("quotient dimension needs one basis element per position");
    std::vector<char> seen(ord.positions(), 0);
    long long dim = 0;
    for (const auto& b : basis) {
        auto lt = mv_lead(ord, b);
        if (!lt) throw std::invalid_argument("zero vector in basis");
        if (seen[lt->pos]) throw std::invalid_argument("leading positions are not distinct");
        seen[lt->pos] = 1;
        dim += lt->deg;
    }
    return dim;
}

std::optional<ModVec> brute_force_minimal(const Field& F, const OrderSpec& ord, const std::vector<ModVec>& gens, std::optional<long long> weight_cap, std::size_t max_cells) {
    check_order(ord);
    const int s = ord.positions();
    if ((int)gens.size() != s) throw std::invalid_argument("oracle needs one generator per position");
    // The generators must have pairwise distinct ind values so that the
    // generator matrix is a permuted triangular matrix. Its determinant is
    // then the product of the entries at the ind positions, and the degree
    // of that product is the codimension of the module. That number is the
    // stopping certificate below.
    std::vector<char> seen((size_t)s, 0);
    long long codim = 0;
    long long min_gen_lead = 0, max_gen_lead = 0;
    int dmax = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        check_vec(ord, gens[i]);
        int ind = mv_ind(gens[i]);
        if (ind < 0) throw std::invalid_argument("zero generator");
        if (seen[(size_t)ind]) throw std::invalid_argument("generator ind values must be distinct");
        seen[(size_t)ind] = 1;
        codim += gens[i][(size_t)ind].deg();
        auto lt = mv_lead(ord, gens[i]);
        long long w = ord.term_weight(lt->pos, lt->deg);
        min_gen_lead = i == 0 ? w : std::min(min_gen_lead, w);
        max_gen_lead = std::max(max_gen_lead, w);
        for (int pos = 0; pos < s; ++pos) dmax = std::max(dmax, gens[i][(size_t)pos].deg());
    }
    const long long wret = weight_cap.value_or(min_gen_lead);

    // Rows are the shifts x^a * g_i for a = 0..shift. Row reduction makes
    // the leads pairwise distinct; one certified row per position is a
    // basis of the module it spans, with codimension the sum of the lead
    // degrees. Equality with the determinant degree proves the span is the
    // whole module, so the smallest lead seen is the true minimum. Combos
    // that cancel high terms can need shifts above every generator lead,
    // hence the deepening; the adjugate bound caps how far.
    // Any module element with every term of weight at most max_gen_lead is
    // a combination with coefficient degrees at most term degree bound
    // plus (s - 1) * dmax, by Cramer applied to the triangular matrix.
    int dterm = 0;
    for (int pos = 0; pos < s; ++pos)
        if (ord.posw[(size_t)pos] <= max_gen_lead)
            dterm = std::max(dterm, (int)((max_gen_lead - ord.posw[(size_t)pos]) / ord.xw));
    const long long shift_max = (long long)dterm + (long long)(s - 1) * dmax;

    long long shift = std::max(1, dterm);
    bool last_try = false;
    while (true) {
        if (shift >= shift_max) { shift = shift_max; last_try = true; }
        const int ncoldeg = dmax + (int)shift + 1;
        std::vector<ModTerm> cols;
        for (int pos = 0; pos < s; ++pos)
            for (int d = 0; d < ncoldeg; ++d) cols.push_back(ModTerm{pos, d});
        std::sort(cols.begin(), cols.end(), [&](const ModTerm& a, const ModTerm& b) { return lo_cmp(ord, a, b) > 0; });
        std::map<std::pair<int, int>, size_t> col_of;
        for (size_t i = 0; i < cols.size(); ++i) col_of[{cols[i].pos, cols[i].deg}] = i;

        const size_t nrows = gens.size() * (size_t)(shift + 1);
        if (nrows * cols.size() > max_cells) return std::nullopt;

        std::vector<std::vector<Fe>> rows;
        rows.reserve(nrows);
        for (const auto& g : gens) {
            for (long long a = 0; a <= shift; ++a) {
                std::vector<Fe> row(cols.size(), F.zero());
                for (int pos = 0; pos < s; ++pos) {
                    const UniPoly& p = g[(size_t)pos];
                    for (int d = 0; d <= p.deg(); ++d) {
                        Fe c = p.coeff(d);
                        if (c == F.zero()) continue;
                        row[col_of.at({pos, d + (int)a})] = c;
                    }
                }
                rows.push_back(std::move(row));
            }
        }

        // Gauss-Jordan, columns processed largest term first, so a pivot
        // row's lead is exactly its pivot column.
        std::vector<char> row_used(rows.size(), 0);
        std::vector<long long> pivot_col;
        std::vector<size_t> pivot_row;
        for (size_t c = 0; c < cols.size(); ++c) {
            size_t pr = rows.size();
            for (size_t r = 0; r < rows.size(); ++r)
                if (!row_used[r] && rows[r][c] != F.zero()) { pr = r; break; }
            if (pr == rows.size()) continue;
            row_used[pr] = 1;
            Fe inv = F.inv(rows[pr][c]);
            for (size_t k = c; k < cols.size(); ++k) rows[pr][k] = F.mul(rows[pr][k], inv);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == pr) continue;
                Fe fac = rows[r][c];
                if (fac == F.zero()) continue;
                for (size_t k = c; k < cols.size(); ++k) rows[r][k] = F.sub(rows[r][k], F.mul(fac, rows[pr][k]));
            }
            pivot_col.push_back((long long)c);
            pivot_row.push_back(pr);
        }

        // Smallest lead degree per position among the pivot rows.
        std::vector<long long> best_deg((size_t)s, -1);
        for (long long c : pivot_col) {
            const ModTerm& t = cols[(size_t)c];
            if (best_deg[(size_t)t.pos] < 0 || t.deg < best_deg[(size_t)t.pos]) best_deg[(size_t)t.pos] = t.deg;
        }
        bool covered = true;
        long long span_codim = 0;
        for (int pos = 0; pos < s; ++pos) {
            if (best_deg[(size_t)pos] < 0) covered = false;
            else span_codim += best_deg[(size_t)pos];
        }
        if (covered && span_codim == codim) {
            // Certified. The last pivot is the smallest lead in the span,
            // and the span is the whole module.
            const ModTerm& t = cols[(size_t)pivot_col.back()];
            if (ord.term_weight(t.pos, t.deg) > wret) return std::nullopt;
            size_t br = pivot_row.back();
            ModVec out((size_t)s);
            for (size_t c = 0; c < cols.size(); ++c) {
                Fe v = rows[br][c];
                if (v != F.zero()) out[(size_t)cols[c].pos].set_coeff(cols[c].deg, v);
            }
            return out;
        }
        if (last_try) return std::nullopt;
        shift *= 2;
    }
}

}  // namespace aglist
