/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/local.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "aglist/errors.hpp"

namespace aglist {

LocalSeries ls_constant(Fe v, int prec) {
    LocalSeries s;
    s.c.assign(prec, Fe{0});
    if (prec > 0) s.c[0] = v;
    return s;
}

LocalSeries ls_add(const Field& F, const LocalSeries& a, const LocalSeries& b) {
    int prec = std::min(a.prec(), b.prec());
    LocalSeries r;
    r.c.resize(prec);
    for (int i = 0; i < prec; ++i) r.c[i] = F.add(a.c[i], b.c[i]);
    return r;
}

LocalSeries ls_sub(const Field& F, const LocalSeries& a, const LocalSeries& b) {
    int prec = std::min(a.prec(), b.prec());
    LocalSeries r;
    r.c.resize(prec);
    for (int i = 0; i < prec; ++i) r.c[i] = F.sub(a.c[i], b.c[i]);
    return r;
}

LocalSeries ls_mul(const Field& F, const LocalSeries& a, const LocalSeries& b) {
    int prec = std::min(a.prec(), b.prec());
    LocalSeries r;
    r.c.assign(prec, Fe{0});
    for (int i = 0; i < prec; ++i) {
        if (a.c[i].code == 0) continue;
        for (int j = 0; i + j < prec; ++j) {
            if (b.c[j].code == 0) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

LocalSeries ls_scale(const Field& F, Fe c, const LocalSeries& a) {
    LocalSeries r = a;
    for (auto& v : r.c) v = F.mul(c, v);
    return r;
}

LocalSeries ls_inverse(const Field& F, const LocalSeries& a) {
    if (a.prec() == 0 || a.c[0].code == 0) throw std::domain_error("series inverse: constant term is zero");
    int prec = a.prec();
    LocalSeries r;
    r.c.assign(prec, Fe{0});
    Fe c0inv = F.inv(a.c[0]);
    r.c[0] = c0inv;
    // r[k] = -c0inv * sum_{i=1..k} a[i] r[k-i]
    for (int k = 1; k < prec; ++k) {
        Fe s = F.zero();
        for (int i = 1; i <= k; ++i) s = F.add(s, F.mul(a.c[i], r.c[k - i]));
        r.c[k] = F.neg(F.mul(c0inv, s));
    }
    return r;
}

LocalSeries ls_truncate(const LocalSeries& a, int prec) {
    LocalSeries r = a;
    r.c.resize(prec, Fe{0});
    return r;
}

namespace {

// Formal partial derivative of a term list with respect to variable v.
TermList derive(const Field& F, const TermList& terms, int v) {
    TermList r;
    for (const auto& tm : terms) {
        if (tm.e[v] == 0) continue;
        Fe c = F.mul(tm.c, F.from_int(tm.e[v]));
        if (c.code == 0) continue;
        Mono m = tm.e;
        --m[v];
        r.push_back({std::move(m), c});
    }
    return r;
}

// Evaluate a term list at a vector of series, with memoized variable powers.
LocalSeries eval_terms_at_series(const Field& F, const TermList& terms, const std::vector<LocalSeries>& xs, int prec) {
    std::vector<std::vector<LocalSeries>> pows(xs.size());
    for (std::size_t v = 0; v < xs.size(); ++v) pows[v].push_back(ls_constant(F.one(), prec));
    auto power = [&](std::size_t v, std::uint32_t e) -> const LocalSeries& {
        while (pows[v].size() <= e) pows[v].push_back(ls_mul(F, pows[v].back(), ls_truncate(xs[v], prec)));
        return pows[v][e];
    };
    LocalSeries acc = ls_constant(F.zero(), prec);
    for (const auto& tm : terms) {
        LocalSeries term = ls_constant(tm.c, prec);
        for (std::size_t v = 0; v < xs.size(); ++v)
            if (tm.e[v] != 0) term = ls_mul(F, term, power(v, tm.e[v]));
        acc = ls_add(F, acc, term);
    }
    return acc;
}

// Solve J * delta = G over the series ring mod t^prec by Gaussian
// elimination; pivots need unit constant terms, which full rank at t=0
// guarantees under column exchange.
std::vector<LocalSeries> solve_series_system(const Field& F, std::vector<std::vector<LocalSeries>> J, std::vector<LocalSeries> G, int prec) {
    int n = (int)G.size();
    std::vector<int> colperm(n);
    for (int i = 0; i < n; ++i) colperm[i] = i;
    for (int row = 0; row < n; ++row) {
        int pc = -1;
        for (int c = row; c < n; ++c) {
            if (J[row][colperm[c]].c[0].code != 0) {
                pc = c;
                break;
            }
        }
        if (pc < 0) {
            // look for a row below with a unit in some remaining column
            bool found = false;
            for (int r2 = row + 1; r2 < n && !found; ++r2) {
                for (int c = row; c < n && !found; ++c) {
                    if (J[r2][colperm[c]].c[0].code != 0) {
                        std::swap(J[row], J[r2]);
                        std::swap(G[row], G[r2]);
                        pc = c;
                        found = true;
                    }
                }
            }
            if (!found) throw std::runtime_error("local expansion: degenerate Jacobian during lift (internal)");
        }
        std::swap(colperm[row], colperm[pc]);
        LocalSeries pinv = ls_inverse(F, J[row][colperm[row]]);
        for (int c = row; c < n; ++c) J[row][colperm[c]] = ls_mul(F, pinv, J[row][colperm[c]]);
        G[row] = ls_mul(F, pinv, G[row]);
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == row) continue;
            LocalSeries f = J[r2][colperm[row]];
            if (f.all_zero()) continue;
            for (int c = row; c < n; ++c) J[r2][colperm[c]] = ls_sub(F, J[r2][colperm[c]], ls_mul(F, f, J[row][colperm[c]]));
            G[r2] = ls_sub(F, G[r2], ls_mul(F, f, G[row]));
        }
    }
    std::vector<LocalSeries> delta(n, ls_constant(F.zero(), prec));
    for (int row = 0; row < n; ++row) delta[colperm[row]] = G[row];
    return delta;
}

// Rank over the field of a dense matrix, destructive.
int fe_rank(const Field& F, std::vector<std::vector<Fe>> m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size(), rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c].code != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Fe inv = F.inv(m[rank][c]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].code == 0) continue;
            Fe f = F.mul(m[r][c], inv);
            for (int cc = c; cc < cols; ++cc) m[r][cc] = F.sub(m[r][cc], F.mul(f, m[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

// Jacobian rows of the ideal basis with respect to all variables except
// `skip` (0-based), evaluated at the point.
std::vector<std::vector<Fe>> jacobian_at(const Curve& curve, const std::vector<Fe>& coords, int skip) {
    const Field& F = curve.field();
    std::vector<std::vector<Fe>> rows;
    for (const auto& rel : curve.ideal_basis()) {
        std::vector<Fe> row;
        for (int v = 0; v < curve.t(); ++v) {
            if (v == skip) continue;
            row.push_back(curve.evaluate_terms(derive(F, rel, v), coords));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int designate_local_coordinate(const Curve& curve, const std::vector<Fe>& coords) {
    if (curve.t() == 1) return 1;
    for (int s = 0; s < curve.t(); ++s) {
        if (fe_rank(curve.field(), jacobian_at(curve, coords, s)) == curve.t() - 1) return s + 1;
    }
    return 0;
}

bool local_coordinate_valid(const Curve& curve, const std::vector<Fe>& coords, int lp) {
    if (lp < 1 || lp > curve.t()) return false;
    if (curve.t() == 1) return true;
    return fe_rank(curve.field(), jacobian_at(curve, coords, lp - 1)) == curve.t() - 1;
}

PlaceExpansion expand_coordinates(const Curve& curve, const Place& place, int prec) {
    const Field& F = curve.field();
    const int t = curve.t();
    if ((int)place.coords.size() != t) throw std::invalid_argument("expand_coordinates: wrong coordinate count");
    if (place.lp < 1 || place.lp > t) throw std::invalid_argument("expand_coordinates: lp out of range");
    if (prec < 1) throw std::invalid_argument("expand_coordinates: precision must be positive");
    for (const auto& rel : curve.ideal_basis())
        if (curve.evaluate_terms(rel, place.coords).code != 0)
            throw ValidationError("expand_coordinates: point does not lie on the curve");

    const int s = place.lp - 1;
    PlaceExpansion out;
    out.prec = prec;
    out.coord_series.resize(t);
    for (int v = 0; v < t; ++v) out.coord_series[v] = ls_constant(place.coords[v], prec);
    if (prec > 1) out.coord_series[s].c[1] = F.one();
    if (t == 1) return out;

    // Pick t-1 relations with an invertible Jacobian square at the point.
    std::vector<std::vector<Fe>> jac = jacobian_at(curve, place.coords, s);
    std::vector<int> chosen;
    {
        std::vector<std::vector<Fe>> echelon;
        std::vector<std::vector<Fe>> probe;
        for (std::size_t r = 0; r < jac.size() && (int)chosen.size() < t - 1; ++r) {
            probe.push_back(jac[r]);
            if (fe_rank(F, probe) == (int)probe.size()) {
                chosen.push_back((int)r);
            } else {
                probe.pop_back();
            }
        }
        if ((int)chosen.size() != t - 1)
            throw ValidationError("expand_coordinates: Jacobian rank below t-1 at the point for the designated coordinate");
    }

    std::vector<TermList> rels;
    std::vector<std::vector<TermList>> partials;  // per chosen relation, per non-designated variable
    std::vector<int> vars;  // non-designated variable indices
    for (int v = 0; v < t; ++v)
        if (v != s) vars.push_back(v);
    for (int r : chosen) {
        rels.push_back(curve.ideal_basis()[r]);
        std::vector<TermList> row;
        for (int v : vars) row.push_back(derive(F, curve.ideal_basis()[r], v));
        partials.push_back(std::move(row));
    }

    // Newton: double working precision until reaching prec.
    int cur = 1;
    while (cur < prec) {
        cur = std::min(2 * cur, prec);
        std::vector<LocalSeries> xs(t);
        for (int v = 0; v < t; ++v) xs[v] = ls_truncate(out.coord_series[v], cur);
        std::vector<LocalSeries> G;
        std::vector<std::vector<LocalSeries>> J;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            G.push_back(eval_terms_at_series(F, rels[i], xs, cur));
            std::vector<LocalSeries> row;
            for (std::size_t k = 0; k < vars.size(); ++k) row.push_back(eval_terms_at_series(F, partials[i][k], xs, cur));
            J.push_back(std::move(row));
        }
        std::vector<LocalSeries> delta = solve_series_system(F, std::move(J), std::move(G), cur);
        for (std::size_t k = 0; k < vars.size(); ++k) {
            LocalSeries upd = ls_sub(F, ls_truncate(out.coord_series[vars[k]], cur), delta[k]);
            out.coord_series[vars[k]] = ls_truncate(upd, prec);
        }
    }

    // Residual check over the full ideal basis, not only the chosen square.
    for (const auto& rel : curve.ideal_basis()) {
        LocalSeries res = eval_terms_at_series(F, rel, out.coord_series, prec);
        if (!res.all_zero()) throw std::runtime_error("expand_coordinates: residual nonzero after lift (point not smooth for this designation)");
    }
    return out;
}

LocalSeries expand_function(const Curve& curve, const FunElem& a, const PlaceExpansion& exp) {
    return eval_terms_at_series(curve.field(), a.terms(), exp.coord_series, exp.prec);
}

std::optional<int> valuation_at(const Curve& curve, const FunElem& a, const Place& place, int prec) {
    if (a.is_zero()) throw std::invalid_argument("valuation_at: zero element has no valuation");
    PlaceExpansion exp = expand_coordinates(curve, place, prec);
    LocalSeries s = expand_function(curve, a, exp);
    for (int i = 0; i < s.prec(); ++i)
        if (s.c[i].code != 0) return i;
    return std::nullopt;
}

PlaceCensus enumerate_places(const Curve& curve) {
    const Field& F = curve.field();
    const int t = curve.t();
    PlaceCensus census;
    std::vector<Fe> coords(t, Fe{0});
    std::uint64_t total = 1;
    for (int i = 0; i < t; ++i) total *= F.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        // Enumerate in lexicographic order of (c_1, ..., c_t) codes.
        for (int i = t - 1; i >= 0; --i) {
            coords[i] = Fe{(std::uint32_t)(v % F.q())};
            v /= F.q();
        }
        bool on_curve = true;
        for (const auto& rel : curve.ideal_basis()) {
            if (curve.evaluate_terms(rel, coords).code != 0) {
                on_curve = false;
                break;
            }
        }
        if (!on_curve) continue;
        int lp = designate_local_coordinate(curve, coords);
        if (lp == 0) {
            census.degenerate_points.push_back(coords);
        } else {
            census.places.push_back(Place{coords, lp});
        }
    }
    return census;
}

}  // namespace aglist
