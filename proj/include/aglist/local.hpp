/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <vector>

#include "aglist/curve.hpp"

namespace aglist {

// Rational place given by affine coordinates plus the designated local
// coordinate index lp (1-based): t = x_lp - coords[lp-1] is the local
// parameter. Valid when the Jacobian of the ideal basis with respect to the
// remaining variables has full rank t-1 at the point.
struct Place {
    std::vector<Fe> coords;
    int lp = 1;
    friend bool operator==(const Place& a, const Place& b) { return a.coords == b.coords && a.lp == b.lp; }
};

// Truncated power series in the local parameter: coefficients c[0..prec-1],
// representing the series mod t^prec.
struct LocalSeries {
    std::vector<Fe> c;
    int prec() const { return (int)c.size(); }
    bool all_zero() const {
        for (Fe v : c)
            if (v.code != 0) return false;
        return true;
    }
    friend bool operator==(const LocalSeries& a, const LocalSeries& b) { return a.c == b.c; }
};

LocalSeries ls_constant(Fe v, int prec);
LocalSeries ls_add(const Field& F, const LocalSeries& a, const LocalSeries& b);
LocalSeries ls_sub(const Field& F, const LocalSeries& a, const LocalSeries& b);
LocalSeries ls_mul(const Field& F, const LocalSeries& a, const LocalSeries& b);
LocalSeries ls_scale(const Field& F, Fe c, const LocalSeries& a);
// Multiplicative inverse; requires a unit constant term.
LocalSeries ls_inverse(const Field& F, const LocalSeries& a);
LocalSeries ls_truncate(const LocalSeries& a, int prec);

// Power-series expansions of all t coordinate functions at a place, each
// correct mod t^prec. coord_series[lp-1] is exactly coords[lp-1] + t.
struct PlaceExpansion {
    std::vector<LocalSeries> coord_series;
    int prec = 0;
};

// Newton lifting of the non-designated coordinates, doubling precision per
// step from the affine point. Verifies afterwards that every ideal basis
// element vanishes mod t^prec and throws std::runtime_error otherwise.
PlaceExpansion expand_coordinates(const Curve& curve, const Place& place, int prec);

// Expansion of a ring element along the coordinate series.
LocalSeries expand_function(const Curve& curve, const FunElem& a, const PlaceExpansion& exp);

// Valuation of a nonzero element at the place: index of the first nonzero
// series coefficient. nullopt means "at least prec" (all computed
// coefficients vanish). The zero element is rejected.
std::optional<int> valuation_at(const Curve& curve, const FunElem& a, const Place& place, int prec);

// All affine rational points of the curve, with the smallest valid
// designated-coordinate index per point. Points whose Jacobian has rank
// below t-1 for every choice are reported separately.
struct PlaceCensus {
    std::vector<Place> places;
    std::vector<std::vector<Fe>> degenerate_points;
};
PlaceCensus enumerate_places(const Curve& curve);

// Smallest valid designated-coordinate index at the point, or 0 if none.
int designate_local_coordinate(const Curve& curve, const std::vector<Fe>& coords);

// Whether skipping coordinate lp still leaves the Jacobian at full rank,
// i.e. the remaining coordinates can be expanded in the designated one.
bool local_coordinate_valid(const Curve& curve, const std::vector<Fe>& coords, int lp);

}  // namespace aglist
