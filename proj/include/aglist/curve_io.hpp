/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <string>

#include "aglist/code.hpp"

namespace aglist {

// A curve description file: field, weights, defining relations, rational
// places with designated local coordinates, and the place-cutting function
// f. Every structural invariant is revalidated on load; failures are
// collected and reported together with their locations.
struct CurveFile {
    std::string name;
    CurvePtr curve;
    std::vector<Place> places;
    FunElem f;
};

CurveFile load_curve_file(const std::string& path);
// Same, from an in-memory JSON document; origin labels error messages.
CurveFile parse_curve_text(const std::string& text, const std::string& origin);

std::string curve_file_to_json(const CurveFile& cf);

// Human-readable form, leading term first: "3*x1^2*x2 + 1".
std::string function_to_string(const Curve& curve, const FunElem& a);

// Evaluation code of order u on the file's places.
Code make_code(const CurveFile& cf, long long u);

}  // namespace aglist
