/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "aglist/curve_io.hpp"
#include "aglist/local.hpp"

using namespace aglist;

namespace {

Term term(Mono e, uint32_t c) { return Term{std::move(e), Fe{c}}; }

// Places of the curve where f vanishes, in enumeration order.
std::vector<Place> zero_places(const Curve& C, const FunElem& f) {
    PlaceCensus census = enumerate_places(C);
    if (!census.degenerate_points.empty()) throw std::runtime_error("fixture curve has degenerate points");
    std::vector<Place> out;
    for (const Place& pl : census.places)
        if (C.evaluate(f, pl.coords) == C.field().zero()) out.push_back(pl);
    return out;
}

CurveFile klein_fixture() {
    Field F(FieldSpec{2, 3, {1, 1, 0, 1}});
    std::vector<TermList> ideal = {
        {term({0, 2, 0}, 1), term({1, 0, 1}, 1)},
        {term({0, 1, 1}, 1), term({4, 0, 0}, 1), term({0, 1, 0}, 1)},
        {term({0, 0, 2}, 1), term({3, 1, 0}, 1), term({0, 0, 1}, 1)},
    };
    auto curve = std::make_shared<const Curve>(F, std::vector<long long>{3, 5, 7}, ideal);
    FunElem f = curve->normal_form({term({7, 0, 0}, 1), term({0, 0, 0}, 1)});
    CurveFile cf;
    cf.name = "klein";
    cf.curve = curve;
    cf.f = f;
    cf.places = zero_places(*curve, f);
    if (cf.places.size() != 21) throw std::runtime_error("klein: expected 21 places of f");
    return cf;
}

CurveFile hermitian_fixture() {
    Field F(FieldSpec{2, 2, {1, 1, 1}});
    std::vector<TermList> ideal = {
        {term({0, 2}, 1), term({0, 1}, 1), term({3, 0}, 1)},
    };
    auto curve = std::make_shared<const Curve>(F, std::vector<long long>{2, 3}, ideal);
    FunElem f = curve->normal_form({term({4, 0}, 1), term({1, 0}, 1)});
    CurveFile cf;
    cf.name = "hermitian4";
    cf.curve = curve;
    cf.f = f;
    cf.places = zero_places(*curve, f);
    if (cf.places.size() != 8) throw std::runtime_error("hermitian4: expected 8 places of f");
    return cf;
}

void emit(const CurveFile& cf, const std::string& dir) {
    std::string path = dir + "/" + cf.name + ".json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << curve_file_to_json(cf) << "\n";
    // Round-trip through the validator so a broken writer never ships.
    load_curve_file(path);
    std::cout << "wrote " << path << " (" << cf.places.size() << " places)\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "curves";
    try {
        emit(klein_fixture(), dir);
        emit(hermitian_fixture(), dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
