/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include "aglist/curve_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "aglist/errors.hpp"
#include "aglist/local.hpp"

namespace aglist {

namespace {

using nlohmann::json;

long long get_int(const json& j, const std::string& where, std::vector<std::string>& issues) {
    if (!j.is_number_integer()) {
        issues.push_back(where + ": expected an integer");
        return 0;
    }
    return j.get<long long>();
}

TermList parse_terms(const json& j, int t, const std::string& where, std::vector<std::string>& issues) {
    TermList terms;
    if (!j.is_array()) {
        issues.push_back(where + ": expected an array of terms");
        return terms;
    }
    for (size_t i = 0; i < j.size(); ++i) {
        const json& tj = j[i];
        std::string loc = where + "[" + std::to_string(i) + "]";
        if (!tj.is_object() || !tj.contains("e") || !tj.contains("c")) {
            issues.push_back(loc + ": a term needs fields e and c");
            continue;
        }
        const json& ej = tj["e"];
        if (!ej.is_array() || (int)ej.size() != t) {
            issues.push_back(loc + ".e: expected " + std::to_string(t) + " exponents");
            continue;
        }
        Term term;
        term.e.resize((size_t)t);
        bool ok = true;
        for (int v = 0; v < t; ++v) {
            long long e = get_int(ej[(size_t)v], loc + ".e", issues);
            if (e < 0) {
                issues.push_back(loc + ".e: negative exponent");
                ok = false;
                break;
            }
            term.e[(size_t)v] = (uint32_t)e;
        }
        long long c = get_int(tj["c"], loc + ".c", issues);
        term.c = Fe{(uint32_t)c};
        if (ok) terms.push_back(std::move(term));
    }
    return terms;
}

json terms_to_json(const TermList& terms) {
    json arr = json::array();
    for (const Term& t : terms) {
        json tj;
        tj["e"] = t.e;
        tj["c"] = t.c.code;
        arr.push_back(tj);
    }
    return arr;
}

}  // namespace

CurveFile parse_curve_text(const std::string& text, const std::string& origin) {
    std::vector<std::string> issues;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(origin + ": not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ValidationError(origin + ": top level must be an object");
    for (const char* key : {"name", "field", "weights", "genus", "ideal_basis", "places", "f"})
        if (!j.contains(key)) issues.push_back(origin + ": missing field \"" + std::string(key) + "\"");
    if (!issues.empty()) throw ValidationError(origin + ": malformed curve file", issues);

    CurveFile cf;
    cf.name = j["name"].is_string() ? j["name"].get<std::string>() : "";
    if (cf.name.empty()) issues.push_back("name: expected a nonempty string");

    // Field.
    const json& fj = j["field"];
    long long p = 0, e = 0;
    std::vector<uint32_t> modulus;
    if (!fj.is_object() || !fj.contains("p") || !fj.contains("e") || !fj.contains("modulus")) {
        issues.push_back("field: needs p, e, modulus");
    } else {
        p = get_int(fj["p"], "field.p", issues);
        e = get_int(fj["e"], "field.e", issues);
        if (p < 2 || p > 65536) issues.push_back("field.p: out of range");
        if (e < 1 || e > 16) issues.push_back("field.e: out of range");
        if (fj["modulus"].is_array()) {
            for (size_t i = 0; i < fj["modulus"].size(); ++i) {
                long long d = get_int(fj["modulus"][i], "field.modulus", issues);
                modulus.push_back((uint32_t)std::max(0ll, d));
            }
        } else {
            issues.push_back("field.modulus: expected an array of digits");
        }
    }
    if (!issues.empty()) throw ValidationError(origin + ": malformed curve file", issues);

    std::optional<Field> field;
    try {
        field.emplace(FieldSpec{(uint32_t)p, (uint32_t)e, modulus});
    } catch (const ValidationError& ex) {
        issues.push_back(std::string("field: ") + ex.what());
        throw ValidationError(origin + ": invalid field", issues);
    }

    // Weights and relations feed the curve constructor, which runs the
    // structural validation (reducedness, footprint size, semigroup match).
    std::vector<long long> weights;
    if (j["weights"].is_array())
        for (size_t i = 0; i < j["weights"].size(); ++i) weights.push_back(get_int(j["weights"][i], "weights", issues));
    else
        issues.push_back("weights: expected an array");
    const int t = (int)weights.size();

    std::vector<TermList> basis;
    if (j["ideal_basis"].is_array())
        for (size_t i = 0; i < j["ideal_basis"].size(); ++i)
            basis.push_back(parse_terms(j["ideal_basis"][i], t, "ideal_basis[" + std::to_string(i) + "]", issues));
    else
        issues.push_back("ideal_basis: expected an array");

    for (const TermList& rel : basis)
        for (const Term& term : rel)
            if (term.c.code >= field->q()) issues.push_back("ideal_basis: coefficient code out of field range");
    if (!issues.empty()) throw ValidationError(origin + ": malformed curve file", issues);

    std::shared_ptr<const Curve> curve;
    try {
        curve = std::make_shared<const Curve>(*field, weights, basis);
    } catch (const ValidationError& ex) {
        issues.push_back(std::string("curve: ") + ex.what());
        throw ValidationError(origin + ": invalid curve", issues);
    }
    cf.curve = curve;

    long long stored_genus = get_int(j["genus"], "genus", issues);
    if (stored_genus != curve->genus())
        issues.push_back("genus: stored " + std::to_string(stored_genus) + " disagrees with the gap count " + std::to_string(curve->genus()));

    // Places.
    if (!j["places"].is_array()) {
        issues.push_back("places: expected an array");
    } else {
        for (size_t i = 0; i < j["places"].size(); ++i) {
            const json& pj = j["places"][i];
            std::string loc = "places[" + std::to_string(i) + "]";
            if (!pj.is_object() || !pj.contains("coords") || !pj.contains("lp")) {
                issues.push_back(loc + ": needs coords and lp");
                continue;
            }
            Place pl;
            if (!pj["coords"].is_array() || (int)pj["coords"].size() != t) {
                issues.push_back(loc + ".coords: expected " + std::to_string(t) + " entries");
                continue;
            }
            bool ok = true;
            for (int v = 0; v < t; ++v) {
                long long c = get_int(pj["coords"][(size_t)v], loc + ".coords", issues);
                if (c < 0 || c >= (long long)field->q()) {
                    issues.push_back(loc + ".coords: code out of field range");
                    ok = false;
                    break;
                }
                pl.coords.push_back(Fe{(uint32_t)c});
            }
            if (!ok) continue;
            pl.lp = (int)get_int(pj["lp"], loc + ".lp", issues);
            bool on_curve = true;
            for (const TermList& rel : curve->ideal_basis())
                if (curve->evaluate_terms(rel, pl.coords) != field->zero()) on_curve = false;
            if (!on_curve) issues.push_back(loc + ": point does not lie on the curve");
            else if (!local_coordinate_valid(*curve, pl.coords, pl.lp))
                issues.push_back(loc + ".lp: coordinate " + std::to_string(pl.lp) + " is not a valid local coordinate at the point");
            cf.places.push_back(std::move(pl));
        }
    }

    // f and its divisor requirement.
    TermList fterms = parse_terms(j["f"], t, "f", issues);
    for (const Term& term : fterms)
        if (term.c.code >= field->q()) issues.push_back("f: coefficient code out of field range");
    if (issues.empty()) {
        cf.f = curve->normal_form(fterms);
        DivisorAssumptionReport rep = check_divisor_assumption(*curve, cf.f, cf.places);
        for (const std::string& s : rep.issues) issues.push_back("f: " + s);
    }
    if (!issues.empty()) throw ValidationError(origin + ": invalid curve file", issues);
    return cf;
}

CurveFile load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_text(buf.str(), path);
}

std::string curve_file_to_json(const CurveFile& cf) {
    json j;
    j["name"] = cf.name;
    const Curve& C = *cf.curve;
    j["field"]["p"] = C.field().p();
    j["field"]["e"] = C.field().e();
    j["field"]["modulus"] = C.field().spec().modulus;
    j["weights"] = C.weights();
    j["genus"] = C.genus();
    json basis = json::array();
    for (const TermList& rel : C.ideal_basis()) basis.push_back(terms_to_json(rel));
    j["ideal_basis"] = basis;
    json places = json::array();
    for (const Place& pl : cf.places) {
        json pj;
        json coords = json::array();
        for (Fe c : pl.coords) coords.push_back(c.code);
        pj["coords"] = coords;
        pj["lp"] = pl.lp;
        places.push_back(pj);
    }
    j["places"] = places;
    j["f"] = terms_to_json(cf.f.terms());
    return j.dump(2) + "\n";
}

std::string function_to_string(const Curve& curve, const FunElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    const auto& terms = a.terms();
    for (size_t i = terms.size(); i-- > 0;) {
        const Term& t = terms[i];
        if (i + 1 < terms.size()) os << " + ";
        bool has_vars = false;
        for (uint32_t e : t.e)
            if (e > 0) has_vars = true;
        bool need_sep = !has_vars || t.c.code != 1;
        if (need_sep) os << t.c.code;
        for (int v = 0; v < curve.t(); ++v) {
            if (t.e[(size_t)v] == 0) continue;
            if (need_sep) os << "*";
            need_sep = true;
            os << "x" << (v + 1);
            if (t.e[(size_t)v] > 1) os << "^" << t.e[(size_t)v];
        }
    }
    return os.str();
}

Code make_code(const CurveFile& cf, long long u) {
    return Code(cf.curve, u, cf.f, cf.places);
}

}  // namespace aglist
