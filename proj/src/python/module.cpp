/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aglist/cost.hpp"
#include "aglist/curve_io.hpp"
#include "aglist/decoder.hpp"
#include "aglist/interpolation.hpp"

namespace py = pybind11;
using namespace aglist;

namespace {

std::vector<Fe> to_field(const Field& F, const std::vector<uint32_t>& codes) {
    std::vector<Fe> out;
    out.reserve(codes.size());
    for (uint32_t c : codes) out.push_back(F.elem(c));
    return out;
}

std::vector<uint32_t> to_codes(const std::vector<Fe>& v) {
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (Fe c : v) out.push_back(c.code);
    return out;
}

struct PyCurve {
    CurveFile cf;
};

struct PyCode {
    std::shared_ptr<CurveFile> cf;
    Code code;
};

py::dict radius_dict(const RadiusReport& r) {
    py::dict d;
    d["m"] = r.m;
    d["W"] = r.W;
    d["tau"] = r.tau;
    d["ell"] = r.ell;
    d["ell_min"] = r.ell_min;
    d["guaranteed"] = r.guaranteed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "interpolation-based list decoding for one-point evaluation codes";

    py::class_<PyCurve>(mod, "Curve")
        .def_property_readonly("name", [](const PyCurve& c) { return c.cf.name; })
        .def_property_readonly("q", [](const PyCurve& c) { return c.cf.curve->field().q(); })
        .def_property_readonly("genus", [](const PyCurve& c) { return c.cf.curve->genus(); })
        .def_property_readonly("weights", [](const PyCurve& c) { return c.cf.curve->weights(); })
        .def_property_readonly("n_places", [](const PyCurve& c) { return c.cf.places.size(); })
        .def("to_json", [](const PyCurve& c) { return curve_file_to_json(c.cf); })
        .def("__repr__", [](const PyCurve& c) {
            return "<Curve " + c.cf.name + ", genus " + std::to_string(c.cf.curve->genus()) + ", " +
                   std::to_string(c.cf.places.size()) + " places>";
        });

    py::class_<PyCode>(mod, "Code")
        .def_property_readonly("n", [](const PyCode& c) { return c.code.n(); })
        .def_property_readonly("k", [](const PyCode& c) { return c.code.k(); })
        .def_property_readonly("u", [](const PyCode& c) { return c.code.u(); })
        .def_property_readonly("goppa_distance", [](const PyCode& c) { return c.code.goppa_distance(); })
        .def("encode",
             [](const PyCode& c, const std::vector<uint32_t>& msg) {
                 return to_codes(c.code.encode(to_field(c.code.curve().field(), msg)));
             },
             py::arg("message"))
        .def("radius", [](const PyCode& c, int m) { return radius_dict(a_priori_radius(c.code, m)); }, py::arg("m"))
        .def("interpolate",
             [](const PyCode& c, const std::vector<uint32_t>& received, int m, int ell) {
                 InterpolationResult res =
                     interpolate(c.code, to_field(c.code.curve().field(), received), InterpParams{m, ell});
                 py::dict d;
                 d["weight"] = res.weight;
                 d["zdeg"] = res.Q.zdeg();
                 py::list zs;
                 for (const FunElem& a : res.Q.z) zs.append(function_to_string(c.code.curve(), a));
                 d["Q"] = zs;
                 d["build_mults"] = res.build_cost.muls;
                 d["reduce_mults"] = res.reduce_cost.muls;
                 d["reduce_invs"] = res.reduce_cost.invs;
                 return d;
             },
             py::arg("received"), py::arg("m"), py::arg("ell"))
        .def("decode",
             [](const PyCode& c, const std::vector<uint32_t>& received, std::optional<int> m, std::optional<int> tau,
                bool verify_only) {
                 DecodeOptions opt;
                 opt.m = m;
                 opt.tau = tau;
                 opt.verify_only = verify_only;
                 DecodeResult res = list_decode(c.code, to_field(c.code.curve().field(), received), opt);
                 py::dict d;
                 d["radius"] = radius_dict(res.radius);
                 d["m"] = res.params.m;
                 d["ell"] = res.params.ell;
                 d["q_weight"] = res.q_weight;
                 d["applied_radius"] = res.applied_radius;
                 d["verify_only"] = res.verify_only;
                 py::list lst;
                 for (const Candidate& cand : res.list) {
                     py::dict e;
                     e["message"] = to_codes(cand.message);
                     e["codeword"] = to_codes(cand.codeword);
                     e["distance"] = cand.distance;
                     lst.append(e);
                 }
                 d["list"] = lst;
                 d["reduce_mults"] = res.reduce_cost.muls;
                 return d;
             },
             py::arg("received"), py::arg("m") = std::nullopt, py::arg("tau") = std::nullopt,
             py::arg("verify_only") = false)
        .def("cost_report",
             [](const PyCode& c, int m, int ell, int tau) {
                 CostComparison cmp = compare_report(c.code, m, ell, tau);
                 py::dict d;
                 d["m"] = cmp.m;
                 d["ell"] = cmp.ell;
                 d["tau"] = cmp.tau;
                 d["a_degree"] = cmp.a_degree;
                 d["gs_equations"] = cmp.gs_equations;
                 d["gs_estimate"] = cmp.gs_estimate;
                 d["bh_equations"] = cmp.bh.equations;
                 d["bh_unknowns"] = cmp.bh.unknowns;
                 d["bh_estimate"] = cmp.bh_estimate;
                 d["lo_bracket"] = cmp.lo.bracket;
                 d["lo_bound_sum_to_ell_plus_1"] = cmp.lo.alternate;
                 d["lo_bound_sum_to_a1_ell_plus_1"] = cmp.lo.literal;
                 return d;
             },
             py::arg("m"), py::arg("ell"), py::arg("tau"))
        .def("__repr__", [](const PyCode& c) {
            return "<Code [" + std::to_string(c.code.n()) + "," + std::to_string(c.code.k()) + "] u=" +
                   std::to_string(c.code.u()) + ">";
        });

    mod.def("load_curve", [](const std::string& path) { return PyCurve{load_curve_file(path)}; }, py::arg("path"));
    mod.def("parse_curve", [](const std::string& text) { return PyCurve{parse_curve_text(text, "<string>")}; },
            py::arg("text"));
    mod.def("make_code",
            [](const PyCurve& c, long long u) {
                auto cf = std::make_shared<CurveFile>(c.cf);
                return PyCode{cf, make_code(*cf, u)};
            },
            py::arg("curve"), py::arg("u"));
}
