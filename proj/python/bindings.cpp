#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "icplane/analysis.hpp"
#include "icplane/canonical.hpp"
#include "icplane/generators.hpp"
#include "icplane/icpd.hpp"
#include "icplane/maximality.hpp"
#include "icplane/render.hpp"
#include "icplane/report.hpp"
#include "icplane/search.hpp"

namespace py = pybind11;
using namespace icplane;

namespace {

std::vector<std::string> violation_rules(const Drawing& d) {
    std::vector<std::string> out;
    for (const auto& v : validate(d).violations) out.push_back(v.rule);
    return out;
}

ChoicePolicy policy_of(const std::string& s) {
    if (s == "first") return ChoicePolicy::FirstCertificate;
    if (s == "last") return ChoicePolicy::LastCertificate;
    if (s == "random") return ChoicePolicy::Random;
    throw std::invalid_argument("policy must be first, last or random");
}

}  // namespace

PYBIND11_MODULE(_icplane, m) {
    m.doc() = "Bipartite IC-plane drawings";

    py::register_exception<DrawingError>(m, "DrawingError", PyExc_ValueError);

    py::class_<Drawing>(m, "Drawing")
        .def_property_readonly("n", &Drawing::n)
        .def_property_readonly("e", &Drawing::e)
        .def_property_readonly("c", &Drawing::c)
        .def("edges", [](const Drawing& d) {
            std::vector<std::pair<int, int>> out;
            for (EdgeId i = 0; i < d.e(); ++i) out.emplace_back(d.edge(i).u, d.edge(i).v);
            return out;
        })
        .def("colors", [](const Drawing& d) {
            std::string out;
            for (VertexId v = 0; v < d.n(); ++v) out.push_back(color_char(d.color(v)));
            return out;
        })
        .def("violations", &violation_rules)
        .def("is_valid", [](const Drawing& d) { return validate(d).ok(); })
        .def("is_maximal", [](const Drawing& d) { return is_maximal(d); })
        .def("addable_count", [](const Drawing& d) { return addable_edges(d).size(); })
        .def("kappa", [](const Drawing& d) { return vertex_connectivity(d).kappa; })
        .def("face_census", [](const Drawing& d) { return face_census(d); })
        .def("canonical", [](const Drawing& d, bool swap) { return to_hex(canonical_form(d, swap)); },
             py::arg("color_swap") = true)
        .def("to_icpd", [](const Drawing& d) { return serialize_icpd(d); })
        .def("to_svg", [](const Drawing& d) { return render_svg(d); })
        .def("analyze", [](const Drawing& d) { return analyze(d).json; })
        .def("saturate", [](const Drawing& d, const std::string& policy, std::uint64_t seed) {
                 return saturate(d, policy_of(policy), seed);
             },
             py::arg("policy") = "first", py::arg("seed") = 0);

    m.def("parse_icpd", [](const std::string& text) { return parse_icpd(text); });
    m.def("from_canonical", [](const std::string& hex) { return decode_canonical(from_hex(hex)); });
    m.def("gen_star", &gen_star);
    m.def("gen_k2m", &gen_k2m);
    m.def("gen_H", &gen_H);
    m.def("gen_pdw", &gen_pdw);
    m.def("gen_G3", &gen_G3);
    m.def("gen_G4", &gen_G4);
    m.def("tie_drawing", &tie_drawing);

    m.def(
        "enumerate",
        [](int n, int max_crossings, const std::string& filter, int jobs) {
            SearchOptions opt;
            opt.max_crossings = max_crossings;
            opt.jobs = jobs;
            std::vector<std::string> codes;
            py::gil_scoped_release release;
            enumerate_drawings(n, opt, Filter::parse(filter), [&](const Enumerated& r) { codes.push_back(to_hex(r.form)); });
            return codes;
        },
        py::arg("n"), py::arg("max_crossings") = -1, py::arg("filter") = "", py::arg("jobs") = 1);
    m.def(
        "search_csv",
        [](int n, const std::string& filter, int jobs) {
            SearchOptions opt;
            opt.jobs = jobs;
            py::gil_scoped_release release;
            return table_to_csv(search_table(n, opt, Filter::parse(filter)), "");
        },
        py::arg("n"), py::arg("filter") = "", py::arg("jobs") = 1);
}
