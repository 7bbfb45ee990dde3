#include "kss/cli.hpp"
#include "kss/render.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace kss;

namespace {

RatVector to_vector(const std::vector<std::string>& xs) {
    RatVector v;
    for (const auto& x : xs) v.push_back(Rational::parse(x));
    return v;
}

std::vector<std::string> to_strings(std::span<const Rational> v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

py::list labels(const std::vector<ConstraintLabel>& ls) {
    py::list out;
    for (const auto& l : ls) out.append(l.str());
    return out;
}

PipelineOptions pipeline(bool closed_form, bool certify, unsigned threads) {
    PipelineOptions o;
    o.closed_form = closed_form;
    o.certify = certify;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact K-semistable domains of log Fano pairs on complete intersections";

    auto base = py::register_exception<KssError>(m, "KssError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<UnsupportedK>(m, "UnsupportedK", base.ptr());
    py::register_exception<WrongDimension>(m, "WrongDimension", base.ptr());
    py::register_exception<NotLogFano>(m, "NotLogFano", base.ptr());
    py::register_exception<NotAVertex>(m, "NotAVertex", base.ptr());

    py::class_<PairConfig>(m, "PairConfig")
        .def_static("validate", &PairConfig::validate, py::arg("projective_dim"), py::arg("ci_degrees"),
                    py::arg("boundary_degrees"), py::arg("assume_ci_kss") = true)
        .def_property_readonly("projective_dim", &PairConfig::ambient_dim)
        .def_property_readonly("ci_degrees", &PairConfig::ci_degrees)
        .def_property_readonly("boundary_degrees", &PairConfig::boundary_degrees)
        .def_property_readonly("assume_ci_kss", &PairConfig::assume_ci_kss)
        .def_property_readonly("dimension", &PairConfig::dimension)
        .def_property_readonly("level", &PairConfig::level)
        .def_property_readonly("k", &PairConfig::k)
        .def("face_config", &PairConfig::face_config)
        .def("absorb_boundary", &PairConfig::absorb_boundary)
        .def("describe", &PairConfig::describe)
        .def("__repr__", [](const PairConfig& c) { return "PairConfig(" + c.describe() + ")"; })
        .def(py::self == py::self);

    m.def("log_discrepancy", [](const PairConfig& c, const std::vector<std::string>& x, std::size_t i) {
        return log_discrepancy(c, to_vector(x), i).str();
    });
    m.def("s_invariant", [](const PairConfig& c, const std::vector<std::string>& x, std::size_t i) {
        return s_invariant(c, to_vector(x), i).str();
    });
    m.def("beta", [](const PairConfig& c, const std::vector<std::string>& x, std::size_t i) {
        return beta(c, to_vector(x), i).str();
    });
    m.def("volume_profile",
          [](const PairConfig& c, const std::vector<std::string>& x, std::size_t i, const std::string& t) {
              return volume_profile(c, to_vector(x), i, Rational::parse(t)).str();
          });

    m.def("halfspace_system", [](const PairConfig& c) {
        py::list out;
        for (const auto& f : build_halfspace_system(c).forms)
            out.append(py::dict(py::arg("label") = f.label.str(), py::arg("constant") = f.constant.str(),
                                py::arg("coeffs") = to_strings(f.coeffs)));
        return out;
    });
    m.def(
        "enumerate_vertices",
        [](const PairConfig& c, unsigned threads) {
            py::list out;
            for (const auto& v : enumerate_vertices(build_halfspace_system(c), threads).vertices)
                out.append(py::dict(py::arg("point") = to_strings(v.point), py::arg("active") = labels(v.active)));
            return out;
        },
        py::arg("config"), py::arg("threads") = 1);
    m.def("closed_form_vertices", [](const PairConfig& c) {
        const auto r = closed_form_vertices(c);
        py::list vertices;
        for (std::size_t i = 0; i < r.vertices.size(); ++i)
            vertices.append(py::dict(py::arg("point") = to_strings(r.vertices.vertices[i].point),
                                     py::arg("provenance") = r.provenance[i]));
        return py::dict(py::arg("branch") = std::string(to_string(r.branch)), py::arg("vertices") = vertices);
    });
    m.def("interior_vertex", [](const PairConfig& c) -> std::optional<std::vector<std::string>> {
        const auto a = interior_vertex(c);
        if (!a) return std::nullopt;
        return to_strings(*a);
    });
    m.def("kss_interval_k1", [](const PairConfig& c) { return kss_interval_k1(c).str(); });

    m.def(
        "compute",
        [](const PairConfig& c, bool closed_form, bool certify, unsigned threads) {
            return serialize(run_pipeline(c, pipeline(closed_form, certify, threads)));
        },
        py::arg("config"), py::arg("closed_form") = true, py::arg("certify") = true, py::arg("threads") = 1,
        "Full pipeline; returns the result document as JSON text.");
    m.def(
        "render_svg",
        [](const PairConfig& c, int scale) { return render_polygon_svg(run_pipeline(c, pipeline(false, false, 1)), scale); },
        py::arg("config"), py::arg("scale") = 400);
    m.def("render_off", [](const PairConfig& c) { return render_polytope_mesh(run_pipeline(c, pipeline(false, false, 1))); });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
