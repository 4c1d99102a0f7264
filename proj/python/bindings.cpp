#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lapvertex/analysis.hpp"
#include "lapvertex/closed_forms.hpp"
#include "lapvertex/coulson.hpp"
#include "lapvertex/corpus.hpp"
#include "lapvertex/geometry.hpp"
#include "lapvertex/spectral.hpp"

namespace py = pybind11;
using namespace lapvertex;

namespace {

MatrixKind kind_of(const std::string& name) { return parse_matrix_kind(name); }

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.numerator(), r.denominator());
}

py::dict certificate_dict(const InequalityCertificate& c) {
    py::dict d;
    d["theorem"] = std::string(to_string(c.theorem));
    d["scope"] = std::string(to_string(c.scope));
    d["v"] = c.v >= 0 ? py::object(py::int_(c.v)) : py::none();
    d["w"] = c.w >= 0 ? py::object(py::int_(c.w)) : py::none();
    d["kind"] = c.kind ? py::object(py::str(std::string(to_string(*c.kind)))) : py::none();
    d["lhs"] = c.lhs;
    d["relation"] = std::string(to_string(c.relation));
    d["rhs"] = c.rhs;
    d["slack"] = c.slack;
    d["equality_predicate"] = c.equality_predicate ? py::object(py::bool_(*c.equality_predicate)) : py::none();
    d["passed"] = c.passed;
    return d;
}

py::list certificate_list(const Certificates& certs) {
    py::list out;
    for (const auto& c : certs) out.append(certificate_dict(c));
    return out;
}

py::list verify(const Graph& g, double tol) {
    Certificates all;
    auto add = [&](const Certificates& c) { all.insert(all.end(), c.begin(), c.end()); };
    for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian})
        add(check_cs_agm(g, kind, tol));
    add(check_mcclelland(g, tol));
    add(check_laplacian_lower(g, tol));
    add(check_nle_bounds(g, tol));
    add(check_randic_theorems(g, tol));
    for (const auto& chain : bound_improvement_report(g, tol)) add(chain.certificates);
    if (g.n() <= kDualCheegerMaxVertices) {
        const auto geo = check_geometric_bounds(g, tol);
        add(geo.certificates);
        add(check_spectral_sandwiches(g, geo, tol));
    }
    return certificate_list(all);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vertex energies of graph matrices";

    py::register_exception<Error>(m, "LapvertexError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return build_graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("degrees", &Graph::degrees)
        .def("neighbors", &Graph::neighbors)
        .def("fingerprint", [](const Graph& g) { return fingerprint(g); })
        .def("to_edge_list", [](const Graph& g) { return write_edge_list(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
        });

    m.def("star", &star);
    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("complete", &complete);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("from_spec", [](const std::string& spec) { return parse_generator_spec(spec).build(); });
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(std::string_view(text)); });
    m.def("random_connected", [](int n, double p, std::uint64_t seed) { return random_connected(n, p, seed); },
          py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def("eigenvalues", [](const Graph& g, const std::string& kind) {
        return eig_sym(matrix(g, kind_of(kind))).eigenvalues;
    }, py::arg("g"), py::arg("kind") = "laplacian");
    m.def("vertex_energies", [](const Graph& g, const std::string& kind, const std::string& method) {
        const MatrixKind k = kind_of(kind);
        if (method == "spectral") return energy_report(g, k).energies;
        if (method == "coulson") return coulson_report(g, k).energies;
        if (method == "closed_form") {
            for (Family family : {Family::Star, Family::Path}) {
                if (g == generator(family, std::vector<int>{g.n()}) && has_closed_form(family, k))
                    return closed_form_energies(family, g.n(), k);
            }
            throw Error(ErrorKind::BadParams, "no closed form for this graph and kind");
        }
        throw Error(ErrorKind::BadParams, "unknown method '" + method + "'");
    }, py::arg("g"), py::arg("kind") = "laplacian", py::arg("method") = "spectral");
    m.def("coulson_energy", [](const Graph& g, Vertex v, const std::string& kind) {
        return coulson_energy(g, kind_of(kind), v);
    }, py::arg("g"), py::arg("v"), py::arg("kind") = "laplacian");
    m.def("edge_energy", [](const Graph& g, Vertex v, Vertex w, const std::string& kind) {
        return edge_energy(g, kind_of(kind), v, w);
    }, py::arg("g"), py::arg("v"), py::arg("w"), py::arg("kind") = "laplacian");

    m.def("star_laplacian_energy", &star_laplacian_energy);
    m.def("star_normalized_energy", &star_normalized_energy);
    m.def("path_laplacian_energy", &path_laplacian_energy);

    m.def("cheeger", [](const Graph& g) {
        const auto r = cheeger(g);
        return py::make_tuple(fraction(r.value), r.witness);
    });
    m.def("dual_cheeger", [](const Graph& g) {
        const auto r = dual_cheeger(g);
        return py::make_tuple(fraction(r.value), r.first, r.second);
    });
    m.def("wasserstein1", [](const Graph& g, Vertex v, Vertex w) { return fraction(wasserstein1(g, v, w)); });
    m.def("curvature", [](const Graph& g) {
        py::dict out;
        for (const auto& e : ollivier_ricci(g).edges) out[py::make_tuple(e.v, e.w)] = fraction(e.kappa);
        return out;
    });

    m.def("randic", [](const Graph& g) {
        const auto r = randic(g);
        return py::make_tuple(r.r_half, r.r_one);
    });
    m.def("verify", &verify, py::arg("g"), py::arg("tol") = kCertificateTolerance,
          "Every inequality certificate for the graph; geometric ones only up to 15 vertices.");
    m.def("conjecture_margin", [](const Graph& g) {
        const auto r = conjecture_record(g);
        return py::make_tuple(r.margin, r.worst_vertex, r.violated);
    });
}
