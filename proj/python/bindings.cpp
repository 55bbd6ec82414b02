#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cramer_lgv/certificate_check.hpp"
#include "cramer_lgv/cli.hpp"
#include "cramer_lgv/cramer.hpp"
#include "cramer_lgv/io.hpp"

namespace py = pybind11;
using namespace cramer_lgv;

namespace {

// Scalars cross the boundary as fractions.Fraction; ints, Fractions and
// "p/q" strings are accepted on the way in, floats are refused.
py::object to_py(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

Rational from_py(const py::handle& obj) {
    if (py::isinstance<py::float_>(obj) || py::isinstance<py::bool_>(obj)) {
        throw py::type_error("expected int, Fraction or \"p/q\" string, got " +
                             std::string(py::str(py::type::handle_of(obj).attr("__name__"))));
    }
    return Rational::parse(std::string(py::str(obj)));
}

std::vector<Rational> vector_from_py(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& item : seq) out.push_back(from_py(item));
    return out;
}

Matrix matrix_from_py(const py::sequence& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) out.push_back(vector_from_py(row.cast<py::sequence>()));
    return Matrix::from_rows(out);
}

py::list to_py(std::span<const Rational> values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

py::list to_py(const Matrix& m) {
    py::list out;
    for (std::size_t r = 0; r < m.size(); ++r) out.append(to_py(m.row(r)));
    return out;
}

nlohmann::json json_from_py(const py::object& obj) {
    // Fractions become "p/q" strings; floats stay floats and are rejected by the parser.
    const auto text =
        py::module_::import("json").attr("dumps")(obj, py::arg("default") = py::module_::import("builtins").attr("str"))
            .cast<std::string>();
    return nlohmann::json::parse(text);
}

py::object json_to_py(const OrderedJson& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

std::vector<VertexId> ids_from_py(const std::vector<std::string>& labels) { return to_vertex_ids(labels); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Cramer's rule and vertex-disjoint path-system verification.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.attr("DEFAULT_CAP") = kDefaultCap;

    m.def("det_leibniz", [](const py::sequence& a) { return to_py(det_leibniz(matrix_from_py(a))); },
          py::arg("A"));
    m.def("det_bareiss", [](const py::sequence& a) { return to_py(det_bareiss(matrix_from_py(a))); },
          py::arg("A"));
    m.def(
        "solve_cramer",
        [](const py::sequence& a, const py::sequence& b) {
            return to_py(solve_cramer(make_system(matrix_from_py(a), vector_from_py(b))));
        },
        py::arg("A"), py::arg("b"));
    m.def(
        "solve_gauss",
        [](const py::sequence& a, const py::sequence& b) {
            return to_py(solve_gauss(make_system(matrix_from_py(a), vector_from_py(b))));
        },
        py::arg("A"), py::arg("b"));
    m.def(
        "replace_column",
        [](const py::sequence& a, std::size_t column, const py::sequence& values) {
            return to_py(replace_column(matrix_from_py(a), column, vector_from_py(values)));
        },
        py::arg("A"), py::arg("column"), py::arg("values"), "Replace a 0-based column.");

    m.def(
        "path_matrix",
        [](const py::object& graph, const std::vector<std::string>& sources, const std::vector<std::string>& sinks) {
            const auto g = graph_from_json(json_from_py(graph));
            return to_py(path_matrix(g, ids_from_py(sources), ids_from_py(sinks)).entries);
        },
        py::arg("graph"), py::arg("sources"), py::arg("sinks"));
    m.def(
        "verify_lgv",
        [](const py::object& graph, const std::vector<std::string>& sources, const std::vector<std::string>& sinks,
           std::size_t cap) {
            const auto g = graph_from_json(json_from_py(graph));
            return json_to_py(to_json(verify_lgv(g, ids_from_py(sources), ids_from_py(sinks), cap)));
        },
        py::arg("graph"), py::arg("sources"), py::arg("sinks"), py::arg("cap") = kDefaultCap);
    m.def(
        "certify",
        [](const py::sequence& a, const py::sequence& b, std::size_t index, std::size_t cap) {
            if (index == 0) throw Error(ErrorCode::IndexOutOfRange, "index is 1-based");
            const auto sys = make_system(matrix_from_py(a), vector_from_py(b));
            return json_to_py(to_json(certify(sys, index - 1, CertifyOptions{.cap = cap})));
        },
        py::arg("A"), py::arg("b"), py::arg("index"), py::arg("cap") = kDefaultCap,
        "Certificate document for the 1-based unknown `index`.");
    m.def(
        "check_certificate",
        [](const py::object& doc) { return check_certificate(json_from_py(doc)).failures; }, py::arg("certificate"),
        "Independent re-check; returns the list of failures (empty when valid).");
    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "cramer-lgv");
            std::ostringstream out, err;
            const int code = cli::run(std::move(args), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
