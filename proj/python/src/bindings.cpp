#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgp/certificates.hpp"
#include "sgp/checker.hpp"
#include "sgp/errors.hpp"
#include "sgp/generators.hpp"
#include "sgp/io.hpp"

namespace py = pybind11;
using sgp::io::json;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string check(const std::string& doc, const std::string& mode, std::size_t max_naive, unsigned workers) {
    sgp::PointSet points = sgp::io::parse_point_set_text(doc);
    sgp::NaiveOptions naive;
    naive.max_points = max_naive;
    sgp::ReducedOptions reduced;
    reduced.workers = workers;
    if (mode == "naive") {
        return sgp::io::to_json(sgp::check_sgp_naive(points, naive)).dump();
    }
    if (mode == "reduced") {
        return sgp::io::to_json(sgp::check_sgp_reduced(points, reduced)).dump();
    }
    if (mode == "both") {
        sgp::Verdict n = sgp::check_sgp_naive(points, naive);
        sgp::Verdict r = sgp::check_sgp_reduced(points, reduced);
        return json{{"reduced", sgp::io::to_json(r)}, {"naive", sgp::io::to_json(n)}, {"agree", n.status == r.status}}
            .dump();
    }
    throw sgp::DomainError("mode must be 'reduced', 'naive' or 'both'");
}

std::string general_position(const std::string& doc) {
    sgp::PointSet points = sgp::io::parse_point_set_text(doc);
    sgp::GeneralPositionResult gp = sgp::is_general_position(points);
    std::vector<std::size_t> labels;
    for (auto i : gp.witness) {
        labels.push_back(i + 1);
    }
    return json{{"general_position", gp.in_general_position},
                {"gp_polynomial", sgp::to_string(sgp::gp_polynomial(points))},
                {"witness", labels}}
        .dump();
}

std::string intersection(const std::string& doc, const std::vector<std::vector<std::size_t>>& family) {
    sgp::PointSet points = sgp::io::parse_point_set_text(doc);
    return json{{"intersection_dim", sgp::intersection_dim(points, sgp::SubsetFamily::from_labels(family))}}.dump();
}

std::string certify(const std::string& doc, const std::vector<std::vector<std::size_t>>& labels) {
    sgp::PointSet points = sgp::io::parse_point_set_text(doc);
    sgp::SubsetFamily family = sgp::SubsetFamily::from_labels(labels);
    const long d = static_cast<long>(points.dim());
    const long eps = family.deficiency_sum(points.dim());
    if (eps == d) {
        sgp::Case1Certificate c = sgp::case1_certificate(points, family);
        return json{{"case", "I"},
                    {"det_A", sgp::to_string(c.value)},
                    {"point", c.point ? sgp::io::to_json(*c.point) : json(nullptr)}}
            .dump();
    }
    sgp::Case2Certificate c = sgp::case2_certificate(points, family);
    return json{{"case", "II"},
                {"P", c.value ? json(sgp::to_string(*c.value)) : json(nullptr)},
                {"rank_A_minus", c.rank_a_minus},
                {"q", c.q}}
        .dump();
}

std::string count(std::size_t n, std::size_t d, bool naive, std::size_t max_naive) {
    return sgp::io::to_json(sgp::count_conditions(n, d, naive, max_naive)).dump();
}

std::string moment_curve(std::size_t d, const std::vector<std::string>& params) {
    std::vector<sgp::Rational> t;
    for (const auto& p : params) {
        t.push_back(sgp::parse_rational(p));
    }
    return sgp::io::to_json(sgp::gen_moment_curve(d, t)).dump();
}

std::string hexagon() {
    return sgp::io::to_json(sgp::gen_hexagon_counterexample()).dump();
}

std::string random_points(std::size_t d, std::size_t n, std::uint64_t seed, std::uint64_t denom_bound) {
    return sgp::io::to_json(sgp::gen_random_rational(d, n, seed, denom_bound)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact strong-general-position checks (compiled core)";

    py::register_exception<sgp::OracleBoundError>(m, "OracleBoundError");
    py::register_exception<sgp::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<sgp::DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<sgp::DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("tverberg_number", &sgp::tverberg_number, py::arg("d"), py::arg("r"));
    m.def("clause_c_applicable", &sgp::clause_c_applicable, py::arg("d"), py::arg("r"), py::arg("n"));
    m.def("check", &check, py::arg("doc"), py::arg("mode") = "reduced",
          py::arg("max_naive") = sgp::kDefaultOracleBound, py::arg("workers") = 1U,
          py::call_guard<py::gil_scoped_release>());
    m.def("general_position", &general_position, py::arg("doc"));
    m.def("intersection_dim", &intersection, py::arg("doc"), py::arg("family"));
    m.def("certify", &certify, py::arg("doc"), py::arg("family"));
    m.def("count_conditions", &count, py::arg("n"), py::arg("d"), py::arg("naive") = false,
          py::arg("max_naive") = sgp::kDefaultOracleBound, py::call_guard<py::gil_scoped_release>());
    m.def("gen_moment_curve", &moment_curve, py::arg("d"), py::arg("params"));
    m.def("gen_hexagon_counterexample", &hexagon);
    m.def("gen_random_rational", &random_points, py::arg("d"), py::arg("n"), py::arg("seed"),
          py::arg("denom_bound"));
}
