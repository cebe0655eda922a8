#include "wittforge/errors.hpp"
#include "wittforge/json_io.hpp"
#include "wittforge/selftest.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wittforge;
using json_io::json;

namespace {

// Requests and results cross the boundary as JSON text; the Python side
// wraps them with the json module.
std::string dump(const json& j) { return j.dump(); }
json load(const std::string& s) { return json_io::parse(s); }

long bound_or_default(std::optional<long> b) { return b ? *b : default_search_bound(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for quadratic forms, quaternion algebras and degree-12 involutions over Q";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("squarefree_part", [](const std::string& r) { return squarefree_part(parse_rational(r)).str(); });
    m.def("hilbert_symbol", [](const std::string& a, const std::string& b, const std::string& place) {
        return hilbert_symbol(parse_rational(a), parse_rational(b), Place::parse(place));
    });
    m.def("brauer_class", [](const std::string& a, const std::string& b) {
        return dump(json_io::to_json(brauer_from_symbol(squarefree_part(parse_rational(a)),
                                                        squarefree_part(parse_rational(b)))));
    });

    m.def("qf_invariants", [](const std::string& form, std::optional<long> bound) {
        return dump(json_io::invariants_report(json_io::quadform_from_json(load(form)), bound_or_default(bound)));
    }, py::arg("form"), py::arg("bound") = py::none());
    m.def("qf_decompose12", [](const std::string& form, std::optional<long> bound) {
        return dump(json_io::decompose12_report(json_io::quadform_from_json(load(form)), bound_or_default(bound)));
    }, py::arg("form"), py::arg("bound") = py::none());
    m.def("qf_hyper_over", [](const std::string& form, const std::string& d) {
        return dump(json_io::hyper_over_report(json_io::quadform_from_json(load(form)),
                                               squarefree_part(parse_rational(d))));
    });
    m.def("alg_f3", [](const std::string& pres, std::optional<long> bound) {
        return dump(json_io::f3_report(json_io::presentation_from_json(load(pres)), bound_or_default(bound)));
    }, py::arg("presentation"), py::arg("bound") = py::none());
    m.def("alg_exists", [](const std::string& h1, const std::string& h2, std::optional<long> bound) {
        return dump(json_io::exists_report(json_io::algebra_from_json(load(h1)), json_io::algebra_from_json(load(h2)),
                                           bound_or_default(bound)));
    }, py::arg("h1"), py::arg("h2"), py::arg("bound") = py::none());
    m.def("alg_additive", [](const std::string& pres, std::optional<long> bound) {
        return dump(json_io::additive_report(json_io::presentation_from_json(load(pres)), bound_or_default(bound)));
    }, py::arg("presentation"), py::arg("bound") = py::none());
    m.def("val_obstruction", [](const std::string& slots) {
        return dump(json_io::obstruction_report(json_io::slots_from_json(load(slots))));
    });
    m.def("selftest", [](std::uint64_t seed, std::size_t count) {
        py::gil_scoped_release release;
        return dump(selftest::run_selftest(seed, count));
    }, py::arg("seed") = 0, py::arg("count") = 20);
}
