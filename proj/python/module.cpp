#include "topskit/config.hpp"
#include "topskit/error.hpp"
#include "topskit/rbw.hpp"
#include "topskit/report.hpp"
#include "topskit/svg.hpp"
#include "topskit/tops.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace topskit;

namespace {

// Reports cross the boundary as JSON so exact numbers stay strings.
py::object to_py(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_topskit, m)
{
    m.doc() = "Exact fractal-top computations for graph IFSs on the line";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<UncertifiedHullError>(m, "UncertifiedHullError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

    py::class_<ExactReal>(m, "ExactReal")
        .def(py::init([](const std::string& s) { return ExactReal::parse(s); }))
        .def(py::init([](long v) { return ExactReal(v); }))
        .def("sign", &ExactReal::sign)
        .def("is_rational", &ExactReal::is_rational)
        .def("__float__", &ExactReal::approx)
        .def("__str__", &ExactReal::to_string)
        .def("__repr__", [](const ExactReal& x) { return "ExactReal('" + x.to_string() + "')"; })
        .def("__add__", [](const ExactReal& a, const ExactReal& b) { return a + b; })
        .def("__sub__", [](const ExactReal& a, const ExactReal& b) { return a - b; })
        .def("__mul__", [](const ExactReal& a, const ExactReal& b) { return a * b; })
        .def("__truediv__", [](const ExactReal& a, const ExactReal& b) { return a / b; })
        .def("__radd__", [](const ExactReal& a, const ExactReal& b) { return b + a; })
        .def("__rsub__", [](const ExactReal& a, const ExactReal& b) { return b - a; })
        .def("__rmul__", [](const ExactReal& a, const ExactReal& b) { return b * a; })
        .def("__rtruediv__", [](const ExactReal& a, const ExactReal& b) { return b / a; })
        .def("__neg__", [](const ExactReal& a) { return -a; })
        .def("__pow__", [](const ExactReal& a, unsigned n) { return a.pow(n); })
        .def("__eq__", [](const ExactReal& a, const ExactReal& b) { return a == b; })
        .def("__lt__", [](const ExactReal& a, const ExactReal& b) { return a < b; })
        .def("__le__", [](const ExactReal& a, const ExactReal& b) { return a <= b; })
        .def("__gt__", [](const ExactReal& a, const ExactReal& b) { return a > b; })
        .def("__ge__", [](const ExactReal& a, const ExactReal& b) { return a >= b; })
        .def("__hash__", [](const ExactReal& a) { return py::hash(py::str(a.to_string())); });
    py::implicitly_convertible<std::string, ExactReal>();
    py::implicitly_convertible<long, ExactReal>();

    m.def("compare", [](const ExactReal& a, const ExactReal& b) { return to_string(compare(a, b)); });

    m.def("rbw_enumerate", [](const std::string& rho, std::size_t max_len) {
        return to_py(to_json(enumerate(RhoParam::parse(rho), max_len)));
    }, py::arg("rho"), py::arg("max_len"));
    m.def("rbw_endpoint", [](const std::string& word, const std::string& rho) {
        return endpoint(Word::parse(word), RhoParam::parse(rho));
    }, py::arg("word"), py::arg("rho"));
    m.def("is_reduced_banned", [](const std::string& word, const std::string& rho) {
        RbwCheck c = is_reduced_banned(Word::parse(word), RhoParam::parse(rho));
        py::dict d;
        d["reduced_banned"] = c.banned_reduced;
        d["failed"] = c.failed ? py::object(py::str(to_string(*c.failed))) : py::object(py::none());
        d["witness"] = c.witness ? py::object(py::str(c.witness->to_string())) : py::object(py::none());
        return d;
    }, py::arg("word"), py::arg("rho"));
    m.def("first_rbw_length", [](const std::string& rho, std::size_t cap) {
        return first_rbw_length(RhoParam::parse(rho), cap);
    }, py::arg("rho"), py::arg("cap") = 4096);

    py::class_<GraphIFS>(m, "GraphIFS")
        .def_static("from_json", [](const std::string& text) { return parse_config_text(text); })
        .def_static("load", [](const std::string& path) { return load_config(path); })
        .def_static("two_map", [](const std::string& rho) { return two_map_ifs(RhoParam::parse(rho)); })
        .def_property_readonly("vertices", &GraphIFS::vertex_names)
        .def_property_readonly("edge_count", &GraphIFS::edge_count)
        .def("to_json", [](const GraphIFS& g) { return to_py(config_to_json(g)); })
        .def("relabel", &GraphIFS::relabel)
        .def("validate", [](const GraphIFS& g) { return to_py(to_json(validate(g))); })
        .def("hulls", [](const GraphIFS& g) { return to_py(to_json(g, component_hulls(g))); })
        .def("classify", [](const GraphIFS& g) { return to_py(to_json(classify(g))); })
        .def("upsilon", [](const GraphIFS& g, std::size_t n) { return to_py(to_json(g, upsilon(g, n))); },
             py::arg("n") = 1)
        .def("invariance", [](const GraphIFS& g) { return to_py(to_json(g, invariance_verdict(g))); })
        .def("orderings", [](const GraphIFS& g, std::optional<std::uint64_t> budget) {
            OrderingOptions opt;
            opt.budget = budget;
            return to_py(to_json(ordering_search(g, opt)));
        }, py::arg("budget") = py::none())
        .def("top_address", [](const GraphIFS& g, const ExactReal& x, const std::string& vertex,
                               std::size_t depth) {
            return to_py(to_json(g, top_address(g, x, g.vertex(vertex), depth)));
        }, py::arg("point"), py::arg("vertex"), py::arg("depth"))
        .def("pi_point", [](const GraphIFS& g, const std::string& address) {
            return pi_point(g, InfiniteWord::parse(address));
        }, py::arg("address"))
        .def("address_interval", [](const GraphIFS& g, const std::string& path) {
            Interval i = address_interval(g, component_hulls(g), Word::parse(path));
            return py::make_tuple(i.lo, i.hi);
        }, py::arg("path"))
        .def("svg", [](const GraphIFS& g, std::optional<std::size_t> n) {
            ComponentHulls h = component_hulls(g);
            std::optional<UpsilonRegion> r;
            if (n)
                r = upsilon(g, certified_hulls(g), *n);
            return render_svg(g, h, r, "topskit");
        }, py::arg("upsilon_n") = py::none());
}
