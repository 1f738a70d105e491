#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyred/commands.hpp"
#include "polyred/numerics.hpp"
#include "polyred/query.hpp"
#include "polyred/reducer.hpp"
#include "polyred/render.hpp"

namespace py = pybind11;
using namespace polyred;

namespace {

template <typename Command>
std::pair<int, std::string> run(Command command) {
    std::ostringstream out;
    const int code = command(out);
    return {code, out.str()};
}

}  // namespace

PYBIND11_MODULE(_polyred, m) {
    m.doc() = "Exact reduction of polylogarithmic integrals to zeta values";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def(
        "reduce",
        [](const std::string& target, const std::string& format, bool trace) {
            QueryOptions opt;
            opt.format = parse_format(format);
            opt.trace = trace;
            const auto q = parse_query(target, QueryKind::Reduce, opt);
            return run([&](std::ostream& out) { return cmd_reduce(q, out); }).second;
        },
        py::arg("target"), py::arg("format") = "text", py::arg("trace") = false);

    m.def(
        "verify_json",
        [](const std::string& target, double tolerance) {
            QueryOptions opt;
            opt.format = Format::Json;
            opt.tolerance = tolerance;
            const auto q = parse_query(target, QueryKind::Verify, opt);
            return run([&](std::ostream& out) { return cmd_verify(q, out); }).second;
        },
        py::arg("target"), py::arg("tolerance") = 1e-8);

    m.def(
        "tables_json",
        [](const std::string& range) {
            const auto tables = parse_table_range(range);
            return run([&](std::ostream& out) { return cmd_tables(tables, Format::Json, out); }).second;
        },
        py::arg("range") = "1..9");

    m.def(
        "kappa_num",
        [](int r, int q) {
            const auto v = numerics::kappa_num(r, q);
            return std::pair<double, double>(static_cast<double>(v.value), static_cast<double>(v.error));
        },
        py::arg("r"), py::arg("q"));

    m.def(
        "evaluate",
        [](const std::string& expr) {
            const auto e = parse_expr(expr);
            return static_cast<double>(numerics::eval_expr_num(e, numerics::kappa_env_for(e)).value);
        },
        py::arg("expr"));
}
