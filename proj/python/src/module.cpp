#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apc/bignum/decimal.hpp"
#include "apc/bignum/elementary.hpp"
#include "apc/errors.hpp"
#include "apc/runtime/session.hpp"
#include "apc/service/protocol.hpp"
#include "apc/viz/chart.hpp"

namespace py = pybind11;
using namespace apc;

namespace {

py::list items_to_list(const std::vector<OutputItem>& items) {
    py::list out;
    for (const auto& item : items) out.append(py::make_tuple(std::string(tag_name(item.tag)), item.text));
    return out;
}

std::string pi_digits(std::uint32_t words) {
    if (words == 0 || words > kMaxWords) throw py::value_error("words must be between 1 and " + std::to_string(kMaxWords));
    PrecisionContext ctx{words, 8 * words};
    return format_decimal(pi_bbp(ctx), ctx.output_digits);
}

}  // namespace

PYBIND11_MODULE(_apcalc, m) {
    m.doc() = "Arbitrary-precision calculator kernel";

    py::class_<Session>(m, "Session")
        .def(py::init<>())
        .def(
            "execute",
            [](Session& s, const std::string& source, bool stop_on_error) {
                std::vector<OutputItem> items;
                {
                    py::gil_scoped_release release;
                    items = s.execute(source, stop_on_error);
                }
                return items_to_list(items);
            },
            py::arg("source"), py::arg("stop_on_error") = false,
            "Run source and return a list of (tag, text) tuples.")
        .def("complete", &Session::complete, py::arg("fragment"))
        .def(
            "objects",
            [](const Session& s, const std::string& group) {
                py::list out;
                for (const auto& e : s.objects(group)) out.append(py::make_tuple(e.group, e.name, e.line));
                return out;
            },
            py::arg("group") = "")
        .def("help", &Session::help, py::arg("topic") = "")
        .def("set_precision", &Session::set_precision, py::arg("words"))
        .def("set_output_digits", &Session::set_output_digits, py::arg("digits"))
        .def_property_readonly("words", [](const Session& s) { return s.context().words; })
        .def_property_readonly("bits", [](const Session& s) { return s.context().bits(); })
        .def_property_readonly("output_digits", [](const Session& s) { return s.context().output_digits; })
        .def("chart_names", &Session::chart_names)
        .def("report_names", &Session::report_names)
        .def(
            "chart_svg",
            [](const Session& s, const std::string& name) {
                ChartPtr c = s.chart(name);
                if (!c) throw py::key_error(name);
                return viz::render_svg(*c);
            },
            py::arg("name"))
        .def(
            "report",
            [](const Session& s, const std::string& name) {
                ReportPtr r = s.report(name);
                if (!r) throw py::key_error(name);
                return py::make_tuple(std::string(report::report_kind_name(r->kind)), r->body);
            },
            py::arg("name"), "Return (kind, document) for a report.")
        .def_property_readonly("transcript", &Session::transcript)
        .def(
            "interrupt", [](Session& s) { s.interrupt_flag().store(true); },
            "Make the running statement fail with Interrupted; safe from another thread.");

    py::class_<service::ProtocolHandler>(m, "ProtocolHandler")
        .def(py::init<>())
        .def(
            "handle",
            [](service::ProtocolHandler& h, const std::string& line) {
                py::gil_scoped_release release;
                return h.handle_text(line);
            },
            py::arg("line"), "Answer one JSON request line with one JSON response line.");

    m.def("pi", &pi_digits, py::arg("words") = 8, "Digits of pi at the given precision in 32-bit words.");
}
