#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wsadist/cost_model.hpp"
#include "wsadist/distance.hpp"
#include "wsadist/error.hpp"
#include "wsadist/normalizer.hpp"
#include "wsadist/table_detect.hpp"
#include "wsadist/utf8.hpp"

namespace py = pybind11;
using namespace wsadist;

namespace {

std::string char_repr(char32_t c) {
    std::string s;
    utf8::append(s, c);
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trailing-whitespace-agnostic edit distance and plaintext table detection";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());

    py::class_<CostModel>(m, "CostModel")
        .def("indel", &CostModel::indel, py::arg("c"))
        .def("replace", &CostModel::replace, py::arg("a"), py::arg("b"))
        .def("to_whitespace", &CostModel::to_whitespace, py::arg("c"))
        .def("from_whitespace", &CostModel::from_whitespace, py::arg("c"))
        .def_property_readonly("whitespace_char",
                               [](const CostModel& model) { return char_repr(model.whitespace_char()); })
        .def_property_readonly("indel_default", &CostModel::indel_default)
        .def_property_readonly("replace_default", &CostModel::replace_default)
        .def_property_readonly("symmetric", &CostModel::symmetric)
        .def("__eq__", [](const CostModel& a, const CostModel& b) { return a == b; })
        .def("__repr__", [](const CostModel& model) {
            return "<CostModel indel_default=" + std::to_string(model.indel_default()) +
                   " replace_default=" + std::to_string(model.replace_default()) + ">";
        });

    m.def("unit_model", &unit_model);
    m.def("appendix_model", &appendix_model);
    m.def("load_model", [](const std::string& text) { return load_model(text); }, py::arg("text"));
    m.def("load_model_file", &load_model_file, py::arg("path"));
    m.def("serialize", &serialize, py::arg("model"));

    py::enum_<NormalizationMode>(m, "NormalizationMode")
        .value("SIMPLE", NormalizationMode::Simple)
        .value("CASED", NormalizationMode::Cased)
        .value("NONE", NormalizationMode::None);

    m.def("normalize_line",
          [](const std::string& line, NormalizationMode mode) { return normalize_line(std::string_view(line), mode); },
          py::arg("line"), py::arg("mode") = NormalizationMode::Cased);
    m.def("expand_tabs",
          [](const std::string& line, std::size_t tab_width) {
              return utf8::encode(expand_tabs(utf8::decode(line), tab_width));
          },
          py::arg("line"), py::arg("tab_width") = 8);

    py::class_<DistanceLimits>(m, "DistanceLimits")
        .def(py::init<>())
        .def_readwrite("max_cells", &DistanceLimits::max_cells)
        .def_readwrite("naive_max_total", &DistanceLimits::naive_max_total)
        .def_readwrite("recursive_max_length", &DistanceLimits::recursive_max_length);

    py::enum_<Algorithm>(m, "Algorithm")
        .value("STANDARD", Algorithm::Standard)
        .value("WS_AGNOSTIC", Algorithm::WsAgnostic)
        .value("NAIVE_ORACLE", Algorithm::NaiveOracle)
        .value("RECURSIVE_REFERENCE", Algorithm::RecursiveReference);

    py::class_<DistanceResult>(m, "DistanceResult")
        .def_readonly("cost", &DistanceResult::cost)
        .def_readonly("algorithm", &DistanceResult::algorithm)
        .def_readonly("len1", &DistanceResult::len1)
        .def_readonly("len2", &DistanceResult::len2);

    using StrCost = Cost (*)(std::string_view, std::string_view, const CostModel&, const DistanceLimits&);
    m.def("levenshtein_standard", static_cast<StrCost>(&levenshtein_standard), py::arg("s1"),
          py::arg("s2"), py::arg("model") = unit_model(), py::arg("limits") = DistanceLimits{},
          py::call_guard<py::gil_scoped_release>());
    m.def("levenshtein_ws_agnostic", static_cast<StrCost>(&levenshtein_ws_agnostic), py::arg("s1"),
          py::arg("s2"), py::arg("model") = unit_model(), py::arg("limits") = DistanceLimits{},
          py::call_guard<py::gil_scoped_release>());
    m.def("ws_agnostic_naive",
          [](std::string_view s1, std::string_view s2, const CostModel& model,
             const DistanceLimits& limits, std::optional<std::size_t> pad_bound) {
              return ws_agnostic_naive(s1, s2, model, limits, pad_bound);
          },
          py::arg("s1"), py::arg("s2"), py::arg("model") = unit_model(),
          py::arg("limits") = DistanceLimits{}, py::arg("pad_bound") = py::none());
    m.def("ws_agnostic_recursive_unit",
          [](std::string_view s1, std::string_view s2, const DistanceLimits& limits) {
              return ws_agnostic_recursive_unit(s1, s2, limits);
          },
          py::arg("s1"), py::arg("s2"), py::arg("limits") = DistanceLimits{});
    m.def("compute_distance",
          [](Algorithm algorithm, std::string_view s1, std::string_view s2, const CostModel& model,
             const DistanceLimits& limits) { return compute_distance(algorithm, s1, s2, model, limits); },
          py::arg("algorithm"), py::arg("s1"), py::arg("s2"), py::arg("model") = unit_model(),
          py::arg("limits") = DistanceLimits{});

    py::class_<TableRegion>(m, "TableRegion")
        .def_readonly("start_line", &TableRegion::start_line)
        .def_readonly("end_line", &TableRegion::end_line)
        .def_readonly("score", &TableRegion::score)
        .def("__repr__", [](const TableRegion& r) {
            return "<TableRegion " + std::to_string(r.start_line) + ".." + std::to_string(r.end_line) +
                   " score=" + std::to_string(r.score) + ">";
        });

    py::class_<DetectConfig>(m, "DetectConfig")
        .def(py::init<>())
        .def_readwrite("threshold", &DetectConfig::threshold)
        .def_readwrite("min_rows", &DetectConfig::min_rows)
        .def_readwrite("mode", &DetectConfig::mode)
        .def_readwrite("model", &DetectConfig::model)
        .def_readwrite("tab_width", &DetectConfig::tab_width)
        .def_readwrite("limits", &DetectConfig::limits);

    m.def("row_similarity",
          [](std::string_view a, std::string_view b, const CostModel& model) {
              return row_similarity(a, b, model);
          },
          py::arg("line1"), py::arg("line2"), py::arg("model") = appendix_model());
    m.def("detect_tables", &detect_tables, py::arg("lines"), py::arg("config") = DetectConfig{},
          py::call_guard<py::gil_scoped_release>());
}
