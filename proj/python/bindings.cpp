#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dbases/engine.hpp"
#include "dbases/project_io.hpp"
#include "dbases/report.hpp"

namespace py = pybind11;
using namespace dbases;

namespace {

// Documents cross the boundary as JSON text; Python's own json module does
// the conversion on that side.
py::object to_py(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

json from_py(const py::handle& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return parse_json_text(text);
}

Project project_arg(const py::object& src) {
  if (py::isinstance<py::str>(src)) return load_project(src.cast<std::string>());
  if (py::hasattr(src, "__fspath__")) return load_project(py::str(src.attr("__fspath__")()).cast<std::string>());
  return project_from_json(from_py(src));
}

Overrides overrides_arg(const py::object& src) {
  if (src.is_none()) return {};
  return overrides_from_json(from_py(src));
}

std::vector<std::string> slot_ids(const Project& p) {
  std::vector<std::string> out;
  for (const auto& s : p.slots) out.push_back(s.id);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Expertise and self-awareness synergy analysis";

  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::list findings;
      for (const auto& f : e.report().findings) findings.append(py::make_tuple(f.path, f.message));
      py::object err = py::reinterpret_borrow<py::object>(validation_error)(e.report().to_string());
      err.attr("findings") = findings;
      PyErr_SetObject(validation_error.ptr(), err.ptr());
    }
  });

  m.def("catalog", [] { return to_py(catalog_to_json()); }, "Shipped patterns, criteria and registry.");

  m.def(
      "classify",
      [](const py::object& answers) {
        const auto a = answers_from_json(from_py(answers));
        json cats = json::array();
        for (auto k : classify(a)) cats.push_back(to_string(k));
        const auto traits = assess_traits(a);
        json t = json::object();
        if (traits.structurability) t["structurability"] = to_string(*traits.structurability);
        if (traits.tangibility) t["tangibility"] = to_string(*traits.tangibility);
        return to_py({{"categories", cats}, {"traits", t}});
      },
      py::arg("answers"));

  m.def(
      "load_project", [](const py::object& src) { return to_py(project_to_json(project_arg(src))); },
      py::arg("project"), "Validated project with defaults applied.");

  m.def(
      "validate",
      [](const py::object& src) {
        py::list out;
        try {
          project_arg(src);
        } catch (const ValidationError& e) {
          for (const auto& f : e.report().findings) out.append(py::make_tuple(f.path, f.message));
        }
        return out;
      },
      py::arg("project"), "List of (json_pointer, message) findings; empty when valid.");

  m.def(
      "enumerate",
      [](const py::object& src) {
        const auto p = project_arg(src);
        return to_py(candidates_to_json(enumerate(p), slot_ids(p)));
      },
      py::arg("project"));

  m.def(
      "analyze",
      [](const py::object& src, const py::object& overrides) {
        return to_py(analysis_to_json(whatif(project_arg(src), overrides_arg(overrides))));
      },
      py::arg("project"), py::arg("overrides") = py::none());

  m.def(
      "scatter_svg",
      [](const py::object& src, bool front, const py::object& overrides) {
        PlotSpec spec;
        spec.pareto_front = front;
        return scatter_svg(whatif(project_arg(src), overrides_arg(overrides)), spec);
      },
      py::arg("project"), py::arg("front") = true, py::arg("overrides") = py::none());

  m.def(
      "diagram_dot",
      [](const py::object& src, const std::optional<std::string>& candidate) {
        const auto p = project_arg(src);
        if (!candidate) return diagram_dot(p);
        const auto analysis = analyze(p);
        const auto* c = analysis.find(*candidate);
        if (!c) throw py::key_error("unknown candidate " + *candidate);
        return diagram_dot(p, c);
      },
      py::arg("project"), py::arg("candidate") = py::none());

  m.def(
      "table",
      [](const py::object& src, const std::string& format) {
        if (format != "csv" && format != "markdown") throw py::value_error("format must be csv or markdown");
        return table(analyze(project_arg(src)), format == "csv" ? TableFormat::csv : TableFormat::markdown);
      },
      py::arg("project"), py::arg("format") = "csv");
}
