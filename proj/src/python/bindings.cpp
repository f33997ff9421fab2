/*
 *   Copyright 2026 The pgact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings: documents, commands and their reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pgact/commands.hpp"
#include "pgact/document.hpp"

namespace py = pybind11;

namespace {

template <class T>
std::vector<std::string> names_of(const std::vector<T>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.name);
  return out;
}

pgact::LRConvention parse_convention(const std::string& s) {
  if (s == "commuting") return pgact::LRConvention::commuting;
  if (s == "as-printed" || s == "as_printed") return pgact::LRConvention::as_printed;
  throw pgact::CommandError("unknown LR convention '" + s + "'");
}

py::list checks_of(const pgact::Report& r) {
  py::list out;
  for (const auto& c : r.checks()) {
    py::dict d;
    d["tag"] = c.tag;
    d["description"] = c.description;
    d["instances"] = c.instances;
    d["failures"] = c.failures;
    d["passed"] = c.passed();
    d["witnesses"] = c.witnesses;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for partial groupoid actions on semicategories";

  static py::exception<pgact::ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<pgact::CommandError> command_error(m, "CommandError", PyExc_RuntimeError);
  // ParseError carries its location as attributes.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pgact::ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error)(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    } catch (const pgact::CommandError& e) {
      py::set_error(command_error, e.what());
    }
  });

  py::class_<pgact::Document>(m, "Document")
      .def_property_readonly("field", [](const pgact::Document& d) { return d.field.name(); })
      .def_property_readonly("groupoids", [](const pgact::Document& d) { return names_of(d.groupoids); })
      .def_property_readonly("semicategories", [](const pgact::Document& d) { return names_of(d.semicategories); })
      .def_property_readonly("set_actions", [](const pgact::Document& d) { return names_of(d.set_actions); })
      .def_property_readonly("actions", [](const pgact::Document& d) { return names_of(d.actions); })
      .def_property_readonly("gradings", [](const pgact::Document& d) { return names_of(d.gradings); })
      .def_property_readonly("globalizations", [](const pgact::Document& d) { return names_of(d.globalizations); })
      .def("emit", &pgact::emit_document)
      .def("__eq__", [](const pgact::Document& a, const pgact::Document& b) { return a == b; })
      .def("__str__", &pgact::emit_document);

  py::class_<pgact::CommandResult>(m, "CommandResult")
      .def_property_readonly("ok", [](const pgact::CommandResult& r) { return r.report.ok(); })
      .def_property_readonly("failures", [](const pgact::CommandResult& r) { return r.report.failures(); })
      .def_property_readonly("checks", [](const pgact::CommandResult& r) { return checks_of(r.report); })
      .def_property_readonly("notes", [](const pgact::CommandResult& r) { return r.report.notes(); })
      .def_property_readonly("summary", [](const pgact::CommandResult& r) { return r.summary; })
      .def_property_readonly("emitted", [](const pgact::CommandResult& r) { return r.emitted; })
      .def("report_text", [](const pgact::CommandResult& r) { return r.report.to_text(); })
      .def("report_json", [](const pgact::CommandResult& r) { return r.report.to_json(); });

  m.def("parse_document", [](const std::string& text, const std::string& field) { return pgact::parse_document(text, field); },
        py::arg("text"), py::arg("field") = "");
  m.def("emit_document", &pgact::emit_document, py::arg("document"));
  m.def("command_names", &pgact::command_names);
  m.def(
      "run_command",
      [](const std::string& command, const pgact::Document& doc, const std::string& action, const std::string& grading,
         const std::string& globalization, bool strict_ideals, const std::string& convention) {
        pgact::CommandOptions opts;
        opts.action = action;
        opts.grading = grading;
        opts.globalization = globalization;
        opts.strict_ideals = strict_ideals;
        opts.convention = parse_convention(convention);
        py::gil_scoped_release release;
        return pgact::run_command(command, doc, opts);
      },
      py::arg("command"), py::arg("document"), py::kw_only(), py::arg("action") = "", py::arg("grading") = "",
      py::arg("globalization") = "", py::arg("strict_ideals") = false, py::arg("convention") = "commuting");
}
