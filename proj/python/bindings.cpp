#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modorder/hasse.hpp"
#include "modorder/io.hpp"

namespace py = pybind11;
using namespace modorder;

namespace {

  // JSON text; the Python side decodes it
  std::string ring_info(std::string const& spec) {
    return ring_summary(*load_ring(spec)).dump();
  }

  std::string module_info(std::string const& spec) {
    ModuleContext const ctx(load_module(spec));
    return module_summary(ctx).dump();
  }

  Relation relation(std::string const& t) {
    auto rel = parse_relation(t);
    if (!rel) {
      throw ConfigError("unknown relation '" + t + "'");
    }
    return *rel;
  }

  std::string order(std::string const& module_spec,
                    std::string const& rel,
                    Index              m1,
                    Index              m2) {
    ModuleContext const ctx(load_module(module_spec));
    return verdict_to_json(&ctx, decide(ctx, relation(rel), m1, m2)).dump();
  }

  std::string ring_order(std::string const& ring_spec,
                         std::string const& rel,
                         Index              a,
                         Index              b) {
    auto const R = load_ring(ring_spec);
    return verdict_to_json(nullptr, decide_ring(*R, relation(rel), a, b)).dump();
  }

  std::string matrix(std::string const& module_spec, std::string const& rel) {
    ModuleContext const  ctx(load_module(module_spec));
    RelationMatrix const m = compute_matrix(ctx, relation(rel));
    json                 rows = json::array();
    for (Index i = 0; i < m.size; ++i) {
      json row = json::array();
      for (Index j = 0; j < m.size; ++j) {
        row.push_back(m.at(i, j));
      }
      rows.push_back(row);
    }
    return rows.dump();
  }

  std::string verify(std::string const& corpus, std::string const& law) {
    std::vector<LawReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_suite(load_corpus(corpus), {law, true});
    }
    json out = json::array();
    for (auto const& r : reports) {
      out.push_back(report_to_json(r));
    }
    return out.dump();
  }

  std::string hasse(std::string const& module_spec,
                    std::string const& rel,
                    std::string const& format) {
    ModuleContext const ctx(load_module(module_spec));
    Poset const         p = build_poset(ctx, relation(rel));
    if (format == "dot") {
      return to_dot(p);
    }
    if (format == "json") {
      return to_json(p);
    }
    throw ConfigError("format must be 'dot' or 'json'");
  }

  std::vector<std::string> relations() {
    std::vector<std::string> out;
    for (Relation r : module_relations()) {
      out.emplace_back(tag(r));
    }
    out.emplace_back(tag(Relation::Hartwig));
    out.emplace_back(tag(Relation::RingAnnih));
    return out;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minus partial order and its relatives on finite modules";

  static py::exception<Error> error(m, "ModorderError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("ring_info", &ring_info, py::arg("spec"));
  m.def("module_info", &module_info, py::arg("spec"));
  m.def("order", &order, py::arg("module"), py::arg("rel"), py::arg("m1"), py::arg("m2"));
  m.def("ring_order", &ring_order, py::arg("ring"), py::arg("rel"), py::arg("a"), py::arg("b"));
  m.def("matrix", &matrix, py::arg("module"), py::arg("rel"));
  m.def("verify", &verify, py::arg("corpus") = "paper", py::arg("law") = "");
  m.def("hasse", &hasse, py::arg("module"), py::arg("rel") = "minus-dual",
        py::arg("format") = "dot");
  m.def("relations", &relations);
}
