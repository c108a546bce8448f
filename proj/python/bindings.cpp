#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mckay/acceptance.hpp"
#include "mckay/cli.hpp"
#include "mckay/expression.hpp"
#include "mckay/graphs.hpp"
#include "mckay/realizability.hpp"
#include "mckay/toric.hpp"

namespace py = pybind11;
using namespace mckay;

namespace {

py::list checks(const Report& r) {
  py::list out;
  for (const auto& c : r.checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
  return out;
}

GaloisForm make_form(const std::string& group, const std::string& field, const std::string& form) {
  return GaloisForm(GroupId::parse(group), FieldSpec::parse(field), parse_form_kind(form));
}

}  // namespace

PYBIND11_MODULE(_mckay, m) {
  m.doc() = "McKay correspondence over non-closed fields";

  py::register_exception<UnrecognizedGraph>(m, "UnrecognizedGraph", PyExc_RuntimeError);

  m.def("group_order", [](const std::string& g) { return GroupId::parse(g).order(); }, py::arg("group"));

  m.def(
      "character_table",
      [](const std::string& g) {
        auto t = character_table(GroupId::parse(g));
        py::dict out;
        py::list classes, rows;
        for (const auto& c : t.classes) classes.append(py::make_tuple(c.label, c.size));
        for (std::size_t r = 0; r < t.size(); ++r) {
          py::list values;
          for (const auto& v : t.chars[r]) values.append(to_string(v));
          rows.append(py::make_tuple(t.row_labels[r], values));
        }
        out["group"] = t.group.to_string();
        out["classes"] = classes;
        out["characters"] = rows;
        return out;
      },
      py::arg("group"), "Classes as (label, size) and characters as (label, values).");

  m.def("verify_table", [](const std::string& g) { return checks(verify_table(character_table(GroupId::parse(g)))); },
        py::arg("group"));

  m.def(
      "split_graph_json",
      [](const std::string& g, bool extended) {
        auto graph = build_graph(character_table(GroupId::parse(g)), extended);
        graph.label = classify(graph).to_string();
        return to_json(graph);
      },
      py::arg("group"), py::arg("extended") = true);

  m.def(
      "fold_json",
      [](const std::string& g, const std::string& field, const std::string& form, bool extended) {
        auto graph = build_graph(make_form(g, field, form), extended);
        graph.label = classify(graph).to_string();
        return to_json(graph);
      },
      py::arg("group"), py::arg("field") = "m=1,H=", py::arg("form") = "constant", py::arg("extended") = true);

  m.def(
      "classify_json", [](const std::string& json) { return classify(graph_from_json(json)).to_string(); },
      py::arg("graph_json"));

  m.def(
      "hilbert_symbol",
      [](const std::string& a, const std::string& b) {
        Rational qa(a), qb(b);
        qa.canonicalize();
        qb.canonicalize();
        if (qa == 0 || qb == 0) throw std::invalid_argument("Hilbert symbols need nonzero arguments");
        return hilbert_symbol_Q(qa, qb).value;
      },
      py::arg("a"), py::arg("b"), "(a,b)_Q for rationals given as strings such as \"-3/4\".");

  m.def(
      "realizable",
      [](const std::string& g, const std::string& field, int bound) {
        auto group = GroupId::parse(g);
        auto k = FieldSpec::parse(field);
        auto v = realizable(group, k, bound);
        py::dict out;
        out["verdict"] = to_string(v.status);
        out["certificate"] = v.certificate;
        if (v.witness) {
          py::dict w;
          for (const auto& [name, mat] : v.witness->generators) w[py::str(name)] = to_string(mat);
          out["witness"] = w;
          out["checks"] = checks(verify_witness(group, *v.witness, k));
        }
        return out;
      },
      py::arg("group"), py::arg("field") = "m=1,H=", py::arg("bound") = 50);

  m.def("self_intersections", [](int n) { return self_intersections(build_fan(n)); }, py::arg("n"));
  m.def("tautological_degrees", &tautological_degrees, py::arg("n"));
  m.def(
      "verify_mckay_cyclic",
      [](int n, const std::string& form) {
        return checks(verify_mckay_cyclic(GaloisForm(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n),
                                                     parse_form_kind(form))));
      },
      py::arg("n"), py::arg("form") = "constant");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command; returns (exit code, stdout, stderr).");

  m.def("acceptance", [] {
    py::list out;
    for (const auto& r : run_acceptance()) out.append(py::make_tuple(r.id, r.title, r.passed, r.detail));
    return out;
  });
}
