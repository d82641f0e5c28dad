#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "deltaforge/cli.hpp"
#include "deltaforge/consequence.hpp"
#include "deltaforge/corpus.hpp"
#include "deltaforge/errors.hpp"
#include "deltaforge/io.hpp"
#include "deltaforge/operad.hpp"
#include "deltaforge/verify.hpp"

namespace py = pybind11;
using namespace deltaforge;

namespace {

std::optional<Rational> rat(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return Rational::parse(*s);
}

std::vector<Rational> rats(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

// results cross the boundary as JSON text; the Python side decodes
std::string check(const Algebra& a, const std::string& identity, const std::optional<std::string>& delta) {
  const auto& id = lookup_identity(identity);
  auto d = rat(delta);
  if (!d && id.has_delta()) d = a.delta();
  return eval_json(evaluate_identity(a, id, id.has_delta() ? d : std::nullopt)).dump();
}

std::string implies_json(const std::vector<std::string>& hyps, const std::string& conclusion, std::optional<int> degree,
                         const std::optional<std::string>& delta) {
  std::vector<IdentityDef> hs;
  for (const auto& h : hyps) hs.push_back(lookup_identity(h));
  const auto& c = lookup_identity(conclusion);
  auto d = rat(delta);
  auto r = d ? implies_at(hs, c, *d, degree) : implies(hs, c, degree);
  auto j = implication_json(r);
  if (r.certificate) j["verified"] = r.certificate->verify(c);
  return j.dump();
}

std::string suite(const std::optional<std::string>& table, const std::optional<std::string>& entry) {
  if (entry && !table) return report_json(verify_entry(*entry)).dump();
  SuiteOptions o;
  o.table = table;
  o.entry = entry;
  return report_json(run_paper_suite(o)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification engine for delta-type nonassociative algebras";

  // translators are tried newest first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
  py::register_exception<UnknownEntry>(m, "UnknownEntry", PyExc_KeyError);

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("name", &Algebra::name)
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("has_second", &Algebra::has_second)
      .def("to_json", [](const Algebra& a) { return (a.has_second() && a.dim() ? dialgebra_to_json(a) : algebra_to_json(a)).dump(); })
      .def("serialize", &serialize_algebra)
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
      .def("__repr__", [](const Algebra& a) { return "<Algebra " + a.name() + " dim " + std::to_string(a.dim()) + ">"; });

  m.def("parse_algebra", &parse_algebra, py::arg("text"));
  m.def("load_algebra", &load_algebra, py::arg("path"));
  m.def("corpus_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : corpus()) ids.push_back(e.id);
    return ids;
  });
  m.def("corpus_algebra", [](const std::string& id, const std::vector<std::string>& params) { return corpus_entry(id).instance(rats(params)); },
        py::arg("id"), py::arg("params") = std::vector<std::string>{});
  m.def("identity_names", [] {
    std::vector<std::string> n;
    for (const auto& i : identity_registry()) n.push_back(display_name(i.name));
    return n;
  });

  m.def("check_json", &check, py::arg("algebra"), py::arg("identity"), py::arg("delta") = py::none());
  m.def("passing_deltas_json",
        [](const Algebra& a, const std::string& identity) { return delta_set_json(evaluate_identity_all_delta(a, lookup_identity(identity))).dump(); });
  m.def("analyze_json", [](const Algebra& a) { return analysis_json(a).dump(); });
  m.def("mutate_commutator", [](const Algebra& a, const std::string& delta) { return mutate_commutator(a, FieldElement(Rational::parse(delta))); });
  m.def("implies_json", &implies_json, py::arg("hypotheses"), py::arg("conclusion"), py::arg("degree") = py::none(),
        py::arg("delta") = py::none());
  m.def("verify_json", &suite, py::arg("table") = py::none(), py::arg("entry") = py::none());
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::vector<std::string> full = {"deltaforge"};
    full.insert(full.end(), args.begin(), args.end());
    int code = run_cli(full, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
