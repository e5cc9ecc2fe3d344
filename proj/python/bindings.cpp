#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "herbrand/assemblies.hpp"
#include "herbrand/pca.hpp"
#include "herbrand/principles.hpp"
#include "herbrand/sexpr.hpp"
#include "herbrand/suites.hpp"
#include "herbrand/tripos.hpp"

namespace py = pybind11;
using namespace herbrand;

namespace {

CheckConfig config(std::uint64_t fuel, std::size_t probe_len) {
  CheckConfig c;
  c.fuel = Fuel{fuel};
  c.probes.max_len = probe_len;
  return c;
}

std::string kind_name(const Ternary& t) {
  return t.is_holds() ? "holds" : t.is_fails() ? "fails" : "unknown";
}

py::dict suite_dict(const SuiteReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["failed"] = r.failed;
  d["unknown"] = r.unknown;
  py::list records;
  for (const auto& [what, v] : r.records) records.append(py::make_tuple(what, v));
  d["records"] = records;
  return d;
}

std::map<std::string, Assembly> assemblies_of(const std::vector<Assembly>& v) {
  std::map<std::string, Assembly> m;
  for (const auto& a : v) m.insert_or_assign(a.name, a);
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Realizability over the combinatory algebra of sequence codes";

  auto base = py::register_exception<Error>(m, "HerbrandError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Term>(m, "Term")
      .def_static("parse", &parse_term)
      .def_static("num", &Term::num)
      .def_static("S", &Term::S)
      .def_static("K", &Term::K)
      .def_static("seq", [](std::vector<Term> items) { return Term::seq(std::move(items)); }, py::arg("items") = std::vector<Term>{})
      .def_static("pair", &Term::pair)
      .def_static("app", &Term::app)
      .def("items", [](const Term& t) { return t.items(); })
      .def("__str__", &Term::str)
      .def("__repr__", [](const Term& t) { return "Term(" + t.str() + ")"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) { return std::hash<std::string>{}(t.str()); });

  py::class_<Ternary>(m, "Ternary")
      .def_property_readonly("kind", &kind_name)
      .def_property_readonly("exact", &Ternary::exact)
      .def_property_readonly("witness", &Ternary::witness)
      .def_property_readonly("note", &Ternary::note)
      .def_property_readonly("reason", [](const Ternary& t) { return std::string(to_string(t.reason())); })
      .def("__bool__", &Ternary::is_holds)
      .def("__str__", &Ternary::str)
      .def("__repr__", [](const Ternary& t) { return "Ternary(" + t.str() + ")"; });

  m.def(
      "normalize",
      [](const Term& t, std::uint64_t fuel) {
        EvalResult r = normalize(t, Fuel{fuel});
        py::dict d;
        d["status"] = r.ok() ? "value" : r.diverged() ? "diverged" : "stuck";
        d["value"] = r.ok() ? py::cast(r.value) : py::none();
        d["steps"] = r.steps;
        d["reason"] = r.reason;
        return d;
      },
      py::arg("term"), py::arg("fuel") = 10000);
  m.def("apply", [](const Term& f, const Term& a, std::uint64_t fuel) {
    EvalResult r = apply(f, a, Fuel{fuel});
    if (!r.ok()) throw Error(r.diverged() ? "diverged" : "stuck: " + r.reason);
    return r.value;
  }, py::arg("f"), py::arg("a"), py::arg("fuel") = 10000);
  m.def("lambda_", [](const std::vector<std::string>& vars, const Term& body) {
    Term t = body;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) t = abstract(*it, t);
    return t;
  }, "Closed bracket abstraction over the given variables, outermost first.");
  m.def("var", &Term::var);

  py::class_<TruthValue>(m, "TruthValue")
      .def_static("parse", &parse_truth)
      .def_static("atom", [](const std::vector<std::vector<Term>>& gens, const std::vector<Term>& a1) {
        std::vector<SupportSet> g(gens.begin(), gens.end());
        return mk_atom(std::move(g), Domain::finite(a1));
      })
      .def_static("top", &TruthValue::top)
      .def_static("bottom", &TruthValue::bottom)
      .def("__str__", &TruthValue::str)
      .def("__repr__", [](const TruthValue& t) { return "TruthValue(" + t.str() + ")"; });
  m.def("conj", py::overload_cast<const TruthValue&, const TruthValue&>(&conj));
  m.def("disj", py::overload_cast<const TruthValue&, const TruthValue&>(&disj));
  m.def("imp", py::overload_cast<const TruthValue&, const TruthValue&>(&imp));
  m.def("neg", py::overload_cast<const TruthValue&>(&neg));
  m.def("actual_member", [](const TruthValue& t, const Term& x, std::uint64_t fuel, std::size_t probe_len) {
    return actual_member(t, x, config(fuel, probe_len));
  }, py::arg("t"), py::arg("m"), py::arg("fuel") = 10000, py::arg("probe_len") = 2);
  m.def("potential_member", [](const TruthValue& t, const Term& x, std::uint64_t fuel, std::size_t probe_len) {
    return potential_member(t, x, config(fuel, probe_len));
  }, py::arg("t"), py::arg("m"), py::arg("fuel") = 10000, py::arg("probe_len") = 2);

  py::class_<Predicate>(m, "Predicate")
      .def_static("parse", &parse_predicate)
      .def_property_readonly("index", [](const Predicate& p) { return std::vector<Label>(p.index().begin(), p.index().end()); })
      .def("at", &Predicate::at)
      .def("__str__", &Predicate::str);
  m.def("check_entailment", [](const Predicate& phi, const Predicate& psi, const Term& r, std::uint64_t fuel,
                               std::size_t probe_len) { return check_entailment(phi, psi, r, config(fuel, probe_len)).verdict(); },
        py::arg("phi"), py::arg("psi"), py::arg("realizer"), py::arg("fuel") = 10000, py::arg("probe_len") = 2);

  m.def("synth_identity", &synth_identity);
  m.def("synth_compose", &synth_compose);
  m.def("synth_conj_fst", &synth_conj_fst);
  m.def("synth_conj_snd", &synth_conj_snd);
  m.def("synth_conj_pair", &synth_conj_pair);
  m.def("synth_disj_inl", &synth_disj_inl);
  m.def("synth_disj_inr", &synth_disj_inr);
  m.def("synth_disj_elim", &synth_disj_elim);
  m.def("synth_curry", &synth_curry);
  m.def("synth_uncurry", &synth_uncurry);
  m.def("synth_eval", &synth_eval);
  m.def("exists_transpose_up", &exists_transpose_up);
  m.def("exists_transpose_down", &exists_transpose_down);
  m.def("forall_transpose_up", &forall_transpose_up);
  m.def("forall_transpose_down", &forall_transpose_down);

  py::class_<Assembly>(m, "Assembly")
      .def_static("parse", [](const std::string& text) { return assembly_from_sexpr(read_sexpr(text)); })
      .def_readonly("name", &Assembly::name)
      .def_property_readonly("carrier", [](const Assembly& a) { return std::vector<Label>(a.carrier.begin(), a.carrier.end()); })
      .def("realizes", &Assembly::realizes)
      .def("__str__", &Assembly::str);
  py::class_<AsmMorphism>(m, "Morphism")
      .def_readonly("source", &AsmMorphism::source)
      .def_readonly("target", &AsmMorphism::target)
      .def_readonly("tracking", &AsmMorphism::tracking)
      .def_readonly("status", &AsmMorphism::status)
      .def("__call__", [](const AsmMorphism& f, const Label& x) { return f(x); })
      .def("__str__", &AsmMorphism::str);
  m.def("parse_morphism", [](const std::string& text, const std::vector<Assembly>& env, std::uint64_t fuel,
                             std::size_t probe_len) {
    return morphism_from_sexpr(read_sexpr(text), assemblies_of(env), config(fuel, probe_len));
  }, py::arg("text"), py::arg("assemblies"), py::arg("fuel") = 10000, py::arg("probe_len") = 2);
  m.def("check_tracking", [](const AsmMorphism& f, std::uint64_t fuel, std::size_t probe_len) {
    return check_tracking(f, config(fuel, probe_len));
  }, py::arg("f"), py::arg("fuel") = 10000, py::arg("probe_len") = 2);
  m.def("nno", &nno, py::arg("n_max") = kDefaultNmax);
  m.def("nabla", [](const std::vector<Label>& x, const std::string& name) { return nabla(make_labels(x), name); },
        py::arg("carrier"), py::arg("name") = "nabla");
  m.def("product", [](const Assembly& a, const Assembly& b) { return product(a, b).object; });
  m.def("sum", [](const Assembly& a, const Assembly& b) { return sum(a, b).object; });
  m.def("is_partitioned", &is_partitioned);

  m.def("tracking_from_bound", py::overload_cast<const std::vector<std::uint64_t>&>(&tracking_from_bound));
  m.def("bound_from_tracking", [](const Term& r, std::size_t n_max, std::uint64_t fuel) {
    return bound_from_tracking(r, Fuel{fuel}, n_max);
  }, py::arg("r"), py::arg("n_max"), py::arg("fuel") = 10000);
  m.def("wlem_realizer", &wlem_realizer);
  m.def("wlem_check", [](const TruthValue& phi) {
    WlemReport w = wlem_check(phi);
    return py::make_tuple(w.verdict, w.inhabited, w.left, w.right);
  }, "(verdict, inhabited, left, right)");
  m.def("fan_bound", [](const std::string& bar_text) {
    FanReport f = fan_bound_extract(bar_from_sexpr(read_sexpr(bar_text)));
    return py::make_tuple(f.bound, f.verdict);
  });

  m.def(
      "demo",
      [](const std::string& name, std::uint32_t seed, std::uint64_t fuel, std::size_t probe_len) {
        CheckConfig cfg = config(fuel, probe_len);
        if (name == "heyting-laws") return suite_dict(heyting_suite(200, seed, cfg));
        if (name == "wlem") return suite_dict(wlem_suite(cfg));
        if (name == "bounded") return suite_dict(bounded_suite(16, seed, cfg));
        if (name == "koenig") return suite_dict(koenig_suite(4, cfg));
        if (name == "pretopos") return suite_dict(pretopos_suite(2, 2, cfg));
        if (name == "fan") return suite_dict(fan_suite(length_bar(3, 3, 3)));
        throw py::value_error("unknown demo " + name);
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("fuel") = 10000, py::arg("probe_len") = 2);
}
