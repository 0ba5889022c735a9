#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diagcount/cli.hpp"
#include "diagcount/commands.hpp"
#include "diagcount/errors.hpp"
#include "diagcount/extensions.hpp"
#include "diagcount/oracle.hpp"
#include "diagcount/quadpart.hpp"
#include "diagcount/report.hpp"

namespace py = pybind11;
using namespace diagcount;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::dict to_py(const PartitionUse& u) {
  py::dict d;
  d["kind"] = u.kind;
  d["r"] = u.r;
  d["k"] = u.k;
  d["first"] = to_py(u.first);
  d["second"] = to_py(u.second);
  return d;
}

std::vector<Element> elements(const std::vector<std::uint32_t>& xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(Element{x});
  return out;
}

FieldPtr field_for(const ProblemSpec& spec) { return build_field(spec.p, spec.s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting solutions of x_1^(2^m) + ... + x_n^(2^m) = 0 over F_{p^s}";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (is_validation_error(e.code())) {
        PyErr_SetString(PyExc_ValueError, e.what());
      } else {
        PyErr_SetString(PyExc_ArithmeticError, e.what());
      }
    }
  });

  py::enum_<Precision>(m, "Precision")
      .value("DOUBLE", Precision::Double)
      .value("EXTENDED", Precision::Extended)
      .value("QUAD", Precision::Quad);

  py::class_<ProblemSpec>(m, "ProblemSpec")
      .def_readonly("p", &ProblemSpec::p)
      .def_readonly("s", &ProblemSpec::s)
      .def_readonly("m", &ProblemSpec::m)
      .def_readonly("n", &ProblemSpec::n)
      .def_property_readonly("q", [](const ProblemSpec& x) { return to_py(x.q); })
      .def_readonly("v2", &ProblemSpec::v2)
      .def_property_readonly("tag", [](const ProblemSpec& x) { return std::string(case_tag_name(x.tag)); })
      .def("to_json", [](const ProblemSpec& x) { return to_json(x); })
      .def_static("from_json", &from_json<ProblemSpec>)
      .def(py::self == py::self)
      .def("__repr__", [](const ProblemSpec& x) {
        std::ostringstream os;
        os << "ProblemSpec(p=" << x.p << ", s=" << x.s << ", m=" << x.m << ", n=" << x.n << ", tag="
           << case_tag_name(x.tag) << ")";
        return os.str();
      });

  py::class_<CountResult>(m, "CountResult")
      .def_property_readonly("N", [](const CountResult& x) { return to_py(x.N); })
      .def_readonly("method", &CountResult::method)
      .def_property_readonly("partitions",
                             [](const CountResult& x) {
                               py::list out;
                               for (const auto& u : x.partitions) out.append(to_py(u));
                               return out;
                             })
      .def_readonly("notes", &CountResult::notes)
      .def("to_json", [](const CountResult& x) { return to_json(x); })
      .def_static("from_json", &from_json<CountResult>)
      .def(py::self == py::self);

  py::class_<AuditEntry>(m, "AuditEntry")
      .def_readonly("id", &AuditEntry::id)
      .def_readonly("applicable", &AuditEntry::applicable)
      .def_readonly("residual", &AuditEntry::residual)
      .def_readonly("tolerance", &AuditEntry::tolerance)
      .def_readonly("passed", &AuditEntry::passed)
      .def_readonly("note", &AuditEntry::note);

  py::class_<AuditReport>(m, "AuditReport")
      .def_readonly("q", &AuditReport::q)
      .def_readonly("m", &AuditReport::m)
      .def_readonly("entries", &AuditReport::entries)
      .def("all_passed", &AuditReport::all_passed)
      .def("to_json", [](const AuditReport& x) { return to_json(x); })
      .def_static("from_json", &from_json<AuditReport>)
      .def(py::self == py::self);

  py::class_<GaussCount>(m, "GaussCount")
      .def_property_readonly("N", [](const GaussCount& x) { return to_py(x.N); })
      .def_readonly("residual", &GaussCount::residual)
      .def_readonly("error_bound", &GaussCount::error_bound)
      .def_readonly("precision", &GaussCount::precision)
      .def_readonly("escalated", &GaussCount::escalated);

  m.def("classify", &classify, py::arg("p"), py::arg("s"), py::arg("m"), py::arg("n"));
  m.def(
      "count", [](const ProblemSpec& spec) { return count(spec); }, py::arg("spec"));
  m.def(
      "count_pair", [](const ProblemSpec& spec) { return to_py(count_pair(spec).N); }, py::arg("spec"));

  m.def(
      "brute_force", [](const ProblemSpec& spec, std::uint64_t cap) { return to_py(brute_force(spec, cap)); },
      py::arg("spec"), py::arg("cap") = kDefaultBruteCap);
  m.def(
      "dp_count", [](const ProblemSpec& spec, std::uint64_t budget) { return to_py(dp_count(spec, budget)); },
      py::arg("spec"), py::arg("q_budget") = kDefaultDpBudget);
  m.def(
      "dp_count_terms",
      [](std::uint64_t p, unsigned s, const std::vector<std::pair<std::uint32_t, std::uint64_t>>& terms) {
        std::vector<Term> ts;
        for (const auto& [c, e] : terms) ts.push_back(Term{Element{c}, e});
        return to_py(dp_count_terms(build_field(p, s), ts));
      },
      py::arg("p"), py::arg("s"), py::arg("terms"),
      "Solutions of sum c_j x_j^(e_j) = 0; terms are (coefficient index, exponent) pairs.");
  m.def(
      "gauss_count", [](const ProblemSpec& spec, Precision start) { return gauss_count(spec, start); },
      py::arg("spec"), py::arg("precision") = Precision::Double);

  m.def(
      "partition_2B",
      [](std::uint64_t p, unsigned k) {
        const auto r = partition_2B(p, k);
        return py::make_tuple(to_py(r.A), to_py(r.absB));
      },
      py::arg("p"), py::arg("k"));
  m.def(
      "partition_D",
      [](std::uint64_t p, unsigned k) {
        const auto r = partition_D(p, k);
        return py::make_tuple(to_py(r.C), to_py(r.absD));
      },
      py::arg("p"), py::arg("k"));

  m.def(
      "audit_lemmas", [](std::uint64_t p, unsigned s, unsigned m2) { return audit_lemmas(build_field(p, s), m2); },
      py::arg("p"), py::arg("s"), py::arg("m"));
  m.def(
      "audit_decomposition",
      [](std::uint64_t p, unsigned s, unsigned m2) { return audit_lemma14(build_field(p, s), m2); }, py::arg("p"),
      py::arg("s"), py::arg("m"));

  m.def(
      "reduce_exponents",
      [](const std::vector<std::uint64_t>& d, const py::int_& q) {
        return reduce_exponents(d, BigInt(py::str(q).cast<std::string>()));
      },
      py::arg("d"), py::arg("q"));
  m.def(
      "count_coprime_scaled",
      [](const ProblemSpec& spec, const std::vector<std::uint64_t>& h) { return to_py(count_coprime_scaled(spec, h)); },
      py::arg("spec"), py::arg("h"));
  m.def(
      "count_with_odd_semiprimitive",
      [](const ProblemSpec& spec, const std::vector<std::pair<std::uint64_t, unsigned>>& parts, bool literal_sign) {
        std::vector<OddPart> ps;
        for (const auto& [u, n] : parts) ps.push_back(OddPart{u, n});
        return to_py(count_with_odd_semiprimitive(spec, ps, SemiprimitiveOptions{literal_sign}));
      },
      py::arg("spec"), py::arg("parts"), py::arg("literal_sign") = false);
  m.def(
      "count_with_quadratic_form",
      [](const ProblemSpec& spec, const std::vector<std::uint32_t>& coefficients) {
        return to_py(count_with_quadratic_form(spec, elements(coefficients), *field_for(spec)));
      },
      py::arg("spec"), py::arg("coefficients"), "Diagonal coefficients given as element indices.");

  m.def(
      "table1_json", []() { return to_json(cmd_table1()); }, "Recomputed reference table as JSON.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
