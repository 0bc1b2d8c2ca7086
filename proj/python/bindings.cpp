#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "monoidal/battery.hpp"
#include "monoidal/fixtures.hpp"

namespace py = pybind11;
using namespace monoidal;

namespace {

using MonomialArg = std::variant<std::string, std::vector<long>>;

class PyProgram {
 public:
  explicit PyProgram(TransformProgram p) : dyn_(std::move(p)), vars_(variable_names(dyn_.program())) {}

  ExponentVector monomial(const MonomialArg& m) const {
    if (const auto* s = std::get_if<std::string>(&m)) return parse_monomial(*s, vars_);
    const auto& xs = std::get<std::vector<long>>(m);
    if (xs.size() != dyn_.dimension()) throw InputError("expected " + std::to_string(dyn_.dimension()) + " exponents");
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return ExponentVector(std::move(v));
  }

  const CycleDynamics& dyn() const { return dyn_; }
  const std::vector<std::string>& vars() const { return vars_; }

 private:
  CycleDynamics dyn_;
  std::vector<std::string> vars_;
};

Limits limits(std::size_t cutoff, std::size_t periods) { return {cutoff, periods}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact monoidal transform sequences: native core";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.def("fixture_names", &fixtures::names);
  m.def("run_fixture_json", [](const std::string& name) {
    py::gil_scoped_release release;
    return to_json(run_fixture(name)).dump();
  });

  py::class_<PyProgram>(m, "Program")
      .def_static("from_text", [](const std::string& text) { return PyProgram(parse_program(text)); })
      .def_static("from_file", [](const std::string& path) { return PyProgram(load_program(path)); })
      .def_static("fixture", [](const std::string& name) { return PyProgram(fixtures::by_name(name)); })
      .def_property_readonly("dimension", [](const PyProgram& p) { return p.dyn().dimension(); })
      .def_property_readonly("variables", &PyProgram::vars)
      .def_property_readonly("name", [](const PyProgram& p) { return p.dyn().program().name; })
      .def("serialize", [](const PyProgram& p) { return serialize_program(p.dyn().program()); })
      .def("program_json", [](const PyProgram& p) { return to_json(p.dyn().program()).dump(); })
      .def("format", [](const PyProgram& p, const MonomialArg& w) { return format_monomial(p.monomial(w), p.vars()); })
      .def("exponents", [](const PyProgram& p, const MonomialArg& w) {
        std::vector<long> out;
        for (const auto& e : p.monomial(w).entries()) out.push_back(e.get_si());
        return out;
      })
      .def(
          "member_json",
          [](const PyProgram& p, const MonomialArg& w, std::size_t cutoff, std::size_t periods) {
            return to_json(member_S(p.dyn(), p.monomial(w), limits(cutoff, periods)), p.vars()).dump();
          },
          py::arg("w"), py::arg("cutoff") = 256, py::arg("periods") = 3)
      .def(
          "divides_json",
          [](const PyProgram& p, const MonomialArg& a, const MonomialArg& b, std::size_t cutoff, std::size_t periods) {
            return to_json(divides_S(p.dyn(), p.monomial(a), p.monomial(b), limits(cutoff, periods)), p.vars())
                .dump();
          },
          py::arg("a"), py::arg("b"), py::arg("cutoff") = 256, py::arg("periods") = 3)
      .def(
          "gcd_json",
          [](const PyProgram& p, const MonomialArg& a, const MonomialArg& b, std::size_t cutoff, std::size_t periods) {
            return to_json(gcd_trace(p.dyn(), p.monomial(a), p.monomial(b), limits(cutoff, periods)), p.vars()).dump();
          },
          py::arg("a"), py::arg("b"), py::arg("cutoff") = 256, py::arg("periods") = 3)
      .def(
          "primitive_json",
          [](const PyProgram& p, const MonomialArg& a, const MonomialArg& b, std::size_t cutoff, std::size_t periods) {
            Verdict v = primitive_residual(p.dyn(), p.monomial(a), p.monomial(b), limits(cutoff, periods));
            return to_json(v, p.vars()).dump();
          },
          py::arg("a"), py::arg("b"), py::arg("cutoff") = 256, py::arg("periods") = 3)
      .def(
          "intersect_json",
          [](const PyProgram& p, const std::vector<MonomialArg>& as, std::size_t cutoff, std::size_t periods) {
            std::vector<ExponentVector> vs;
            for (const auto& a : as) vs.push_back(p.monomial(a));
            return to_json(intersect_principal(p.dyn(), vs, limits(cutoff, periods)), p.vars()).dump();
          },
          py::arg("monomials"), py::arg("cutoff") = 256, py::arg("periods") = 3)
      .def(
          "chains_json",
          [](const PyProgram& p, std::size_t periods) {
            return to_json(detect_chains(p.dyn(), periods), p.vars()).dump();
          },
          py::arg("periods") = 3)
      .def(
          "classify_json",
          [](const PyProgram& p, std::size_t cutoff, std::size_t periods, std::size_t window,
             std::size_t search_degree, std::uint64_t seed) {
            ClassifyOptions o;
            o.limits = limits(cutoff, periods);
            o.window = window;
            o.search_degree = search_degree;
            o.seed = seed;
            ClassificationReport r;
            {
              py::gil_scoped_release release;
              r = gcd_classify(p.dyn(), o);
            }
            return to_json(r, p.vars()).dump();
          },
          py::arg("cutoff") = 256, py::arg("periods") = 3, py::arg("window") = 4, py::arg("search_degree") = 8,
          py::arg("seed") = 1);
}
