#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "knotcert/acceptance.hpp"
#include "knotcert/cli.hpp"
#include "knotcert/constructions.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/fox.hpp"
#include "knotcert/report.hpp"
#include "knotcert/textio.hpp"
#include "knotcert/torus.hpp"

namespace py = pybind11;
using namespace knotcert;

namespace {

// Coefficients travel as decimal strings; the Python side turns them into ints.
std::pair<std::int64_t, std::vector<std::string>> poly_parts(const LaurentPoly& f) {
  std::vector<std::string> coeffs;
  for (const auto& c : f.dense()) coeffs.push_back(c.get_str());
  return {f.is_zero() ? 0 : f.min_exp(), coeffs};
}

TorusConvention convention_from(const std::string& s) {
  if (s == "power") return TorusConvention::PowerEquality;
  if (s == "product") return TorusConvention::ProductTrivial;
  throw InputError("convention must be 'power' or 'product'");
}

}  // namespace

PYBIND11_MODULE(_knotcert, m) {
  m.doc() = "Exact certificates for the groups Gamma_p";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(input_error.ptr(), e.what());
    } catch (const MathError& e) {
      PyErr_SetString(math_error.ptr(), e.what());
    } catch (const InvariantViolation& e) {
      PyErr_SetString(invariant.ptr(), e.what());
    }
  });

  m.def("p_poly", [](int p) { return poly_parts(p_poly(p)); }, py::arg("p"));
  m.def("cyclotomic", [](std::int64_t n) { return poly_parts(cyclotomic(n)); }, py::arg("n"));
  m.def(
      "alexander_polynomial",
      [](const std::string& text) {
        return poly_parts(canonicalize(alexander_polynomial(parse_presentation(text))));
      },
      py::arg("presentation_text"));
  m.def(
      "presentation",
      [](int p, const std::string& form) {
        if (form == "wirtinger") return print_presentation(torus_wirtinger(p));
        if (form == "standard")
          return print_presentation(standard_presentation(TorusKnotParams::make(p, p + 1)));
        if (form == "gamma") return print_presentation(gamma_presentation(p));
        if (form == "gamma-tab") return print_presentation(gamma_tab_presentation(p));
        if (form == "double") return print_presentation(double_presentation(p).presentation);
        throw InputError("unknown form '" + form + "'");
      },
      py::arg("p"), py::arg("form") = "gamma");
  m.def(
      "certificate_json", [](int p, int k) { return emit_certificate_json(distinctness_certificate(p, k)); },
      py::arg("p"), py::arg("k"));
  m.def(
      "gamma_json", [](int p) { return gamma_artifacts_to_json(gamma_artifacts(p)).dump(); },
      py::arg("p"));
  m.def(
      "normal_form_json",
      [](std::int64_t p, std::int64_t q, const std::string& word, const std::string& conv) {
        return normal_form_to_json(normal_form(TorusKnotParams{p, q}, parse_word(word), convention_from(conv)))
            .dump();
      },
      py::arg("p"), py::arg("q"), py::arg("word"), py::arg("convention") = "power");
  m.def(
      "fold_json", [](int p) { return homomorphism_to_json(verify(fold_map(p))).dump(); },
      py::arg("p"));
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(std::move(args), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
  m.def(
      "run_acceptance",
      [](std::uint64_t seed) {
        std::vector<std::unordered_map<std::string, py::object>> rows;
        std::vector<CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = run_acceptance(seed);
        }
        for (const auto& r : results)
          rows.push_back({{"id", py::int_(r.id)},
                          {"name", py::str(r.name)},
                          {"passed", py::bool_(r.passed)},
                          {"detail", py::str(r.detail)},
                          {"seconds", py::float_(r.seconds)}});
        return rows;
      },
      py::arg("seed") = kDefaultAcceptanceSeed);
}
