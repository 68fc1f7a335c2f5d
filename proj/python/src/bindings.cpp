#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drinfeld/assoc_at.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/grt.hpp"
#include "drinfeld/output.hpp"

namespace py = pybind11;
using namespace drinfeld;

namespace {

std::pair<std::string, std::string> fraction(const Rational& r) {
  return {r.numerator().get_str(), r.denominator().get_str()};
}

RenderStyle style_of(const std::string& s, const Scalar& value) {
  if (s == "auto") return preferred_style(value);
  if (s == "two-pi-i") return RenderStyle::TwoPiI;
  if (s == "pi-power") return RenderStyle::PiPower;
  throw ParseError("unknown style '" + s + "'");
}

Scalar coefficient(const std::string& which, const std::string& word, int max_weight) {
  Word w = parse_word(word);
  AssociatorFamilies fam(shared_reduction_table(max_weight));
  if (which == "at") {
    AtCoefficients at(fam);
    return at.coeff(w);
  }
  return fam.coeff(parse_family(which), w);
}

}  // namespace

PYBIND11_MODULE(_drinfeld, m) {
  m.doc() = "Exact MZV reductions and Drinfeld associator coefficients";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

  m.def("canonical_word", [](const std::string& s) { return parse_word(s).to_string(); });
  m.def("shuffle", [](const std::string& u, const std::string& v) { return to_string(shuffle(parse_word(u), parse_word(v))); });
  m.def("stuffle", [](const std::string& u, const std::string& v) {
    return to_string(stuffle(parse_composition(u), parse_composition(v)));
  });
  m.def("reduce", [](const std::string& c, int max_weight) {
    return zeta_composition(parse_composition(c), shared_reduction_table(max_weight)).to_string();
  }, py::arg("composition"), py::arg("max_weight") = 8);
  m.def("coeff", [](const std::string& which, const std::string& word, const std::string& style, int max_weight) {
    Scalar s = coefficient(which, word, max_weight);
    return s.render(style_of(style, s));
  }, py::arg("which"), py::arg("word"), py::arg("style") = "auto", py::arg("max_weight") = 8);
  m.def("coeff_json", [](const std::string& which, const std::string& word, int max_weight) {
    return to_json(make_record(parse_word(word), which, coefficient(which, word, max_weight)));
  }, py::arg("which"), py::arg("word"), py::arg("max_weight") = 8);
  m.def("I1", [](int n) { return fraction(I1(n)); });
  m.def("J1", [](int n) { return fraction(J1(n)); });
  m.def("J2", [](int l, int mm) { return fraction(J2(l, mm)); });
  m.def("solve_cab", [](int n) {
    AssociatorFamilies fam(shared_reduction_table(std::max(8, 2 * n + 1)));
    AtSolution sol = solve_cab(n, fam);
    py::dict cab;
    for (const auto& [ab, s] : sol.cab) cab[py::make_tuple(ab.first, ab.second)] = s.render(RenderStyle::TwoPiI);
    py::dict out;
    out["c2n"] = sol.c2n.render(RenderStyle::TwoPiI);
    out["cab"] = cab;
    out["equations"] = sol.equations;
    return out;
  });
}
