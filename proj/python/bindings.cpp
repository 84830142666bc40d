#include "tridesign/design_check.hpp"
#include "tridesign/feasibility.hpp"
#include "tridesign/ortho_poly.hpp"
#include "tridesign/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace tridesign;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python wrapper turns them
// into fractions.Fraction.
std::vector<std::string> coefficients(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) {
    out.push_back(to_string(c));
  }
  return out;
}

Polynomial polynomial_from(const std::vector<std::string>& coeffs) {
  std::vector<Rational> values;
  for (const auto& c : coeffs) {
    values.push_back(parse_rational(c));
  }
  return Polynomial(std::move(values));
}

DesignInstance load(const std::string& source, bool exact) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) {
    return fixture(source);
  }
  LoadOptions options;
  options.require_exact = exact;
  return load_design_file(source, options);
}

py::dict design_report(const std::string& source, int tau_max, bool exact) {
  const DesignInstance d = load(source, exact);
  py::dict out;
  out["dimension"] = d.dimension;
  out["size"] = d.size;
  out["exact"] = d.is_exact();
  out["strength"] = design_strength(d, tau_max);
  const SpectrumReport spec = spectrum(d);
  py::list distinct;
  for (std::size_t k = 0; k < spec.distinct.size(); ++k) {
    const auto& e = spec.distinct[k];
    py::dict entry;
    entry["value"] = e.exact ? py::object(py::str(to_string(*e.exact))) : py::object(py::float_(e.value));
    entry["per_point"] = spec.per_point.front()[k];
    distinct.append(entry);
  }
  out["spectrum"] = distinct;
  out["point_independent"] = spec.constant_across_points;
  const WitnessReport w = verify_conjecture_witness(d);
  py::dict witness;
  witness["precondition_met"] = w.precondition_met;
  witness["precondition_detail"] = w.precondition_detail;
  py::list checks;
  for (const auto& c : w.checks) {
    checks.append(py::make_tuple(c.name, c.passed, c.detail));
  }
  witness["checks"] = checks;
  witness["passed"] = w.all_passed();
  out["witness"] = witness;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact feasibility analysis of 3-distance spherical 5-designs";
  m.attr("__version__") = version_string();

  py::register_exception<DesignFormatError>(m, "DesignFormatError", PyExc_ValueError);

  m.def(
      "classify_json",
      [](int n, const std::string& M, bool divisibility) {
        ClassifyOptions options;
        options.apply_divisibility = divisibility;
        const CandidateReport r = classify(n, parse_integer(M), options);
        return candidate_json(r, true);
      },
      py::arg("n"), py::arg("M"), py::arg("divisibility") = true, py::call_guard<py::gil_scoped_release>());

  m.def(
      "scan_json",
      [](int n_min, int n_max, unsigned jobs, bool divisibility) {
        if (n_min < 3 || n_min > n_max) {
          throw std::invalid_argument("require 3 <= n_min <= n_max");
        }
        ScanOptions options;
        options.jobs = jobs;
        options.apply_divisibility = divisibility;
        const ScanResult result = scan_range(n_min, n_max, options);
        ReportMetadata meta;
        meta.n_min = n_min;
        meta.n_max = n_max;
        meta.include_timestamp = false;
        return scan_report_json(result, meta);
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("jobs") = 0, py::arg("divisibility") = true,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "levenshtein_bound",
      [](int n, const std::string& s) { return to_string(levenshtein_bound_l5(n, parse_rational(s))); },
      py::arg("n"), py::arg("s"));
  m.def(
      "levenshtein_polynomial",
      [](unsigned k, int n, const std::string& s) { return coefficients(levenshtein_polynomial(k, n, parse_rational(s))); },
      py::arg("k"), py::arg("n"), py::arg("s"));
  m.def(
      "jacobi_polynomial", [](unsigned i, int n) { return coefficients(jacobi_polynomial(i, n)); }, py::arg("i"),
      py::arg("n"));
  m.def(
      "gegenbauer_polynomial", [](unsigned k, int n) { return coefficients(gegenbauer_polynomial(k, n)); },
      py::arg("k"), py::arg("n"));
  m.def(
      "inner_product_cubic", [](int n, const std::string& M) { return coefficients(inner_product_cubic(n, parse_integer(M))); },
      py::arg("n"), py::arg("M"));
  m.def(
      "rational_roots",
      [](const std::vector<std::string>& coeffs) {
        std::vector<std::string> out;
        for (const auto& r : rational_roots(polynomial_from(coeffs))) {
          out.push_back(to_string(r));
        }
        return out;
      },
      py::arg("coefficients"));
  m.def(
      "isolate_real_roots",
      [](const std::vector<std::string>& coeffs, const std::string& lo, const std::string& hi) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& iv : isolate_real_roots(polynomial_from(coeffs), parse_rational(lo), parse_rational(hi))) {
          out.emplace_back(to_string(iv.lo), to_string(iv.hi));
        }
        return out;
      },
      py::arg("coefficients"), py::arg("lo"), py::arg("hi"));
  m.def(
      "p_adic_valuation",
      [](const std::string& p, const std::string& a) { return p_adic_valuation(parse_integer(p), parse_integer(a)); },
      py::arg("p"), py::arg("a"));
  m.def("design_report", &design_report, py::arg("source"), py::arg("tau_max") = 7, py::arg("exact") = false);
  m.def("fixture_names", &fixture_names);
  m.def(
      "fixture_text",
      [](const std::string& name) {
        std::ostringstream out;
        write_design(out, fixture(name));
        return out.str();
      },
      py::arg("name"));
}
