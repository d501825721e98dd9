#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biortho/errors.hpp"
#include "biortho/family.hpp"
#include "biortho/io.hpp"
#include "biortho/special.hpp"
#include "biortho/verify.hpp"

namespace py = pybind11;
using namespace biortho;

namespace {

std::vector<Matrix> coefficients(const MatrixPoly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["identity_id"] = std::string(to_string(r.identity_id));
  d["params_digest"] = r.params_digest;
  d["residual"] = r.residual;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite biorthogonal M matrix polynomials";

  // ValueError subclass carrying the violated condition as `.condition`.
  static PyObject* validation_error =
      PyErr_NewException("biortho_m._core.ValidationError", PyExc_ValueError, nullptr);
  m.attr("ValidationError") = py::handle(validation_error);
  // Translators registered later are tried first.
  py::register_exception<Error>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(validation_error)(e.what());
      exc.attr("condition") = e.condition();
      PyErr_SetObject(validation_error, exc.ptr());
    }
  });

  py::class_<ParamSet>(m, "ParamSet")
      .def(py::init([](const Matrix& h, const Matrix& c, int upsilon, int max_degree) {
             return ParamSet::make(h, c, upsilon, max_degree);
           }),
           py::arg("H"), py::arg("C"), py::arg("upsilon"), py::arg("max_degree"))
      .def_static("from_json", [](const std::string& text) {
        return io::params_from_json(nlohmann::json::parse(text));
      })
      .def_static("load", &io::load_params)
      .def_property_readonly("H", &ParamSet::h)
      .def_property_readonly("C", &ParamSet::c)
      .def_property_readonly("upsilon", &ParamSet::upsilon)
      .def_property_readonly("max_degree", &ParamSet::max_degree)
      .def_property_readonly("digest", &ParamSet::digest)
      .def("__repr__", [](const ParamSet& p) {
        return "ParamSet(p=" + std::to_string(p.dim()) + ", upsilon=" + std::to_string(p.upsilon()) +
               ", max_degree=" + std::to_string(p.max_degree()) + ")";
      });

  m.def("m_first", [](const ParamSet& p, int n) { return coefficients(m_first(p, n)); },
        "Monomial coefficients of the first family.", py::arg("params"), py::arg("n"));
  m.def("m_second", [](const ParamSet& p, int n) { return coefficients(m_second(p, n)); },
        "Monomial coefficients of the second family.", py::arg("params"), py::arg("n"));
  m.def(
      "eval",
      [](const ParamSet& p, int n, Complex u, const std::string& family) {
        if (family != "first" && family != "second") throw py::value_error("family must be 'first' or 'second'");
        return (family == "first" ? m_first(p, n) : m_second(p, n))(u);
      },
      py::arg("params"), py::arg("n"), py::arg("u"), py::arg("family") = "first");
  m.def("m_first_hypergeometric", &m_first_hypergeometric, py::arg("params"), py::arg("n"), py::arg("u"));
  m.def("jacobi_first", [](const ParamSet& p, int n, Complex x) { return jacobi_first(p, n, x); });

  m.def("pochhammer", &pochhammer, py::arg("S"), py::arg("k"));
  m.def("gamma_matrix", &gamma_matrix);
  m.def("gamma_matrix_inv", &gamma_matrix_inv);
  m.def("beta_matrix", &beta_matrix);
  m.def("weight_integral", &weight_integral, py::arg("S"), py::arg("V"), py::arg("max_degree") = 0);
  m.def(
      "hypergeometric_pfq",
      [](const std::vector<Matrix>& num, const std::vector<Matrix>& den, Complex z) {
        return hypergeometric_pfq(num, den, z);
      },
      py::arg("numerators"), py::arg("denominators"), py::arg("z"));
  m.def("delta_params", &delta_params);

  m.def("biorth_closed", &biorth_closed, py::arg("params"), py::arg("n"));
  m.def(
      "biorth_numeric",
      [](const ParamSet& p, int n, int s, int points) {
        return biorth_numeric(p, n, s, QuadRule::gauss_legendre(points)).value;
      },
      py::arg("params"), py::arg("n"), py::arg("s"), py::arg("quad_points") = 200);
  m.def("weight_eval", &weight_eval, py::arg("u"), py::arg("H"), py::arg("C"));

  m.def(
      "run_suite",
      [](const ParamSet& p, std::vector<std::string> identities, std::optional<int> max_n,
         std::optional<double> tol, unsigned threads) {
        SuiteConfig config;
        for (const auto& name : identities) config.identities.insert(identity_from_string(name));
        config.max_n = max_n;
        config.tol = tol;
        config.threads = threads;
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(p, config);
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("params"), py::arg("identities") = std::vector<std::string>{}, py::arg("max_n") = py::none(),
      py::arg("tol") = py::none(), py::arg("threads") = 1);
  m.def("identities", [] {
    std::vector<std::string> names;
    for (IdentityId id : all_identities()) names.emplace_back(to_string(id));
    return names;
  });
}
