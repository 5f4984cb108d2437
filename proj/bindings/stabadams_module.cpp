#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabadams/errors.hpp"
#include "stabadams/integrate.hpp"
#include "stabadams/io.hpp"
#include "stabadams/problems.hpp"
#include "stabadams/stability.hpp"
#include "stabadams/synth.hpp"

namespace py = pybind11;
using namespace stabadams;

namespace {

AdamsCoefficients coeffs_from_list(const std::vector<double>& beta) {
  return AdamsCoefficients(beta);
}

OdeProblem problem_by_name(const std::string& name, double lambda, double mu, int n) {
  if (name == "linear") return linear_scalar(lambda);
  if (name == "hires") return hires();
  if (name == "burgers") return burgers_mol(mu, n);
  throw std::invalid_argument("unknown problem '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_stabadams, m) {
  m.doc() = "Explicit Adams-type methods with extended stability intervals";

  py::register_exception<PoleError>(m, "PoleError");
  py::register_exception<OrderViolation>(m, "OrderViolation");
  py::register_exception<ReferenceUnavailable>(m, "ReferenceUnavailable");

  py::class_<MethodSpec>(m, "MethodSpec")
      .def_readonly("k", &MethodSpec::k)
      .def_readonly("p", &MethodSpec::p)
      .def_property_readonly("beta", [](const MethodSpec& s) { return s.beta.beta; })
      .def_readonly("ell", &MethodSpec::ell)
      .def_readonly("error_const", &MethodSpec::error_const)
      .def_readonly("epsilon", &MethodSpec::epsilon)
      .def("to_json", [](const MethodSpec& s) { return method_to_json(s); })
      .def("__repr__", [](const MethodSpec& s) {
        return "MethodSpec(k=" + std::to_string(s.k) + ", p=" + std::to_string(s.p) +
               ", ell=" + std::to_string(s.ell) + ")";
      });

  py::class_<IntervalResult>(m, "IntervalResult")
      .def_readonly("ell_formula", &IntervalResult::ell_formula)
      .def_readonly("ell_oracle", &IntervalResult::ell_oracle)
      .def_readonly("agree", &IntervalResult::agree);

  py::class_<ConvergencePoint>(m, "ConvergencePoint")
      .def_readonly("tau", &ConvergencePoint::tau)
      .def_readonly("error", &ConvergencePoint::error)
      .def_property_readonly("diverged",
                             [](const ConvergencePoint& p) { return p.status == RunStatus::DIVERGED; });

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("points", &ConvergenceReport::points)
      .def_readonly("observed_order", &ConvergenceReport::observed_order)
      .def_readonly("order_defined", &ConvergenceReport::order_defined);

  m.def("eval_mu",
        [](const std::vector<double>& beta, Complex zeta) {
          return eval_mu(coeffs_from_list(beta), zeta);
        },
        py::arg("beta"), py::arg("zeta"));
  m.def("eval_nu",
        [](const std::vector<double>& beta, double phi) {
          return eval_nu(coeffs_from_list(beta), phi);
        },
        py::arg("beta"), py::arg("phi"));
  m.def("char_roots",
        [](const std::vector<double>& beta, Complex mu) {
          return char_roots(coeffs_from_list(beta), mu);
        },
        py::arg("beta"), py::arg("mu"));

  m.def("map_T", [](const std::vector<double>& b) { return map_T(BVector{b}).beta; },
        py::arg("b"));
  m.def("order_residuals",
        [](const std::vector<double>& beta, int p) {
          return order_residuals(coeffs_from_list(beta), p);
        },
        py::arg("beta"), py::arg("p"));
  m.def("first_order", &first_order, py::arg("k"));
  m.def("classical_adams", &classical_adams, py::arg("k"));
  m.def("damping_deltas",
        [](const std::vector<double>& beta) { return damping_deltas(coeffs_from_list(beta)); },
        py::arg("beta"));
  m.def("damping_weights",
        [](const std::vector<double>& beta) { return damping_weights(coeffs_from_list(beta)); },
        py::arg("beta"));
  m.def("apply_damping",
        [](const std::vector<double>& beta, double epsilon) {
          return apply_damping(coeffs_from_list(beta), epsilon);
        },
        py::arg("beta"), py::arg("epsilon"));
  m.def("damped_first_order_ell", &damped_first_order_ell, py::arg("k"), py::arg("epsilon"));

  m.def("optimize",
        [](int k, int p, int attempts, std::uint64_t seed) {
          OptimizeOptions opt;
          opt.attempts = attempts;
          opt.seed = seed;
          OptimizeResult res = optimize(k, p, opt);
          if (!res.converged) throw std::runtime_error(res.message);
          return res.method;
        },
        py::arg("k"), py::arg("p"), py::arg("attempts") = 64, py::arg("seed") = 0);

  m.def("trace_locus",
        [](const std::vector<double>& beta, int n_points) {
          LocusCurve c = trace_locus(coeffs_from_list(beta), n_points);
          std::vector<std::pair<double, Complex>> out;
          out.reserve(c.points.size());
          for (const LocusPoint& pt : c.points) out.emplace_back(pt.phi, pt.mu);
          return out;
        },
        py::arg("beta"), py::arg("n_points") = 512);
  m.def("stable_at",
        [](const std::vector<double>& beta, Complex mu) {
          return stable_at(coeffs_from_list(beta), mu);
        },
        py::arg("beta"), py::arg("mu"));
  m.def("measure_interval",
        [](const std::vector<double>& beta) { return measure_interval(coeffs_from_list(beta)); },
        py::arg("beta"));
  m.def("error_constant",
        [](const std::vector<double>& beta, int p) {
          return error_constant(coeffs_from_list(beta), p);
        },
        py::arg("beta"), py::arg("p"));

  m.def("method_from_json", &method_from_json, py::arg("json_text"));

  m.def("run_fixed",
        [](const std::string& problem, const MethodSpec& method, double tau, double lambda,
           double mu, int n) {
          OdeProblem prob = problem_by_name(problem, lambda, mu, n);
          IntegrationRun run = run_fixed(prob, method, tau);
          py::dict out;
          out["steps"] = run.steps;
          out["f_evals"] = run.f_evals;
          out["endpoint"] = run.endpoint;
          out["max_norm"] = run.max_norm;
          out["diverged"] = run.status == RunStatus::DIVERGED;
          return out;
        },
        py::arg("problem"), py::arg("method"), py::arg("tau"), py::arg("lambda_") = -1.0,
        py::arg("mu") = 0.005, py::arg("n") = 500);

  m.def("converge_study",
        [](const std::string& problem, const MethodSpec& method, const std::vector<double>& taus,
           double lambda, double mu, int n) {
          OdeProblem prob = problem_by_name(problem, lambda, mu, n);
          return converge_study(prob, method, taus);
        },
        py::arg("problem"), py::arg("method"), py::arg("taus"), py::arg("lambda_") = -1.0,
        py::arg("mu") = 0.005, py::arg("n") = 500);
}
