#include "stabadams/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stabadams/errors.hpp"

namespace stabadams {

namespace {

double max_norm(const State& y) {
  double m = 0.0;
  for (double v : y) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const State& y) {
  for (double v : y)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

History step_history_init(const OdeProblem& problem, const MethodSpec& method, double tau) {
  if (!problem.reference)
    throw ReferenceUnavailable("step_history_init: problem '" + problem.name +
                               "' has no reference provider");
  const int k = method.k;
  if (tau * (k - 1) >= problem.t_end - problem.t0)
    throw std::invalid_argument("step_history_init: starting window exceeds the time span");

  History h;
  h.states.reserve(static_cast<size_t>(k));
  h.fvalues.reserve(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    double t = problem.t0 + j * tau;
    State y = (j == 0) ? problem.y0 : problem.reference(t);
    State f(static_cast<size_t>(problem.dim));
    problem.rhs(t, y, f);
    h.states.push_back(std::move(y));
    h.fvalues.push_back(std::move(f));
  }
  return h;
}

IntegrationRun run_fixed(const OdeProblem& problem, const MethodSpec& method, double tau) {
  if (tau <= 0.0) throw std::invalid_argument("run_fixed: tau must be positive");
  const double span = problem.t_end - problem.t0;
  const long n_total = std::lround(span / tau);
  if (n_total < 1 || std::abs(n_total * tau - span) > 1e-12 * span)
    throw std::invalid_argument("run_fixed: tau must divide the time span");

  const int k = method.k;
  History hist = step_history_init(problem, method, tau);

  IntegrationRun run;
  run.tau = tau;

  // Ring buffer of the k most recent f-values; index j = 0 is the oldest.
  std::vector<State> f(hist.fvalues.begin(), hist.fvalues.end());
  State y = hist.states.back();

  double init_scale = 1.0;
  for (const State& s : hist.states) init_scale = std::max(init_scale, max_norm(s));
  run.max_norm = init_scale;

  const size_t dim = static_cast<size_t>(problem.dim);
  State fresh(dim);
  for (long m = k - 1; m < n_total; ++m) {
    // y_{m+1} = y_m + tau * sum_j beta_j f_{m+1-k+j}
    for (size_t c = 0; c < dim; ++c) {
      double acc = 0.0;
      for (int j = 0; j < k; ++j) acc += method.beta.beta[static_cast<size_t>(j)] * f[static_cast<size_t>(j)][c];
      y[c] += tau * acc;
    }
    ++run.steps;

    if (!all_finite(y) || max_norm(y) > 1e10 * init_scale) {
      run.status = RunStatus::DIVERGED;
      run.endpoint = y;
      return run;
    }
    run.max_norm = std::max(run.max_norm, max_norm(y));

    double t_new = problem.t0 + (m + 1) * tau;
    problem.rhs(t_new, y, fresh);
    ++run.f_evals;
    std::rotate(f.begin(), f.begin() + 1, f.end());
    f.back() = fresh;
  }

  run.endpoint = std::move(y);
  run.status = RunStatus::OK;
  return run;
}

ConvergenceReport converge_study(const OdeProblem& problem, const MethodSpec& method,
                                 const std::vector<double>& taus) {
  if (!problem.reference)
    throw ReferenceUnavailable("converge_study: problem '" + problem.name +
                               "' has no reference provider");
  State ref_end = problem.reference(problem.t_end);

  ConvergenceReport report;
  for (double tau : taus) {
    ConvergencePoint pt;
    pt.tau = tau;
    IntegrationRun run = run_fixed(problem, method, tau);
    pt.status = run.status;
    if (run.status == RunStatus::OK) {
      double err = 0.0;
      for (size_t i = 0; i < ref_end.size(); ++i)
        err = std::max(err, std::abs(run.endpoint[i] - ref_end[i]));
      pt.error = err;
    } else {
      pt.error = std::numeric_limits<double>::infinity();
    }
    report.points.push_back(pt);
  }

  // Observed order: least-squares slope of log(error) vs log(tau) over the
  // trailing run of stable points above the noise floor.
  const double floor = 100.0 * problem.reference_accuracy;
  std::vector<std::pair<double, double>> fit;  // (log tau, log err)
  for (auto it = report.points.rbegin(); it != report.points.rend(); ++it) {
    if (it->status != RunStatus::OK) break;
    if (it->error < floor) continue;
    fit.emplace_back(std::log(it->tau), std::log(it->error));
  }
  if (fit.size() >= 3) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, yv] : fit) {
      sx += x;
      sy += yv;
      sxx += x * x;
      sxy += x * yv;
    }
    double n = static_cast<double>(fit.size());
    report.observed_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report.order_defined = true;
  }
  return report;
}

}  // namespace stabadams
