#pragma once

#include <vector>

#include "stabadams/problems.hpp"
#include "stabadams/synth.hpp"

namespace stabadams {

enum class RunStatus { OK, DIVERGED };

struct History {
  std::vector<State> states;   // y at t0, t0+tau, ..., t0+(k-1)tau
  std::vector<State> fvalues;  // f evaluated at the same points
};

struct IntegrationRun {
  double tau = 0.0;
  long steps = 0;           // multistep steps taken
  long f_evals = 0;         // one per step; starter cost excluded
  State endpoint;           // last computed state (partial when DIVERGED)
  double max_norm = 0.0;    // max over the trajectory of the max-norm
  RunStatus status = RunStatus::OK;
};

struct ConvergencePoint {
  double tau = 0.0;
  double error = 0.0;  // max-norm endpoint error vs reference
  RunStatus status = RunStatus::OK;
};

struct ConvergenceReport {
  std::vector<ConvergencePoint> points;  // decreasing tau
  double observed_order = 0.0;
  bool order_defined = false;
};

/// Starting values from the problem's reference solution.  Throws
/// ReferenceUnavailable when the problem has no reference provider.
History step_history_init(const OdeProblem& problem, const MethodSpec& method, double tau);

/// Fixed-step integration of the full time span.  tau must divide
/// t_end - t0 to 1e-12 relative.  Instability is reported as
/// RunStatus::DIVERGED, keeping the last finite state.
IntegrationRun run_fixed(const OdeProblem& problem, const MethodSpec& method, double tau);

/// Series of fixed-step runs with decreasing tau; fits the observed order
/// on the largest contiguous stable tail of at least 3 points above the
/// reference noise floor.
ConvergenceReport converge_study(const OdeProblem& problem, const MethodSpec& method,
                                 const std::vector<double>& taus);

}  // namespace stabadams
