#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stabadams {

using State = std::vector<double>;
using Rhs = std::function<void(double t, const State& y, State& dy)>;
using Reference = std::function<State(double t)>;

/// An initial value problem y' = f(t, y), y(t0) = y0, together with a
/// reference-solution provider used for starting values and error
/// measurement.
struct OdeProblem {
  std::string name;
  int dim = 0;
  double t0 = 0.0;
  double t_end = 0.0;
  State y0;
  Rhs rhs;
  Reference reference;               // may be empty
  double reference_accuracy = 0.0;   // max-norm accuracy tag of `reference`
};

/// The scalar model problem y' = lambda * y, y(0) = 1, with the exact
/// solution as reference.
OdeProblem linear_scalar(double lambda, double t_end = 1.0);

/// The 8-dimensional HIRES chemical reaction system on [0, 40].
OdeProblem hires();

/// Method-of-lines discretization of the viscous Burgers equation
///   u_t + (u^2/2)_x = mu u_xx on [0, 1] x [0, 2.5],
///   u(x, 0) = 1.5 x (1-x)^2,  u(0, t) = u(1, t) = 0,
/// with central differences on n_interior interior nodes.
OdeProblem burgers_mol(double mu = 0.005, int n_interior = 500);

/// Classical fixed-step RK4 from (t0, y0) to t1 with step count chosen so
/// the step is at most h_max. Exposed for reference-provider validation.
State rk4_integrate(const Rhs& rhs, double t0, const State& y0, double t1, double h_max);

}  // namespace stabadams
