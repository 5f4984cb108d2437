#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabadams/polycore.hpp"

namespace stabadams {

/// Optimization variables b_0..b_{k-1} of the quadratic synthesis problem.
struct BVector {
  std::vector<double> b;
};

/// A synthesized method together with its analysis summary.
struct MethodSpec {
  int k = 0;
  int p = 0;                  // consistency order
  AdamsCoefficients beta;
  double ell = 0.0;           // stability interval length
  double error_const = 0.0;   // error constant C
  double epsilon = 0.0;       // damping parameter, 0 = undamped
};

/// The change of variables b -> beta.  Builds the cosine-basis coefficients
///   atilde_j = 2 sum_{l=0..j} b_l b_{k-1+l-j}   (j = 0..k-2),
///   atilde_{k-1} = sum_j b_j^2,
/// then beta_j = (atilde_{j-1} + atilde_j)/2 for j <= k-2 (atilde_{-1} = 0)
/// and beta_{k-1} = atilde_{k-1} + atilde_{k-2}/2.
AdamsCoefficients map_T(const BVector& b);

/// Order-condition residuals (G_1, ..., G_p):
///   G_1 = sum beta_j - 1,
///   G_q = sum (1-k+j)^{q-1} beta_j - 1/q  for q >= 2.
std::vector<double> order_residuals(const AdamsCoefficients& coeffs, int p);

/// Closed-form stability-optimal first-order family beta_j = (2j+1)/k^2,
/// with ell = 2k and error constant k/3 + 1/(6k).
MethodSpec first_order(int k);

/// Autocorrelation coefficients of sigma on the unit circle:
///   delta_0 = sum beta_j^2,  delta_j = 2 sum_l beta_l beta_{l+j}.
std::vector<double> damping_deltas(const AdamsCoefficients& coeffs);

/// The Delta_j combination entering the damped coefficients:
///   Delta_j = (delta_{k-j} + delta_{k-j-1})/2 for j <= k-2 (delta_k = 0),
///   Delta_{k-1} = delta_1/2 + delta_0.
std::vector<double> damping_weights(const AdamsCoefficients& coeffs);

/// Damped modification beta_hat_j = (beta_j + eps * Delta_j)/(1 + eps).
/// Requires sum beta_j = 1 (first-order consistency); preserves it exactly.
MethodSpec apply_damping(const AdamsCoefficients& coeffs, double epsilon);

/// Stability interval length of the damped first-order family,
/// 6(1+eps)k^3 / (eps(4k^2-1) + 3k^2).
double damped_first_order_ell(int k, double epsilon);

/// -mu_beta(-1) = -2(-1)^k / sum_j (-1)^j beta_j, clamped at 0.
double interval_length_formula(const AdamsCoefficients& coeffs);

struct OptimizeOptions {
  int attempts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 200;
  double constraint_tol = 1e-10;
  double kkt_tol = 1e-9;
  double perturbation_scale = 0.5;
};

struct OptimizeResult {
  bool converged = false;
  MethodSpec method;        // valid only when converged
  BVector b;                // minimizer, sign-normalized so sum b_j >= 0
  double objective = 0.0;   // sum b_j^2
  int converged_attempts = 0;
  std::string message;
};

/// Minimize sum b_j^2 subject to G_q(T(b)) = 0 for q = 1..p, by multi-start
/// Newton iteration on the KKT system.  Mirrors the non-existence of some
/// (k, p) combinations by reporting converged = false.
OptimizeResult optimize(int k, int p, const OptimizeOptions& options = {});

/// The unique explicit Adams-Bashforth method of order p = k, from the
/// linear system G_1 = ... = G_k = 0.
MethodSpec classical_adams(int k);

}  // namespace stabadams
