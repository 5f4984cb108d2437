#pragma once

#include <vector>

#include "stabadams/polycore.hpp"

namespace stabadams {

struct LocusPoint {
  double phi;
  Complex mu;
};

/// Sampled root locus curve mu_beta(e^{i phi}), phi strictly increasing.
struct LocusCurve {
  int k = 0;
  std::vector<LocusPoint> points;
};

struct IntervalResult {
  double ell_formula = 0.0;  // from -mu_beta(-1)
  double ell_oracle = 0.0;   // from root-condition bisection
  bool agree = false;        // |formula - oracle| <= 1e-6 * (1 + formula)
};

/// Samples mu_beta(e^{i phi_i}) at phi_i = 2 pi i / n_points, i = 0..n-1.
LocusCurve trace_locus(const AdamsCoefficients& coeffs, int n_points);

/// Root condition at lambda*tau = mu: all characteristic roots have
/// |zeta| <= 1 + 1e-9 and near-unit-modulus roots are pairwise separated
/// by at least 1e-7.
bool stable_at(const AdamsCoefficients& coeffs, Complex mu);

/// Stability interval length both by the closed-form -mu_beta(-1) and by an
/// independent scan-then-bisect on the root condition along the negative
/// real axis.
IntervalResult measure_interval(const AdamsCoefficients& coeffs);

/// Error constant C = C_{p+1} / sigma(1) with
///   C_{p+1} = 1/(p+1)! * (k^{p+1} - (k-1)^{p+1} - (p+1) sum_j beta_j j^p).
/// Throws OrderViolation unless the order residuals through p are <= 1e-8.
double error_constant(const AdamsCoefficients& coeffs, int p);

}  // namespace stabadams
