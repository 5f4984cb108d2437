#include "stabadams/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabadams/errors.hpp"
#include "stabadams/synth.hpp"

namespace stabadams {

namespace {
constexpr double kRootModulusTol = 1e-9;
constexpr double kUnitBand = 1e-7;
constexpr double kSeparationTol = 1e-7;
}  // namespace

LocusCurve trace_locus(const AdamsCoefficients& coeffs, int n_points) {
  if (n_points < 8) throw std::invalid_argument("trace_locus: need n_points >= 8");
  LocusCurve curve;
  curve.k = coeffs.k;
  curve.points.reserve(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    double phi = 2.0 * M_PI * i / n_points;
    Complex zeta = std::polar(1.0, phi);
    curve.points.push_back({phi, eval_mu(coeffs, zeta)});
  }
  return curve;
}

bool stable_at(const AdamsCoefficients& coeffs, Complex mu) {
  std::vector<Complex> roots = char_roots(coeffs, mu);
  std::vector<Complex> near_unit;
  for (const Complex& z : roots) {
    double r = std::abs(z);
    if (r > 1.0 + kRootModulusTol) return false;
    if (r >= 1.0 - kUnitBand) near_unit.push_back(z);
  }
  for (size_t i = 0; i < near_unit.size(); ++i)
    for (size_t j = i + 1; j < near_unit.size(); ++j)
      if (std::abs(near_unit[i] - near_unit[j]) < kSeparationTol) return false;
  return true;
}

IntervalResult measure_interval(const AdamsCoefficients& coeffs) {
  IntervalResult res;
  res.ell_formula = interval_length_formula(coeffs);

  // Scan towards the first instability; regions of damped or odd methods
  // can be non-convex along the axis, so the scan precedes the bisection.
  const double base = (res.ell_formula > 1e-9) ? res.ell_formula : 1.0;
  const double step = base / 1000.0;
  const int max_scan = 1400;  // covers 1.4 * base

  double stable_mu = 0.0;
  double unstable_mu = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= max_scan; ++i) {
    double mu = -i * step;
    if (stable_at(coeffs, Complex(mu, 0.0))) {
      stable_mu = mu;
    } else {
      unstable_mu = mu;
      bracketed = true;
      break;
    }
  }

  if (!bracketed) {
    // Stable on the whole scanned range: report the scan end.
    res.ell_oracle = -stable_mu;
  } else {
    double a = stable_mu;      // stable
    double c = unstable_mu;    // unstable
    for (int iter = 0; iter < 80 && (a - c) > 1e-10; ++iter) {
      double mid = 0.5 * (a + c);
      if (stable_at(coeffs, Complex(mid, 0.0)))
        a = mid;
      else
        c = mid;
    }
    res.ell_oracle = -a;
  }

  res.agree = std::abs(res.ell_formula - res.ell_oracle) <= 1e-6 * (1.0 + res.ell_formula);
  return res;
}

double error_constant(const AdamsCoefficients& coeffs, int p) {
  const int k = coeffs.k;
  std::vector<double> res = order_residuals(coeffs, p);
  for (double r : res)
    if (std::abs(r) > 1e-8)
      throw OrderViolation("error_constant: order conditions through p are not satisfied");

  double factorial = 1.0;
  for (int i = 2; i <= p + 1; ++i) factorial *= i;

  auto powi = [](double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };

  // alpha_k = 1, alpha_{k-1} = -1, all other alpha_j = 0; beta_k = 0.
  double sum = powi(static_cast<double>(k), p + 1) - powi(static_cast<double>(k - 1), p + 1);
  double beta_part = 0.0;
  for (int j = 0; j < k; ++j) beta_part += coeffs.beta[static_cast<size_t>(j)] * powi(static_cast<double>(j), p);
  sum -= (p + 1) * beta_part;

  return sum / factorial / coeffs.sigma_one();
}

}  // namespace stabadams
