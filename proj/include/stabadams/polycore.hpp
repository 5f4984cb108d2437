#pragma once

#include <complex>
#include <vector>

namespace stabadams {

using Complex = std::complex<double>;

/// Coefficients of an explicit Adams-type method
///   y_{m+k} = y_{m+k-1} + tau * (beta_0 f_m + ... + beta_{k-1} f_{m+k-1}),
/// with generating polynomials rho(z) = z^k - z^{k-1} and
/// sigma(z) = sum_j beta_j z^j.
struct AdamsCoefficients {
  int k = 0;
  std::vector<double> beta;

  AdamsCoefficients() = default;
  explicit AdamsCoefficients(std::vector<double> b);

  /// beta_j with the zero-padding convention: 0 for j < 0 or j > k-1.
  double beta_at(int j) const {
    return (j < 0 || j >= k) ? 0.0 : beta[static_cast<size_t>(j)];
  }

  /// sigma(1) = sum of the coefficients.
  double sigma_one() const;
};

Complex eval_rho(int k, Complex zeta);
Complex eval_sigma(const AdamsCoefficients& coeffs, Complex zeta);

/// mu_beta(zeta) = rho(zeta) / sigma(zeta). Throws PoleError when sigma
/// underflows at zeta.
Complex eval_mu(const AdamsCoefficients& coeffs, Complex zeta);

/// All k roots (with multiplicity) of rho(zeta) - mu * sigma(zeta),
/// computed as companion-matrix eigenvalues.
std::vector<Complex> char_roots(const AdamsCoefficients& coeffs, Complex mu);

/// nu_beta(phi) = Im[ rho(e^{i phi}) * conj(sigma(e^{i phi})) ]
///             = sum_{j=1}^{k} (beta_{k-j} - beta_{k-j-1}) sin(j phi),
/// with out-of-range beta indices treated as zero.
double eval_nu(const AdamsCoefficients& coeffs, double phi);

}  // namespace stabadams
