#include "stabadams/polycore.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "stabadams/errors.hpp"

namespace stabadams {

AdamsCoefficients::AdamsCoefficients(std::vector<double> b)
    : k(static_cast<int>(b.size())), beta(std::move(b)) {
  if (k < 1) throw std::invalid_argument("AdamsCoefficients: k must be >= 1");
  for (double v : beta) {
    if (!std::isfinite(v))
      throw std::invalid_argument("AdamsCoefficients: non-finite coefficient");
  }
}

double AdamsCoefficients::sigma_one() const {
  double s = 0.0;
  for (double v : beta) s += v;
  return s;
}

Complex eval_rho(int k, Complex zeta) {
  Complex zk1 = std::pow(zeta, k - 1);
  return zk1 * (zeta - 1.0);
}

Complex eval_sigma(const AdamsCoefficients& coeffs, Complex zeta) {
  // Horner's rule, highest power first.
  Complex s = 0.0;
  for (int j = coeffs.k - 1; j >= 0; --j) s = s * zeta + coeffs.beta[static_cast<size_t>(j)];
  return s;
}

Complex eval_mu(const AdamsCoefficients& coeffs, Complex zeta) {
  Complex s = eval_sigma(coeffs, zeta);
  if (std::abs(s) < 1e-300)
    throw PoleError("eval_mu: sigma(zeta) underflowed, zeta is a root of sigma");
  return eval_rho(coeffs.k, zeta) / s;
}

std::vector<Complex> char_roots(const AdamsCoefficients& coeffs, Complex mu) {
  const int k = coeffs.k;
  // p(z) = z^k - z^{k-1} - mu * sum_j beta_j z^j, monic of degree k.
  std::vector<Complex> c(static_cast<size_t>(k) + 1, Complex(0.0));
  c[static_cast<size_t>(k)] = 1.0;
  c[static_cast<size_t>(k - 1)] = -1.0;
  for (int j = 0; j < k; ++j) c[static_cast<size_t>(j)] -= mu * coeffs.beta[static_cast<size_t>(j)];
  if (std::abs(c[static_cast<size_t>(k)]) == 0.0)
    throw DegenerateError("char_roots: leading coefficient vanished");

  if (k == 1) return {-c[0] / c[1]};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(k, k);
  for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < k; ++i) companion(i, k - 1) = -c[static_cast<size_t>(i)];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

double eval_nu(const AdamsCoefficients& coeffs, double phi) {
  double v = 0.0;
  for (int j = 1; j <= coeffs.k; ++j)
    v += (coeffs.beta_at(coeffs.k - j) - coeffs.beta_at(coeffs.k - j - 1)) * std::sin(j * phi);
  return v;
}

}  // namespace stabadams
