#include "stabadams/synth.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "stabadams/errors.hpp"
#include "stabadams/stability.hpp"

namespace stabadams {

namespace {

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

AdamsCoefficients map_T(const BVector& bv) {
  const int k = static_cast<int>(bv.b.size());
  if (k < 1) throw std::invalid_argument("map_T: empty b vector");
  const auto& b = bv.b;

  std::vector<double> atilde(static_cast<size_t>(k), 0.0);
  for (int j = 0; j <= k - 2; ++j) {
    double s = 0.0;
    for (int l = 0; l <= j; ++l) s += b[static_cast<size_t>(l)] * b[static_cast<size_t>(k - 1 + l - j)];
    atilde[static_cast<size_t>(j)] = 2.0 * s;
  }
  double sq = 0.0;
  for (double v : b) sq += v * v;
  atilde[static_cast<size_t>(k - 1)] = sq;

  std::vector<double> beta(static_cast<size_t>(k), 0.0);
  for (int j = 0; j <= k - 2; ++j) {
    double prev = (j == 0) ? 0.0 : atilde[static_cast<size_t>(j - 1)];
    beta[static_cast<size_t>(j)] = 0.5 * (prev + atilde[static_cast<size_t>(j)]);
  }
  beta[static_cast<size_t>(k - 1)] =
      atilde[static_cast<size_t>(k - 1)] + (k >= 2 ? 0.5 * atilde[static_cast<size_t>(k - 2)] : 0.0);
  return AdamsCoefficients(std::move(beta));
}

std::vector<double> order_residuals(const AdamsCoefficients& coeffs, int p) {
  const int k = coeffs.k;
  if (p < 1 || p > k) throw std::invalid_argument("order_residuals: need 1 <= p <= k");
  std::vector<double> res(static_cast<size_t>(p), 0.0);
  res[0] = coeffs.sigma_one() - 1.0;
  for (int q = 2; q <= p; ++q) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += ipow(1.0 - k + j, q - 1) * coeffs.beta[static_cast<size_t>(j)];
    res[static_cast<size_t>(q - 1)] = s - 1.0 / q;
  }
  return res;
}

MethodSpec first_order(int k) {
  if (k < 1) throw std::invalid_argument("first_order: k must be >= 1");
  std::vector<double> beta(static_cast<size_t>(k));
  const double k2 = static_cast<double>(k) * k;
  for (int j = 0; j < k; ++j) beta[static_cast<size_t>(j)] = (2.0 * j + 1.0) / k2;
  MethodSpec m;
  m.k = k;
  m.p = 1;
  m.beta = AdamsCoefficients(std::move(beta));
  m.ell = 2.0 * k;
  m.error_const = k / 3.0 + 1.0 / (6.0 * k);
  m.epsilon = 0.0;
  return m;
}

std::vector<double> damping_deltas(const AdamsCoefficients& coeffs) {
  const int k = coeffs.k;
  std::vector<double> delta(static_cast<size_t>(k), 0.0);
  for (int j = 0; j < k; ++j) {
    double s = 0.0;
    for (int l = 0; l + j < k; ++l)
      s += coeffs.beta[static_cast<size_t>(l)] * coeffs.beta[static_cast<size_t>(l + j)];
    delta[static_cast<size_t>(j)] = (j == 0) ? s : 2.0 * s;
  }
  return delta;
}

std::vector<double> damping_weights(const AdamsCoefficients& coeffs) {
  const int k = coeffs.k;
  std::vector<double> delta = damping_deltas(coeffs);
  auto delta_at = [&](int j) { return (j >= 0 && j < k) ? delta[static_cast<size_t>(j)] : 0.0; };
  std::vector<double> weights(static_cast<size_t>(k), 0.0);
  for (int j = 0; j <= k - 2; ++j)
    weights[static_cast<size_t>(j)] = 0.5 * (delta_at(k - j) + delta_at(k - j - 1));
  weights[static_cast<size_t>(k - 1)] = 0.5 * delta_at(1) + delta_at(0);
  return weights;
}

MethodSpec apply_damping(const AdamsCoefficients& coeffs, double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("apply_damping: epsilon must be >= 0");
  if (std::abs(coeffs.sigma_one() - 1.0) > 1e-10)
    throw OrderViolation("apply_damping: input does not satisfy sum beta_j = 1");

  const int k = coeffs.k;
  std::vector<double> weights = damping_weights(coeffs);
  std::vector<double> damped(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j)
    damped[static_cast<size_t>(j)] =
        (coeffs.beta[static_cast<size_t>(j)] + epsilon * weights[static_cast<size_t>(j)]) / (1.0 + epsilon);

  MethodSpec m;
  m.k = k;
  m.p = 1;
  m.beta = AdamsCoefficients(std::move(damped));
  m.ell = interval_length_formula(m.beta);
  m.error_const = error_constant(m.beta, 1);
  m.epsilon = epsilon;
  return m;
}

double damped_first_order_ell(int k, double epsilon) {
  const double kd = static_cast<double>(k);
  return 6.0 * (1.0 + epsilon) * kd * kd * kd / (epsilon * (4.0 * kd * kd - 1.0) + 3.0 * kd * kd);
}

double interval_length_formula(const AdamsCoefficients& coeffs) {
  double s = 0.0;
  for (int j = 0; j < coeffs.k; ++j)
    s += ((j % 2 == 0) ? 1.0 : -1.0) * coeffs.beta[static_cast<size_t>(j)];
  if (s == 0.0) return 0.0;
  double sign_k = (coeffs.k % 2 == 0) ? 1.0 : -1.0;
  double ell = -2.0 * sign_k / s;
  return ell > 0.0 ? ell : 0.0;
}

namespace {

// Constraint q as a quadratic form: G_q(T(b)) = b' A_q b - 1/q.
std::vector<Eigen::MatrixXd> constraint_matrices(int k, int p) {
  // atilde_j = b' P_j b
  std::vector<Eigen::MatrixXd> P(static_cast<size_t>(k), Eigen::MatrixXd::Zero(k, k));
  for (int j = 0; j <= k - 2; ++j) {
    for (int l = 0; l <= j; ++l) {
      int m = k - 1 + l - j;
      P[static_cast<size_t>(j)](l, m) += 1.0;
      P[static_cast<size_t>(j)](m, l) += 1.0;
    }
  }
  P[static_cast<size_t>(k - 1)] = Eigen::MatrixXd::Identity(k, k);

  // beta_i = b' M_i b
  std::vector<Eigen::MatrixXd> M(static_cast<size_t>(k), Eigen::MatrixXd::Zero(k, k));
  for (int i = 0; i <= k - 2; ++i) {
    Eigen::MatrixXd prev = (i == 0) ? Eigen::MatrixXd::Zero(k, k) : P[static_cast<size_t>(i - 1)];
    M[static_cast<size_t>(i)] = 0.5 * (prev + P[static_cast<size_t>(i)]);
  }
  M[static_cast<size_t>(k - 1)] = P[static_cast<size_t>(k - 1)];
  if (k >= 2) M[static_cast<size_t>(k - 1)] += 0.5 * P[static_cast<size_t>(k - 2)];

  std::vector<Eigen::MatrixXd> A(static_cast<size_t>(p), Eigen::MatrixXd::Zero(k, k));
  for (int q = 1; q <= p; ++q) {
    for (int i = 0; i < k; ++i) {
      double w = (q == 1) ? 1.0 : ipow(1.0 - k + i, q - 1);
      A[static_cast<size_t>(q - 1)] += w * M[static_cast<size_t>(i)];
    }
  }
  return A;
}

struct KktState {
  Eigen::VectorXd b;
  Eigen::VectorXd lambda;
};

Eigen::VectorXd kkt_residual(const std::vector<Eigen::MatrixXd>& A, const KktState& s) {
  const int k = static_cast<int>(s.b.size());
  const int p = static_cast<int>(s.lambda.size());
  Eigen::VectorXd F(k + p);
  Eigen::VectorXd grad = 2.0 * s.b;
  for (int q = 0; q < p; ++q) grad += 2.0 * s.lambda(q) * (A[static_cast<size_t>(q)] * s.b);
  F.head(k) = grad;
  for (int q = 0; q < p; ++q)
    F(k + q) = s.b.dot(A[static_cast<size_t>(q)] * s.b) - 1.0 / (q + 1);
  return F;
}

// One multi-start attempt of Newton iteration on the KKT system.  Returns
// true when both the constraint residual and the stationarity residual meet
// their tolerances.
bool newton_attempt(const std::vector<Eigen::MatrixXd>& A, KktState& s, const OptimizeOptions& opt) {
  const int k = static_cast<int>(s.b.size());
  const int p = static_cast<int>(s.lambda.size());

  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    Eigen::VectorXd F = kkt_residual(A, s);
    double cons_norm = F.tail(p).lpNorm<Eigen::Infinity>();
    double stat_norm = F.head(k).lpNorm<Eigen::Infinity>();
    if (cons_norm <= opt.constraint_tol && stat_norm <= opt.kkt_tol) return true;

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(k + p, k + p);
    Eigen::MatrixXd H = 2.0 * Eigen::MatrixXd::Identity(k, k);
    for (int q = 0; q < p; ++q) H += 2.0 * s.lambda(q) * A[static_cast<size_t>(q)];
    J.topLeftCorner(k, k) = H;
    for (int q = 0; q < p; ++q) {
      Eigen::VectorXd g = 2.0 * (A[static_cast<size_t>(q)] * s.b);
      J.block(0, k + q, k, 1) = g;
      J.block(k + q, 0, 1, k) = g.transpose();
    }

    Eigen::VectorXd dz = J.colPivHouseholderQr().solve(-F);
    if (!dz.allFinite()) return false;

    // Backtracking on the residual norm.
    double f0 = F.squaredNorm();
    double alpha = 1.0;
    KktState trial = s;
    bool accepted = false;
    for (int ls = 0; ls < 30; ++ls) {
      trial.b = s.b + alpha * dz.head(k);
      trial.lambda = s.lambda + alpha * dz.tail(p);
      double f1 = kkt_residual(A, trial).squaredNorm();
      if (std::isfinite(f1) && f1 <= (1.0 - 1e-4 * alpha) * f0) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) return false;  // stalled
    s = trial;
  }
  Eigen::VectorXd F = kkt_residual(A, s);
  return F.tail(p).lpNorm<Eigen::Infinity>() <= opt.constraint_tol &&
         F.head(k).lpNorm<Eigen::Infinity>() <= opt.kkt_tol;
}

// Least-squares multipliers for the stationarity equation at b.
Eigen::VectorXd initial_lambda(const std::vector<Eigen::MatrixXd>& A, const Eigen::VectorXd& b) {
  const int k = static_cast<int>(b.size());
  const int p = static_cast<int>(A.size());
  Eigen::MatrixXd G(k, p);
  for (int q = 0; q < p; ++q) G.col(q) = 2.0 * (A[static_cast<size_t>(q)] * b);
  return G.colPivHouseholderQr().solve(-2.0 * b);
}

bool feasible_on_grid(const AdamsCoefficients& coeffs) {
  const int n = 2048;
  for (int i = 1; i <= n; ++i) {
    double phi = M_PI * i / (n + 1);
    if (eval_nu(coeffs, phi) < -1e-9) return false;
  }
  return true;
}

}  // namespace

OptimizeResult optimize(int k, int p, const OptimizeOptions& options) {
  if (k < 1 || p < 1 || p > k) throw std::invalid_argument("optimize: need 1 <= p <= k");

  const std::vector<Eigen::MatrixXd> A = constraint_matrices(k, p);
  OptimizeResult result;

  bool have_best = false;
  Eigen::VectorXd best_b;
  double best_obj = std::numeric_limits<double>::infinity();

  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    Eigen::VectorXd b0 = Eigen::VectorXd::Constant(k, 1.0 / k);
    if (attempt > 0) {
      std::mt19937_64 rng(options.seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
      std::normal_distribution<double> gauss(0.0, options.perturbation_scale);
      for (int i = 0; i < k; ++i) b0(i) += gauss(rng);
    }
    KktState s{b0, initial_lambda(A, b0)};
    if (!newton_attempt(A, s, options)) continue;

    // Sign normalization: b and -b give the same beta.
    if (s.b.sum() < 0.0) s.b = -s.b;
    double obj = s.b.squaredNorm();

    BVector bv;
    bv.b.assign(s.b.data(), s.b.data() + k);
    AdamsCoefficients beta = map_T(bv);

    // Post-checks: order residuals and feasibility of the locus curve.
    bool ok = true;
    for (double r : order_residuals(beta, p))
      if (std::abs(r) > 1e-10) ok = false;
    if (ok && !feasible_on_grid(beta)) ok = false;
    if (!ok) continue;

    ++result.converged_attempts;
    if (!have_best || obj < best_obj - 1e-12) {
      have_best = true;
      best_obj = obj;
      best_b = s.b;
    } else if (obj < best_obj + 1e-12 && (s.b - best_b).lpNorm<Eigen::Infinity>() > 1e-9) {
      // Distinct minima with tied objectives: keep the one whose formula
      // length agrees best with the root-condition oracle.
      BVector cur{std::vector<double>(s.b.data(), s.b.data() + k)};
      BVector prev{std::vector<double>(best_b.data(), best_b.data() + k)};
      IntervalResult ic = measure_interval(map_T(cur));
      IntervalResult ip = measure_interval(map_T(prev));
      if (std::abs(ic.ell_formula - ic.ell_oracle) < std::abs(ip.ell_formula - ip.ell_oracle)) {
        best_obj = obj;
        best_b = s.b;
      }
    }
  }

  if (!have_best) {
    result.converged = false;
    result.message = "NOT CONVERGED: no attempt reached constraint residual <= 1e-10";
    return result;
  }

  result.converged = true;
  result.b.b.assign(best_b.data(), best_b.data() + k);
  result.objective = best_obj;
  result.method.k = k;
  result.method.p = p;
  result.method.beta = map_T(result.b);
  result.method.ell = interval_length_formula(result.method.beta);
  result.method.error_const = error_constant(result.method.beta, p);
  result.method.epsilon = 0.0;
  return result;
}

MethodSpec classical_adams(int k) {
  if (k < 1) throw std::invalid_argument("classical_adams: k must be >= 1");
  Eigen::MatrixXd V(k, k);
  Eigen::VectorXd rhs(k);
  for (int q = 1; q <= k; ++q) {
    for (int j = 0; j < k; ++j) V(q - 1, j) = (q == 1) ? 1.0 : ipow(1.0 - k + j, q - 1);
    rhs(q - 1) = 1.0 / q;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(V);
  Eigen::VectorXd beta = lu.solve(rhs);
  // One round of iterative refinement; the Vandermonde-type system gets
  // ill-conditioned towards k = 15.
  beta += lu.solve(rhs - V * beta);

  MethodSpec m;
  m.k = k;
  m.p = k;
  m.beta = AdamsCoefficients(std::vector<double>(beta.data(), beta.data() + k));
  m.ell = measure_interval(m.beta).ell_oracle;
  m.error_const = error_constant(m.beta, k);
  m.epsilon = 0.0;
  return m;
}

}  // namespace stabadams
