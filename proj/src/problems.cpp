#include "stabadams/problems.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

#include "stabadams/hires_data.hpp"

namespace stabadams {

State rk4_integrate(const Rhs& rhs, double t0, const State& y0, double t1, double h_max) {
  const double span = t1 - t0;
  if (span <= 0.0) return y0;
  const long n = std::max(1L, static_cast<long>(std::ceil(span / h_max)));
  const double h = span / static_cast<double>(n);
  const size_t dim = y0.size();

  State y = y0, k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  double t = t0;
  for (long i = 0; i < n; ++i) {
    rhs(t, y, k1);
    for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    rhs(t + 0.5 * h, tmp, k2);
    for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    rhs(t + 0.5 * h, tmp, k3);
    for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + h * k3[j];
    rhs(t + h, tmp, k4);
    for (size_t j = 0; j < dim; ++j)
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    t = t0 + (i + 1) * h;
  }
  return y;
}

namespace {

// Reference provider backed by fixed-step RK4 with a per-problem base step,
// memoized by query time.
Reference make_rk4_reference(Rhs rhs, double t0, State y0, double h_base) {
  auto cache = std::make_shared<std::map<double, State>>();
  return [rhs = std::move(rhs), t0, y0 = std::move(y0), h_base, cache](double t) -> State {
    if (t <= t0) return y0;
    auto it = cache->find(t);
    if (it != cache->end()) return it->second;
    State y = rk4_integrate(rhs, t0, y0, t, h_base);
    (*cache)[t] = y;
    return y;
  };
}

}  // namespace

OdeProblem linear_scalar(double lambda, double t_end) {
  OdeProblem p;
  p.name = "linear";
  p.dim = 1;
  p.t0 = 0.0;
  p.t_end = t_end;
  p.y0 = {1.0};
  p.rhs = [lambda](double, const State& y, State& dy) { dy[0] = lambda * y[0]; };
  p.reference = [lambda](double t) -> State { return {std::exp(lambda * t)}; };
  p.reference_accuracy = 2.3e-16;
  return p;
}

OdeProblem hires() {
  namespace hd = hires_data;
  OdeProblem p;
  p.name = "hires";
  p.dim = 8;
  p.t0 = 0.0;
  p.t_end = 40.0;
  p.y0.assign(hd::initial.begin(), hd::initial.end());
  p.rhs = [](double, const State& y, State& dy) {
    namespace hd = hires_data;
    dy[0] = -hd::k1 * y[0] + hd::k2 * y[1] + hd::k3 * y[2] + hd::k8;
    dy[1] = hd::k1 * y[0] - hd::k6 * y[1];
    dy[2] = -hd::k7 * y[2] + hd::k2 * y[3] + hd::k5 * y[4];
    dy[3] = hd::k3 * y[1] + hd::k1 * y[2] - hd::k9 * y[3];
    dy[4] = -hd::k10 * y[4] + hd::k2 * y[5] + hd::k2 * y[6];
    dy[5] = -hd::k11 * y[5] * y[7] + hd::k4 * y[3] + hd::k1 * y[4] - hd::k2 * y[5] + hd::k4 * y[6];
    dy[6] = hd::k11 * y[5] * y[7] - hd::k12 * y[6];
    dy[7] = -hd::k11 * y[5] * y[7] + hd::k12 * y[6];
  };
  p.reference = make_rk4_reference(p.rhs, p.t0, p.y0, 1e-4);
  p.reference_accuracy = 1e-10;
  return p;
}

OdeProblem burgers_mol(double mu, int n_interior) {
  if (mu <= 0.0) throw std::invalid_argument("burgers_mol: mu must be positive");
  if (n_interior < 1) throw std::invalid_argument("burgers_mol: n_interior must be positive");
  OdeProblem p;
  p.name = "burgers";
  p.dim = n_interior;
  p.t0 = 0.0;
  p.t_end = 2.5;
  const double dx = 1.0 / (n_interior + 1);
  p.y0.resize(static_cast<size_t>(n_interior));
  for (int i = 1; i <= n_interior; ++i) {
    double x = i * dx;
    p.y0[static_cast<size_t>(i - 1)] = 1.5 * x * (1.0 - x) * (1.0 - x);
  }
  p.rhs = [mu, n_interior, dx](double, const State& u, State& du) {
    const double inv4dx = 1.0 / (4.0 * dx);
    const double invdx2 = mu / (dx * dx);
    for (int i = 0; i < n_interior; ++i) {
      double um = (i > 0) ? u[static_cast<size_t>(i - 1)] : 0.0;  // Dirichlet ghost values
      double up = (i < n_interior - 1) ? u[static_cast<size_t>(i + 1)] : 0.0;
      double ui = u[static_cast<size_t>(i)];
      du[static_cast<size_t>(i)] = -(up * up - um * um) * inv4dx + (up - 2.0 * ui + um) * invdx2;
    }
  };
  p.reference = make_rk4_reference(p.rhs, p.t0, p.y0, 1e-4);
  p.reference_accuracy = 1e-10;
  return p;
}

}  // namespace stabadams
