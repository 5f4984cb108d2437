#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stabadams/errors.hpp"
#include "stabadams/integrate.hpp"
#include "stabadams/problems.hpp"
#include "stabadams/synth.hpp"

using namespace stabadams;

TEST_CASE("forward Euler on y' = -y matches the closed form") {
  auto problem = linear_scalar(-1.0, 1.0);
  auto method = first_order(1);
  auto run = run_fixed(problem, method, 0.1);
  CHECK(run.status == RunStatus::OK);
  CHECK(run.steps == 10);
  CHECK(run.f_evals == 10);
  CHECK(run.endpoint[0] == doctest::Approx(std::pow(0.9, 10)).epsilon(1e-14));
}

TEST_CASE("starting history comes from the reference solution") {
  auto problem = linear_scalar(-2.0, 1.0);
  auto method = first_order(4);
  auto hist = step_history_init(problem, method, 0.05);
  REQUIRE(hist.states.size() == 4);
  REQUIRE(hist.fvalues.size() == 4);
  for (int j = 0; j < 4; ++j) {
    double t = 0.05 * j;
    CHECK(hist.states[static_cast<size_t>(j)][0] ==
          doctest::Approx(std::exp(-2.0 * t)).epsilon(1e-14));
    CHECK(hist.fvalues[static_cast<size_t>(j)][0] ==
          doctest::Approx(-2.0 * std::exp(-2.0 * t)).epsilon(1e-13));
  }
}

TEST_CASE("linear recurrence matches a direct companion-matrix evolution") {
  // On y' = lambda y the scheme is a fixed linear recurrence in
  // (y_m, ..., y_{m+k-1}); run_fixed must reproduce iterating it directly.
  auto method = first_order(3);
  double lambda = -4.0, tau = 0.05;
  auto problem = linear_scalar(lambda, 1.0);
  auto run = run_fixed(problem, method, tau);

  double z = lambda * tau;
  std::vector<double> y(3);
  for (int j = 0; j < 3; ++j) y[static_cast<size_t>(j)] = std::exp(lambda * tau * j);
  int steps = static_cast<int>(std::lround(1.0 / tau)) - 2;
  for (int s = 0; s < steps; ++s) {
    double next = y[2];
    for (int j = 0; j < 3; ++j) next += z * method.beta.beta[static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
    y[0] = y[1];
    y[1] = y[2];
    y[2] = next;
  }
  CHECK(run.endpoint[0] == doctest::Approx(y[2]).epsilon(1e-13));
}

TEST_CASE("tau must divide the time span") {
  auto problem = linear_scalar(-1.0, 1.0);
  CHECK_THROWS(run_fixed(problem, first_order(2), 0.3));
}

TEST_CASE("divergence outside the stability interval is detected") {
  auto method = first_order(5);  // ell = 10
  double tau = 1.0;
  SUBCASE("inside: bounded") {
    auto problem = linear_scalar(-9.8, 20000.0);
    auto run = run_fixed(problem, method, tau);
    CHECK(run.status == RunStatus::OK);
    CHECK(run.max_norm <= 10.0);
  }
  SUBCASE("outside: diverges") {
    auto problem = linear_scalar(-11.0, 20000.0);
    auto run = run_fixed(problem, method, tau);
    CHECK(run.status == RunStatus::DIVERGED);
    CHECK(std::isfinite(run.endpoint[0]));
  }
}

TEST_CASE("observed order matches the design order") {
  std::vector<double> taus;
  for (int i = 3; i <= 8; ++i) taus.push_back(std::pow(2.0, -i));

  SUBCASE("first order") {
    auto report = converge_study(linear_scalar(-1.0), first_order(4), taus);
    REQUIRE(report.order_defined);
    CHECK(report.observed_order == doctest::Approx(1.0).epsilon(0.15));
  }
  SUBCASE("second order, classical") {
    auto report = converge_study(linear_scalar(-1.0), classical_adams(2), taus);
    REQUIRE(report.order_defined);
    CHECK(report.observed_order == doctest::Approx(2.0).epsilon(0.1));
  }
  SUBCASE("fourth order, stabilized") {
    OptimizeOptions opts;
    opts.attempts = 16;
    auto r = optimize(5, 4, opts);
    REQUIRE(r.converged);
    auto report = converge_study(linear_scalar(-1.0), r.method, taus);
    REQUIRE(report.order_defined);
    CHECK(report.observed_order == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("convergence report keeps diverged points") {
  auto method = first_order(2);  // ell = 4
  // lambda * tau = -6 at the coarsest step: unstable over 38 steps
  std::vector<double> taus = {0.5, 0.2, 0.1, 0.05};
  auto report = converge_study(linear_scalar(-12.0, 20.0), method, taus);
  REQUIRE(report.points.size() == 4);
  CHECK(report.points[0].status == RunStatus::DIVERGED);
  for (size_t i = 1; i < 4; ++i) CHECK(report.points[i].status == RunStatus::OK);
}
