#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stabadams/errors.hpp"
#include "stabadams/integrate.hpp"
#include "stabadams/io.hpp"
#include "stabadams/problems.hpp"
#include "stabadams/stability.hpp"
#include "stabadams/synth.hpp"

namespace {

using namespace stabadams;

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitPartial = 3;
constexpr int kExitAllDiverged = 4;
constexpr int kExitUsage = 64;

OdeProblem make_problem(const std::string& name, double lambda, double mu, int n) {
  if (name == "linear") return linear_scalar(lambda);
  if (name == "hires") return hires();
  if (name == "burgers") return burgers_mol(mu, n);
  throw CLI::ValidationError("--problem", "unknown problem '" + name + "'");
}

void print_method(const MethodSpec& m) {
  std::cout << "k=" << m.k << " p=" << m.p << " ell=" << format_number(m.ell)
            << " error_const=" << format_number(m.error_const);
  if (m.epsilon > 0.0) std::cout << " epsilon=" << format_number(m.epsilon);
  std::cout << "\n";
}

int cmd_synth(int k, int p, double epsilon, std::uint64_t seed, int attempts,
              const std::string& out_path) {
  MethodSpec method;
  if (p == 1) {
    method = first_order(k);
    if (epsilon > 0.0) method = apply_damping(method.beta, epsilon);
  } else {
    OptimizeOptions opt;
    opt.seed = seed;
    opt.attempts = attempts;
    if (p == k) {
      method = classical_adams(k);
    } else {
      OptimizeResult res = optimize(k, p, opt);
      if (!res.converged) {
        std::cerr << "synth (" << k << "," << p << "): " << res.message << "\n";
        return kExitNotConverged;
      }
      method = res.method;
    }
  }
  if (!out_path.empty()) write_method_file(method, out_path);
  print_method(method);
  return kExitOk;
}

int cmd_tables(const std::string& which, const std::string& out_path, int kmax,
               std::uint64_t seed, int attempts) {
  std::ostringstream out;
  bool partial = false;
  OptimizeOptions opt;
  opt.seed = seed;
  opt.attempts = attempts;

  auto is_reported_nonconvergent = [](int k, int p) {
    return (k == 7 && p == 6) || (p >= 7 && p < k);
  };

  auto synthesize = [&](int k, int p) -> std::optional<MethodSpec> {
    if (p == 1) return first_order(k);
    if (p == k) return classical_adams(k);
    OptimizeResult res = optimize(k, p, opt);
    if (!res.converged) return std::nullopt;
    return res.method;
  };

  if (which == "delta") {
    out << "k,delta_j...\n";
    for (int k = 2; k <= kmax; ++k) {
      out << k;
      for (double w : damping_weights(first_order(k).beta)) out << "," << format_number(w);
      out << "\n";
    }
  } else if (which == "errconst") {
    out << "k,p,C\n";
    for (int k = 2; k <= kmax; ++k) {
      for (int p = 1; p < k && p <= 6; ++p) {
        if (is_reported_nonconvergent(k, p)) continue;
        auto m = synthesize(k, p);
        if (!m) {
          partial = true;
          out << k << "," << p << ",NOT_CONVERGED\n";
          continue;
        }
        out << k << "," << p << "," << format_number(m->error_const) << "\n";
      }
    }
  } else if (which == "coeffs") {
    out << "k,p,ell,beta_j...\n";
    for (int k = 3; k <= kmax; ++k) {
      for (int p = 2; p <= k && p <= 9; ++p) {
        auto m = synthesize(k, p);
        if (!m) {
          if (!is_reported_nonconvergent(k, p)) partial = true;
          out << k << "," << p << ",NOT_CONVERGED\n";
          continue;
        }
        out << k << "," << p << "," << format_number(m->ell);
        for (double b : m->beta.beta) out << "," << format_number(b);
        out << "\n";
      }
    }
  } else {
    std::cerr << "tables: --which must be delta, errconst or coeffs\n";
    return kExitUsage;
  }

  if (out_path.empty())
    std::cout << out.str();
  else
    write_text_file(out.str(), out_path);
  return partial ? kExitPartial : kExitOk;
}

std::vector<double> parse_taus(const std::string& spec) {
  std::vector<double> taus;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) taus.push_back(std::stod(item));
  }
  return taus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis and analysis of explicit Adams-type methods with "
               "extended stability intervals"};
  app.require_subcommand(1);

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a (k, p) method");
  int k = 1, p = 1, attempts = 64, n_points = 512, n_interior = 500;
  double epsilon = 0.0, tau = 0.0, lambda = -1.0, mu = 0.005;
  std::uint64_t seed = 0;
  std::string out_path, method_path, csv_path, svg_path, problem_name = "linear", which,
              taus_spec;
  int verify_p = 0;
  synth_cmd->add_option("--k", k, "step count")->required()->check(CLI::Range(1, 15));
  synth_cmd->add_option("--p", p, "order")->required()->check(CLI::Range(1, 15));
  synth_cmd->add_option("--epsilon", epsilon, "damping parameter (p = 1 only)")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--seed", seed, "optimizer seed");
  synth_cmd->add_option("--attempts", attempts, "multi-start attempts");
  synth_cmd->add_option("--out", out_path, "method JSON output path");

  // damp
  auto* damp_cmd = app.add_subcommand("damp", "Apply damping to a method");
  damp_cmd->add_option("--method", method_path, "method JSON input");
  damp_cmd->add_option("--k", k, "first-order family step count (alternative to --method)");
  damp_cmd->add_option("--epsilon", epsilon, "damping parameter")->required();
  damp_cmd->add_option("--out", out_path, "method JSON output path");

  // stability
  auto* stab_cmd = app.add_subcommand("stability", "Trace the root locus curve");
  stab_cmd->add_option("--method", method_path, "method JSON input")->required();
  stab_cmd->add_option("--n", n_points, "number of samples");
  stab_cmd->add_option("--csv", csv_path, "locus CSV output path");
  stab_cmd->add_option("--svg", svg_path, "locus SVG output path");

  // interval
  auto* interval_cmd = app.add_subcommand("interval", "Measure the stability interval");
  interval_cmd->add_option("--method", method_path, "method JSON input")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Order residuals and error constant");
  verify_cmd->add_option("--method", method_path, "method JSON input")->required();
  verify_cmd->add_option("--p", verify_p, "order to verify (default: method order)");

  // integrate
  auto* integ_cmd = app.add_subcommand("integrate", "Single fixed-step integration");
  integ_cmd->add_option("--problem", problem_name, "linear | hires | burgers")->required();
  integ_cmd->add_option("--method", method_path, "method JSON input")->required();
  integ_cmd->add_option("--tau", tau, "step size")->required()->check(CLI::PositiveNumber);
  integ_cmd->add_option("--lambda", lambda, "linear problem coefficient");
  integ_cmd->add_option("--mu", mu, "Burgers viscosity");
  integ_cmd->add_option("--n", n_interior, "Burgers interior nodes");

  // converge
  auto* conv_cmd = app.add_subcommand("converge", "Fixed-step convergence study");
  conv_cmd->add_option("--problem", problem_name, "linear | hires | burgers")->required();
  conv_cmd->add_option("--method", method_path, "method JSON input")->required();
  conv_cmd->add_option("--taus", taus_spec, "comma-separated decreasing step sizes")->required();
  conv_cmd->add_option("--lambda", lambda, "linear problem coefficient");
  conv_cmd->add_option("--mu", mu, "Burgers viscosity");
  conv_cmd->add_option("--n", n_interior, "Burgers interior nodes");
  conv_cmd->add_option("--out", csv_path, "convergence CSV output path");
  conv_cmd->add_option("--svg", svg_path, "log-log SVG output path");

  // tables
  auto* tables_cmd = app.add_subcommand("tables", "Regenerate a published table as CSV");
  tables_cmd->add_option("--which", which, "delta | errconst | coeffs")->required();
  tables_cmd->add_option("--out", out_path, "CSV output path");
  int kmax = 10;
  tables_cmd->add_option("--kmax", kmax, "largest step count")->check(CLI::Range(2, 15));
  tables_cmd->add_option("--seed", seed, "optimizer seed");
  tables_cmd->add_option("--attempts", attempts, "multi-start attempts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (synth_cmd->parsed()) {
      if (p > k) {
        std::cerr << "synth: order p must not exceed k\n";
        return kExitUsage;
      }
      if (epsilon > 0.0 && p >= 2) {
        std::cerr << "synth: damping is only defined for first-order methods\n";
        return kExitUsage;
      }
      return cmd_synth(k, p, epsilon, seed, attempts, out_path);
    }

    if (damp_cmd->parsed()) {
      AdamsCoefficients beta;
      if (!method_path.empty())
        beta = read_method_file(method_path).beta;
      else
        beta = first_order(k).beta;
      MethodSpec damped = apply_damping(beta, epsilon);
      if (!out_path.empty()) write_method_file(damped, out_path);
      print_method(damped);
      return kExitOk;
    }

    if (stab_cmd->parsed()) {
      MethodSpec m = read_method_file(method_path);
      LocusCurve curve = trace_locus(m.beta, n_points);
      if (!csv_path.empty()) write_text_file(locus_to_csv(curve), csv_path);
      if (!svg_path.empty()) write_text_file(locus_to_svg(curve), svg_path);
      if (csv_path.empty() && svg_path.empty()) std::cout << locus_to_csv(curve);
      return kExitOk;
    }

    if (interval_cmd->parsed()) {
      MethodSpec m = read_method_file(method_path);
      IntervalResult res = measure_interval(m.beta);
      std::cout << "ell_formula=" << format_number(res.ell_formula)
                << " ell_oracle=" << format_number(res.ell_oracle)
                << " agree=" << (res.agree ? "yes" : "no") << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      MethodSpec m = read_method_file(method_path);
      int order = verify_p > 0 ? verify_p : m.p;
      std::cout << "order residuals:";
      for (double r : order_residuals(m.beta, order)) std::cout << " " << format_number(r);
      std::cout << "\nerror_const=" << format_number(error_constant(m.beta, order)) << "\n";
      return kExitOk;
    }

    if (integ_cmd->parsed()) {
      OdeProblem prob = make_problem(problem_name, lambda, mu, n_interior);
      MethodSpec m = read_method_file(method_path);
      IntegrationRun run = run_fixed(prob, m, tau);
      std::cout << "steps=" << run.steps << " f_evals=" << run.f_evals
                << " status=" << (run.status == RunStatus::OK ? "OK" : "DIVERGED");
      if (run.status == RunStatus::OK && prob.reference) {
        State ref = prob.reference(prob.t_end);
        double err = 0.0;
        for (size_t i = 0; i < ref.size(); ++i)
          err = std::max(err, std::abs(run.endpoint[i] - ref[i]));
        std::cout << " endpoint_error=" << format_number(err);
      }
      std::cout << "\n";
      return run.status == RunStatus::OK ? kExitOk : kExitAllDiverged;
    }

    if (conv_cmd->parsed()) {
      OdeProblem prob = make_problem(problem_name, lambda, mu, n_interior);
      MethodSpec m = read_method_file(method_path);
      std::vector<double> taus = parse_taus(taus_spec);
      if (taus.empty()) {
        std::cerr << "converge: empty --taus list\n";
        return kExitUsage;
      }
      ConvergenceReport report = converge_study(prob, m, taus);
      if (!csv_path.empty()) write_text_file(convergence_to_csv(report), csv_path);
      if (!svg_path.empty()) write_text_file(convergence_to_svg(report), svg_path);
      if (csv_path.empty()) std::cout << convergence_to_csv(report);
      if (report.order_defined)
        std::cout << "observed_order=" << format_number(report.observed_order) << "\n";
      bool all_diverged = true;
      for (const ConvergencePoint& pt : report.points)
        if (pt.status == RunStatus::OK) all_diverged = false;
      return all_diverged ? kExitAllDiverged : kExitOk;
    }

    if (tables_cmd->parsed()) return cmd_tables(which, out_path, kmax, seed, attempts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
