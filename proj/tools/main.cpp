#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsvi/harness.hpp"

namespace {

constexpr int kExitSolverFailure = 2;
constexpr int kExitUsage = 64;

struct CommonOptions {
  std::string problem;
  double alpha = 0.0;
  double beta = 1.0;
  bool alpha_set = false;
  bool beta_set = false;
  double t_end = 0.0;
  double gamma = 2.0;
  double newton_tol = 1e-12;
  int newton_max_iter = 50;
  std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--problem", opts.problem, "Test problem")
      ->required()
      ->check(CLI::IsMember({"linear", "qdrag", "channel"}));
  cmd->add_option("--alpha", opts.alpha,
                  "Constraint weight on the start-of-step momentum (alphabeta only)")
      ->trigger_on_parse()
      ->each([&opts](const std::string&) { opts.alpha_set = true; });
  cmd->add_option("--beta", opts.beta,
                  "Constraint weight on the end-of-step momentum (alphabeta only)")
      ->trigger_on_parse()
      ->each([&opts](const std::string&) { opts.beta_set = true; });
  cmd->add_option("--t-end", opts.t_end, "Final time")->required();
  cmd->add_option("--gamma", opts.gamma,
                  "Channel pressure gradient (channel problem only)")
      ->capture_default_str();
  cmd->add_option("--newton-tol", opts.newton_tol,
                  "Newton tolerance on the constraint residual, applied to the "
                  "alpha/beta combination exactly as supplied")
      ->capture_default_str();
  cmd->add_option("--newton-max-iter", opts.newton_max_iter, "Newton iteration cap")
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Output CSV path (default: stdout)");
}

int validate_methods(const std::vector<std::string>& methods,
                     const CommonOptions& opts) {
  const bool uses_alphabeta =
      std::find(methods.begin(), methods.end(), "alphabeta") != methods.end();
  if (uses_alphabeta && !(opts.alpha_set && opts.beta_set)) {
    std::cerr << "error: --alpha and --beta are required with method alphabeta\n";
    return kExitUsage;
  }
  if (!uses_alphabeta && (opts.alpha_set || opts.beta_set)) {
    std::cerr << "error: --alpha/--beta are only valid with method alphabeta\n";
    return kExitUsage;
  }
  if (uses_alphabeta && opts.alpha == 0.0 && opts.beta == 0.0) {
    std::cerr << "error: alpha and beta must not both be zero\n";
    return kExitUsage;
  }
  return 0;
}

int validate_steps(const std::vector<double>& step_sizes, const CommonOptions& opts) {
  for (double h : step_sizes) {
    if (!(h > 0.0)) {
      std::cerr << "error: h must be positive\n";
      return kExitUsage;
    }
    if (opts.t_end < h) {
      std::cerr << "error: t-end must be >= h\n";
      return kExitUsage;
    }
  }
  return 0;
}

template <typename WriteFn>
int emit(const CommonOptions& opts, WriteFn&& write) {
  if (opts.out_path.empty()) {
    write(std::cout);
    return 0;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
    return 1;
  }
  write(file);
  return file.good() ? 0 : 1;
}

lsvi::NewtonConfig newton_config(const CommonOptions& opts) {
  lsvi::NewtonConfig cfg;
  cfg.tol = opts.newton_tol;
  cfg.max_iter = opts.newton_max_iter;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark driver for momentum-constrained variational integrators"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::string run_method;
  double run_h = 0.0;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Integrate one case and emit the trajectory as CSV");
  add_common_flags(run_cmd, run_opts);
  run_cmd->add_option("--method", run_method, "Integration method")
      ->required()
      ->check(CLI::IsMember({"method1", "method2", "alphabeta", "explicit-euler",
                             "implicit-euler", "rk4"}));
  run_cmd->add_option("--h", run_h, "Step size")->required();

  CommonOptions sweep_opts;
  std::vector<std::string> sweep_methods;
  std::vector<double> sweep_h_list;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Tabulate max/final errors over methods and step sizes as CSV");
  add_common_flags(sweep_cmd, sweep_opts);
  sweep_cmd
      ->add_option("--method", sweep_methods,
                   "Integration method (repeat the flag for several)")
      ->required()
      ->check(CLI::IsMember({"method1", "method2", "alphabeta", "explicit-euler",
                             "implicit-euler", "rk4"}));
  sweep_cmd->add_option("--h-list", sweep_h_list, "Comma-separated step sizes")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      if (int rc = validate_methods({run_method}, run_opts)) return rc;
      if (int rc = validate_steps({run_h}, run_opts)) return rc;

      lsvi::RunSpec spec;
      spec.problem = lsvi::problem_from_string(run_opts.problem);
      spec.method = lsvi::method_from_string(run_method);
      spec.alpha = run_opts.alpha;
      spec.beta = run_opts.beta;
      spec.h = run_h;
      spec.t_end = run_opts.t_end;
      spec.gamma = run_opts.gamma;
      spec.newton = newton_config(run_opts);

      const lsvi::RunResult result = lsvi::execute(spec);
      return emit(run_opts,
                  [&](std::ostream& out) { lsvi::write_trajectory_csv(out, result); });
    }

    if (int rc = validate_methods(sweep_methods, sweep_opts)) return rc;
    if (int rc = validate_steps(sweep_h_list, sweep_opts)) return rc;

    lsvi::SweepSpec spec;
    spec.problem = lsvi::problem_from_string(sweep_opts.problem);
    for (const std::string& name : sweep_methods) {
      spec.methods.push_back(lsvi::method_from_string(name));
    }
    spec.alpha = sweep_opts.alpha;
    spec.beta = sweep_opts.beta;
    spec.step_sizes = sweep_h_list;
    spec.t_end = sweep_opts.t_end;
    spec.gamma = sweep_opts.gamma;
    spec.newton = newton_config(sweep_opts);

    const lsvi::SweepOutcome outcome = lsvi::sweep(spec);
    if (outcome.failed_cells > 0) {
      std::cerr << "warning: " << outcome.failed_cells << " of "
                << outcome.records.size() << " cells failed to converge\n";
    }
    return emit(sweep_opts,
                [&](std::ostream& out) { lsvi::write_sweep_csv(out, outcome.records); });
  } catch (const lsvi::SolverError& e) {
    const std::string msg = e.what();
    std::cerr << "error: solver failure";
    // Errors surfaced through the integrators already lead with "step N: ".
    if (e.step_index() >= 0 && !msg.starts_with("step ")) {
      std::cerr << " at step " << e.step_index();
    }
    std::cerr << ": " << msg << '\n';
    return kExitSolverFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
