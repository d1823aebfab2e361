#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lsvi/baselines.hpp"
#include "lsvi/newton.hpp"
#include "lsvi/problems.hpp"
#include "lsvi/schemes.hpp"

namespace lsvi {

enum class ProblemKind { Linear, QuadraticDrag, Channel };
enum class MethodKind { Method1, Method2, AlphaBeta, ExplicitEuler, ImplicitEuler, Rk4 };

[[nodiscard]] std::string to_string(ProblemKind kind);
[[nodiscard]] std::string to_string(MethodKind kind);
[[nodiscard]] ProblemKind problem_from_string(const std::string& name);
[[nodiscard]] MethodKind method_from_string(const std::string& name);

/// One benchmark case. `alpha`/`beta` apply only to MethodKind::AlphaBeta and
/// `gamma` only to the channel problem. The Newton tolerance is applied to the
/// constraint residual exactly as configured; α and β are not normalized.
struct RunSpec {
  ProblemKind problem = ProblemKind::Linear;
  MethodKind method = MethodKind::Method1;
  double alpha = 0.0;
  double beta = 1.0;
  double h = 0.0;
  double t_end = 0.0;
  double gamma = 2.0;
  NewtonConfig newton;
};

struct ErrorSample {
  double t = 0.0;
  double error = 0.0;
};

/// Pointwise |v_n − exact(t_n)| over all trajectory samples, t = t0 included.
[[nodiscard]] std::vector<ErrorSample> error_trace(const Trajectory& trajectory,
                                                   const ExactSolution& exact);
[[nodiscard]] double max_abs_error(const std::vector<ErrorSample>& trace);

struct RunResult {
  Trajectory trajectory;
  std::vector<double> exact_values;
  std::vector<double> abs_errors;
  double max_abs_error = 0.0;
  double final_abs_error = 0.0;
};

/// Number of h-sized steps covering [0, t_end]: floor(t_end/h) with a small
/// tolerance so that near-integer quotients are not truncated.
[[nodiscard]] int steps_for(double t_end, double h);

/// Integrates one case and evaluates it against the bundled exact solution.
[[nodiscard]] RunResult execute(const RunSpec& spec);

struct SweepRecord {
  std::string method;
  double h = 0.0;
  double max_abs_error = 0.0;
  double final_abs_error = 0.0;
  long steps = 0;
};

struct SweepSpec {
  ProblemKind problem = ProblemKind::Linear;
  std::vector<MethodKind> methods;
  double alpha = 0.0;
  double beta = 1.0;
  std::vector<double> step_sizes;
  double t_end = 0.0;
  double gamma = 2.0;
  NewtonConfig newton;
};

struct SweepOutcome {
  std::vector<SweepRecord> records;
  int failed_cells = 0;
};

/// Runs every method × step-size cell. Rows are ordered by method (as given)
/// and then by h descending. Cells are independent of each other; a cell whose
/// solver fails yields NaN error fields and increments failed_cells.
[[nodiscard]] SweepOutcome sweep(const SweepSpec& spec);

/// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_double(double value);

/// Header "t,v,exact,abs_error", one row per sample, LF line endings.
void write_trajectory_csv(std::ostream& out, const RunResult& result);

/// Header "method,h,max_abs_error,final_abs_error,steps", LF line endings.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

struct TrajectoryRow {
  double t = 0.0;
  double v = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
};

/// Parses CSV produced by write_trajectory_csv; values round-trip bit-exactly.
[[nodiscard]] std::vector<TrajectoryRow> parse_trajectory_csv(std::istream& in);

}  // namespace lsvi
