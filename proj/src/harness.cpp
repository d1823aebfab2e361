#include "lsvi/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace lsvi {

namespace {

struct PreparedProblem {
  LagrangianSystem lagrangian;  // consumed by the variational methods
  ResidualSystem system;        // consumed by the baseline methods
  ExactSolution exact;
  Vector v0;
};

PreparedProblem prepare(ProblemKind kind, double gamma) {
  PreparedProblem out;
  switch (kind) {
    case ProblemKind::Linear: {
      FirstOrderProblem p = linear_decay();
      out.lagrangian = least_squares_adapter(p.system);
      out.system = std::move(p.system);
      out.exact = std::move(p.exact);
      out.v0 = std::move(p.v0);
      break;
    }
    case ProblemKind::QuadraticDrag: {
      FirstOrderProblem p = quadratic_drag();
      out.lagrangian = least_squares_adapter(p.system);
      out.system = std::move(p.system);
      out.exact = std::move(p.exact);
      out.v0 = std::move(p.v0);
      break;
    }
    case ProblemKind::Channel: {
      const ChannelParams params{gamma, ChannelParams{}.series_tol};
      out.lagrangian = channel_lagrangian(params);
      out.system = channel_averaged_system(params);
      out.exact = channel_exact(params);
      out.v0 = Vector::Zero(1);
      break;
    }
  }
  return out;
}

bool is_variational(MethodKind method) {
  return method == MethodKind::Method1 || method == MethodKind::Method2 ||
         method == MethodKind::AlphaBeta;
}

MomentumConstraint constraint_for(const RunSpec& spec) {
  switch (spec.method) {
    case MethodKind::Method1:
      return method_i();
    case MethodKind::Method2:
      return method_ii();
    case MethodKind::AlphaBeta:
      return {spec.alpha, spec.beta};
    default:
      throw std::logic_error("not a variational method");
  }
}

BaselineMethod baseline_for(MethodKind method) {
  switch (method) {
    case MethodKind::ExplicitEuler:
      return BaselineMethod::ExplicitEuler;
    case MethodKind::ImplicitEuler:
      return BaselineMethod::ImplicitEuler;
    case MethodKind::Rk4:
      return BaselineMethod::Rk4;
    default:
      throw std::logic_error("not a baseline method");
  }
}

void validate(const RunSpec& spec) {
  if (!(spec.h > 0.0) || !std::isfinite(spec.h)) {
    throw std::domain_error("h must be positive and finite");
  }
  if (!std::isfinite(spec.t_end) || spec.t_end < spec.h) {
    throw std::invalid_argument("t_end must be finite and >= h");
  }
  if (spec.method == MethodKind::AlphaBeta) {
    if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta) ||
        (spec.alpha == 0.0 && spec.beta == 0.0)) {
      throw std::invalid_argument("alpha/beta must be finite and not both zero");
    }
  }
}

double parse_csv_double(const std::string& field) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("bad numeric CSV field: '" + field + "'");
  }
  return value;
}

}  // namespace

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Linear:
      return "linear";
    case ProblemKind::QuadraticDrag:
      return "qdrag";
    case ProblemKind::Channel:
      return "channel";
  }
  throw std::logic_error("unknown problem kind");
}

std::string to_string(MethodKind kind) {
  switch (kind) {
    case MethodKind::Method1:
      return "method1";
    case MethodKind::Method2:
      return "method2";
    case MethodKind::AlphaBeta:
      return "alphabeta";
    case MethodKind::ExplicitEuler:
      return "explicit-euler";
    case MethodKind::ImplicitEuler:
      return "implicit-euler";
    case MethodKind::Rk4:
      return "rk4";
  }
  throw std::logic_error("unknown method kind");
}

ProblemKind problem_from_string(const std::string& name) {
  if (name == "linear") return ProblemKind::Linear;
  if (name == "qdrag") return ProblemKind::QuadraticDrag;
  if (name == "channel") return ProblemKind::Channel;
  throw std::invalid_argument("unknown problem: '" + name + "'");
}

MethodKind method_from_string(const std::string& name) {
  if (name == "method1") return MethodKind::Method1;
  if (name == "method2") return MethodKind::Method2;
  if (name == "alphabeta") return MethodKind::AlphaBeta;
  if (name == "explicit-euler") return MethodKind::ExplicitEuler;
  if (name == "implicit-euler") return MethodKind::ImplicitEuler;
  if (name == "rk4") return MethodKind::Rk4;
  throw std::invalid_argument("unknown method: '" + name + "'");
}

std::vector<ErrorSample> error_trace(const Trajectory& trajectory,
                                     const ExactSolution& exact) {
  if (trajectory.times.empty() || trajectory.states.size() != trajectory.times.size()) {
    throw std::invalid_argument("trajectory must have matching, nonempty samples");
  }
  if (trajectory.states.front().size() != 1) {
    throw std::invalid_argument("error_trace expects scalar states");
  }
  std::vector<ErrorSample> trace;
  trace.reserve(trajectory.times.size());
  for (size_t i = 0; i < trajectory.times.size(); ++i) {
    const double t = trajectory.times[i];
    trace.push_back({t, std::abs(trajectory.states[i][0] - exact.eval(t))});
  }
  return trace;
}

double max_abs_error(const std::vector<ErrorSample>& trace) {
  if (trace.empty()) throw std::invalid_argument("empty error trace");
  double worst = 0.0;
  for (const ErrorSample& sample : trace) worst = std::max(worst, sample.error);
  return worst;
}

int steps_for(double t_end, double h) {
  const double quotient = t_end / h + 1e-9;
  if (quotient >= 2.0e9) throw std::invalid_argument("too many steps");
  return std::max(1, static_cast<int>(std::floor(quotient)));
}

RunResult execute(const RunSpec& spec) {
  validate(spec);
  PreparedProblem problem = prepare(spec.problem, spec.gamma);
  const int steps = steps_for(spec.t_end, spec.h);

  RunResult result;
  if (is_variational(spec.method)) {
    result.trajectory = integrate(problem.lagrangian, constraint_for(spec), 0.0, spec.h,
                                  steps, problem.v0, spec.newton);
  } else {
    result.trajectory = integrate_baseline(problem.system, baseline_for(spec.method),
                                           0.0, spec.h, steps, problem.v0, spec.newton);
  }

  const size_t samples = result.trajectory.times.size();
  result.exact_values.reserve(samples);
  result.abs_errors.reserve(samples);
  for (size_t i = 0; i < samples; ++i) {
    const double reference = problem.exact.eval(result.trajectory.times[i]);
    result.exact_values.push_back(reference);
    result.abs_errors.push_back(std::abs(result.trajectory.states[i][0] - reference));
  }
  result.max_abs_error = *std::max_element(result.abs_errors.begin(),
                                           result.abs_errors.end());
  result.final_abs_error = result.abs_errors.back();
  return result;
}

SweepOutcome sweep(const SweepSpec& spec) {
  if (spec.methods.empty()) throw std::invalid_argument("sweep needs at least one method");
  if (spec.step_sizes.empty()) throw std::invalid_argument("sweep needs at least one h");

  std::vector<double> ordered = spec.step_sizes;
  std::sort(ordered.begin(), ordered.end(), std::greater<double>());

  SweepOutcome outcome;
  outcome.records.reserve(spec.methods.size() * ordered.size());
  for (MethodKind method : spec.methods) {
    for (double h : ordered) {
      RunSpec cell;
      cell.problem = spec.problem;
      cell.method = method;
      cell.alpha = spec.alpha;
      cell.beta = spec.beta;
      cell.h = h;
      cell.t_end = spec.t_end;
      cell.gamma = spec.gamma;
      cell.newton = spec.newton;

      SweepRecord record;
      record.method = to_string(method);
      record.h = h;
      record.steps = steps_for(spec.t_end, h);
      try {
        RunResult run = execute(cell);
        record.max_abs_error = run.max_abs_error;
        record.final_abs_error = run.final_abs_error;
      } catch (const SolverError&) {
        record.max_abs_error = std::numeric_limits<double>::quiet_NaN();
        record.final_abs_error = std::numeric_limits<double>::quiet_NaN();
        ++outcome.failed_cells;
      }
      outcome.records.push_back(std::move(record));
    }
  }
  return outcome;
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return std::string(buffer, ptr);
}

void write_trajectory_csv(std::ostream& out, const RunResult& result) {
  out << "t,v,exact,abs_error\n";
  for (size_t i = 0; i < result.trajectory.times.size(); ++i) {
    out << format_double(result.trajectory.times[i]) << ','
        << format_double(result.trajectory.states[i][0]) << ','
        << format_double(result.exact_values[i]) << ','
        << format_double(result.abs_errors[i]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "method,h,max_abs_error,final_abs_error,steps\n";
  for (const SweepRecord& record : records) {
    out << record.method << ',' << format_double(record.h) << ','
        << format_double(record.max_abs_error) << ','
        << format_double(record.final_abs_error) << ',' << record.steps << '\n';
  }
}

std::vector<TrajectoryRow> parse_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,v,exact,abs_error") {
    throw std::invalid_argument("missing trajectory CSV header");
  }
  std::vector<TrajectoryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    double values[4];
    for (double& value : values) {
      if (!std::getline(fields, field, ',')) {
        throw std::invalid_argument("short trajectory CSV row: '" + line + "'");
      }
      value = parse_csv_double(field);
    }
    if (std::getline(fields, field, ',')) {
      throw std::invalid_argument("long trajectory CSV row: '" + line + "'");
    }
    rows.push_back({values[0], values[1], values[2], values[3]});
  }
  return rows;
}

}  // namespace lsvi
