#include "lsvi/schemes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lsvi {

namespace {

double step_size(double t_start, double t_end) {
  const double h = t_end - t_start;
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::domain_error("step must be positive and finite");
  }
  return h;
}

void check_dims(const LagrangianSystem& sys, const Vector& a, const Vector& b) {
  if (a.size() != sys.dim || b.size() != sys.dim) {
    throw std::invalid_argument("state size does not match system dim");
  }
}

void check_constraint(const MomentumConstraint& c) {
  if (!std::isfinite(c.alpha) || !std::isfinite(c.beta)) {
    throw std::invalid_argument("constraint weights must be finite");
  }
  if (c.alpha == 0.0 && c.beta == 0.0) {
    throw std::invalid_argument("constraint weights must not both be zero");
  }
}

}  // namespace

Matrix Trajectory::states_matrix() const {
  const auto rows = static_cast<Eigen::Index>(states.size());
  const Eigen::Index cols = rows > 0 ? states.front().size() : 0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) m.row(i) = states[static_cast<size_t>(i)];
  return m;
}

double discrete_lagrangian(const LagrangianSystem& sys, double t_start, double t_end,
                           const Vector& v_start, const Vector& v_end) {
  const double h = step_size(t_start, t_end);
  check_dims(sys, v_start, v_end);
  const Vector rate = (v_end - v_start) / h;
  return 0.5 * h *
         (sys.lagrangian(t_start, v_start, rate) + sys.lagrangian(t_end, v_end, rate));
}

MomentumPair discrete_momenta(const LagrangianSystem& sys, double t_start, double t_end,
                              const Vector& v_start, const Vector& v_end) {
  const double h = step_size(t_start, t_end);
  check_dims(sys, v_start, v_end);
  const Vector rate = (v_end - v_start) / h;
  const Vector mean_grad_rate = 0.5 * (sys.grad_vdot(t_start, v_start, rate) +
                                       sys.grad_vdot(t_end, v_end, rate));
  MomentumPair out;
  out.p_start = mean_grad_rate - 0.5 * h * sys.grad_v(t_start, v_start, rate);
  out.p_end = mean_grad_rate + 0.5 * h * sys.grad_v(t_end, v_end, rate);
  return out;
}

StepResult variational_step(const LagrangianSystem& sys,
                            const MomentumConstraint& constraint, double t, double h,
                            const Vector& v, const NewtonConfig& cfg) {
  check_constraint(constraint);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::domain_error("step must be positive and finite");
  }
  if (v.size() != sys.dim) {
    throw std::invalid_argument("state size does not match system dim");
  }

  const auto constraint_residual = [&](const Vector& v_next) {
    MomentumPair p = discrete_momenta(sys, t, t + h, v, v_next);
    return Vector(constraint.alpha * p.p_start + constraint.beta * p.p_end);
  };
  const Vector seed = sys.rhs ? Vector(v + h * sys.rhs(t, v)) : v;
  NewtonResult solved = newton_solve(constraint_residual, seed, cfg);
  return {std::move(solved.x), {solved.iterations, solved.residual_norm}};
}

double amplification_factor(const MomentumConstraint& constraint, double h) {
  check_constraint(constraint);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::domain_error("step must be positive and finite");
  }
  const double a = constraint.alpha;
  const double b = constraint.beta;
  const double numerator = a + b - a * h + 0.5 * a * h * h;
  const double denominator = a + b + b * h + 0.5 * b * h * h;
  if (denominator == 0.0) {
    throw SingularityError("zero denominator in amplification factor");
  }
  return numerator / denominator;
}

Trajectory integrate(const LagrangianSystem& sys, const MomentumConstraint& constraint,
                     double t0, double h, int steps, const Vector& v0,
                     const NewtonConfig& cfg) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (v0.size() != sys.dim) {
    throw std::invalid_argument("state size does not match system dim");
  }

  Trajectory traj;
  traj.times.reserve(static_cast<size_t>(steps) + 1);
  traj.states.reserve(static_cast<size_t>(steps) + 1);
  traj.diagnostics.reserve(static_cast<size_t>(steps));
  traj.times.push_back(t0);
  traj.states.push_back(v0);

  Vector v = v0;
  for (int n = 0; n < steps; ++n) {
    const double t = t0 + n * h;
    try {
      StepResult result = variational_step(sys, constraint, t, h, v, cfg);
      v = std::move(result.state);
      traj.diagnostics.push_back(result.diagnostics);
    } catch (const NonconvergenceError& e) {
      throw NonconvergenceError("step " + std::to_string(n) + ": " + e.what(),
                                e.last_iterate(), e.residual_norm(), e.iterations(), n);
    } catch (const SingularityError& e) {
      throw SingularityError("step " + std::to_string(n) + ": " + e.what(), n);
    }
    traj.times.push_back(t0 + (n + 1) * h);
    traj.states.push_back(v);
  }
  return traj;
}

}  // namespace lsvi
