#include "lsvi/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lsvi {

namespace {

void check_step_and_state(const ResidualSystem& sys, double h, const Vector& v) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::domain_error("step must be positive and finite");
  }
  if (v.size() != sys.dim) {
    throw std::invalid_argument("state size does not match system dim");
  }
}

NewtonResult solve_implicit_euler(const ResidualSystem& sys, double t, double h,
                                  const Vector& v, const NewtonConfig& cfg) {
  const auto defect = [&](const Vector& x) {
    return Vector(x - v - h * sys.f(t + h, x));
  };
  MatrixFn jac;
  if (sys.jacobian) {
    jac = [&sys, t, h](const Vector& x) {
      return Matrix(Matrix::Identity(x.size(), x.size()) - h * sys.jacobian(t + h, x));
    };
  }
  Vector seed = v + h * sys.f(t, v);
  return newton_solve(defect, std::move(seed), cfg, jac);
}

}  // namespace

Vector explicit_euler_step(const ResidualSystem& sys, double t, double h,
                           const Vector& v) {
  check_step_and_state(sys, h, v);
  return v + h * sys.f(t, v);
}

Vector implicit_euler_step(const ResidualSystem& sys, double t, double h,
                           const Vector& v, const NewtonConfig& cfg) {
  check_step_and_state(sys, h, v);
  return solve_implicit_euler(sys, t, h, v, cfg).x;
}

Vector rk4_step(const ResidualSystem& sys, double t, double h, const Vector& v) {
  check_step_and_state(sys, h, v);
  const Vector k1 = sys.f(t, v);
  const Vector k2 = sys.f(t + 0.5 * h, Vector(v + 0.5 * h * k1));
  const Vector k3 = sys.f(t + 0.5 * h, Vector(v + 0.5 * h * k2));
  const Vector k4 = sys.f(t + h, Vector(v + h * k3));
  return v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate_baseline(const ResidualSystem& sys, BaselineMethod method,
                              double t0, double h, int steps, const Vector& v0,
                              const NewtonConfig& cfg) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  check_step_and_state(sys, h, v0);

  Trajectory traj;
  traj.times.reserve(static_cast<size_t>(steps) + 1);
  traj.states.reserve(static_cast<size_t>(steps) + 1);
  traj.diagnostics.reserve(static_cast<size_t>(steps));
  traj.times.push_back(t0);
  traj.states.push_back(v0);

  Vector v = v0;
  for (int n = 0; n < steps; ++n) {
    const double t = t0 + n * h;
    StepDiagnostics diag;
    try {
      switch (method) {
        case BaselineMethod::ExplicitEuler:
          v = v + h * sys.f(t, v);
          break;
        case BaselineMethod::ImplicitEuler: {
          NewtonResult solved = solve_implicit_euler(sys, t, h, v, cfg);
          v = std::move(solved.x);
          diag = {solved.iterations, solved.residual_norm};
          break;
        }
        case BaselineMethod::Rk4:
          v = rk4_step(sys, t, h, v);
          break;
      }
    } catch (const NonconvergenceError& e) {
      throw NonconvergenceError("step " + std::to_string(n) + ": " + e.what(),
                                e.last_iterate(), e.residual_norm(), e.iterations(), n);
    } catch (const SingularityError& e) {
      throw SingularityError("step " + std::to_string(n) + ": " + e.what(), n);
    }
    traj.diagnostics.push_back(diag);
    traj.times.push_back(t0 + (n + 1) * h);
    traj.states.push_back(v);
  }
  return traj;
}

}  // namespace lsvi
