#pragma once

#include <vector>

#include "lsvi/core.hpp"
#include "lsvi/newton.hpp"

namespace lsvi {

/// Per-step constraint α·p_start + β·p_end = 0 on the discrete momenta.
/// (0, 0) is not a valid constraint.
struct MomentumConstraint {
  double alpha = 0.0;
  double beta = 1.0;
};

/// Drives the end-of-step momentum to zero.
[[nodiscard]] constexpr MomentumConstraint method_i() { return {0.0, 1.0}; }
/// Keeps the discrete momentum constant across the step.
[[nodiscard]] constexpr MomentumConstraint method_ii() { return {-1.0, 1.0}; }

struct StepDiagnostics {
  int newton_iters = 0;
  double final_residual_norm = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<StepDiagnostics> diagnostics;  // one entry per step
  [[nodiscard]] Matrix states_matrix() const;
};

/// Discrete momenta at the two endpoints of a step.
struct MomentumPair {
  Vector p_start;
  Vector p_end;
};

struct StepResult {
  Vector state;
  StepDiagnostics diagnostics;
};

/// Trapezoidal discrete Lagrangian over [t_start, t_end] with the forward
/// difference rate D = (v_end − v_start)/h:
///   L_h = (h/2)·[L(t_start, v_start, D) + L(t_end, v_end, D)].
[[nodiscard]] double discrete_lagrangian(const LagrangianSystem& sys, double t_start,
                                         double t_end, const Vector& v_start,
                                         const Vector& v_end);

/// Exact partial derivatives of the trapezoidal discrete Lagrangian,
///   p_start = −∂L_h/∂v_start,  p_end = +∂L_h/∂v_end,
/// which expand to
///   p_start = ½·[g'(start) + g'(end)] − (h/2)·g_v(start)
///   p_end   = ½·[g'(start) + g'(end)] + (h/2)·g_v(end)
/// with g' = ∂L/∂v' and g_v = ∂L/∂v, both evaluated at the shared rate D.
[[nodiscard]] MomentumPair discrete_momenta(const LagrangianSystem& sys, double t_start,
                                            double t_end, const Vector& v_start,
                                            const Vector& v_end);

/// Advances one step by solving α·p_start + β·p_end = 0 for the new state
/// with damped Newton, seeded at the explicit Euler predictor when the
/// system carries a right-hand side (at the current state otherwise).
[[nodiscard]] StepResult variational_step(const LagrangianSystem& sys,
                                          const MomentumConstraint& constraint, double t,
                                          double h, const Vector& v,
                                          const NewtonConfig& cfg = {});

/// Per-step growth factor of the constrained scheme applied to v' = −v:
///   (α + β − αh + ½αh²) / (α + β + βh + ½βh²).
[[nodiscard]] double amplification_factor(const MomentumConstraint& constraint, double h);

/// Fixed-step integration; times[n] = t0 + n·h. Solver failures are rethrown
/// with the offending step index attached.
[[nodiscard]] Trajectory integrate(const LagrangianSystem& sys,
                                   const MomentumConstraint& constraint, double t0,
                                   double h, int steps, const Vector& v0,
                                   const NewtonConfig& cfg = {});

}  // namespace lsvi
