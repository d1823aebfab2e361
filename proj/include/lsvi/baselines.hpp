#pragma once

#include "lsvi/core.hpp"
#include "lsvi/newton.hpp"
#include "lsvi/schemes.hpp"

namespace lsvi {

[[nodiscard]] Vector explicit_euler_step(const ResidualSystem& sys, double t, double h,
                                         const Vector& v);

/// Backward Euler solved with Newton using the system's Jacobian; the result
/// satisfies ‖v_next − v − h·f(t + h, v_next)‖∞ ≤ cfg.tol.
[[nodiscard]] Vector implicit_euler_step(const ResidualSystem& sys, double t, double h,
                                         const Vector& v, const NewtonConfig& cfg = {});

/// Classical fourth-order Runge-Kutta step.
[[nodiscard]] Vector rk4_step(const ResidualSystem& sys, double t, double h,
                              const Vector& v);

enum class BaselineMethod { ExplicitEuler, ImplicitEuler, Rk4 };

/// Fixed-step integration with one of the reference methods; diagnostics are
/// populated for the implicit method and zero for the explicit ones.
[[nodiscard]] Trajectory integrate_baseline(const ResidualSystem& sys,
                                            BaselineMethod method, double t0, double h,
                                            int steps, const Vector& v0,
                                            const NewtonConfig& cfg = {});

}  // namespace lsvi
