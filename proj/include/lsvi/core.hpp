#pragma once

#include <Eigen/Dense>
#include <functional>

namespace lsvi {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Right-hand side of a first-order system v' = f(t, v).
using RhsFn = std::function<Vector(double, const Vector&)>;
/// State Jacobian of f; row i holds the partials of f_i.
using JacobianFn = std::function<Matrix(double, const Vector&)>;
using LagrangianFn = std::function<double(double, const Vector&, const Vector&)>;
using LagrangianGradFn = std::function<Vector(double, const Vector&, const Vector&)>;

/// First-order dynamics v' = f(t, v) with an analytic state Jacobian.
struct ResidualSystem {
  int dim = 0;
  RhsFn f;
  JacobianFn jacobian;
};

/// Lagrangian L(t, v, v') with its partial gradients.
///
/// `rhs` optionally carries the first-order right-hand side the Lagrangian was
/// built from; implicit solvers use it only to seed their iteration, so it has
/// no effect on converged results.
struct LagrangianSystem {
  int dim = 0;
  LagrangianFn lagrangian;
  LagrangianGradFn grad_v;
  LagrangianGradFn grad_vdot;
  RhsFn rhs;
};

/// v' − f(t, v); zero along exact trajectories of the system.
[[nodiscard]] Vector residual(const ResidualSystem& sys, double t, const Vector& v,
                              const Vector& vdot);

/// Least-squares Lagrangian L = ½‖v' − f(t, v)‖² for the given system.
/// Gradients: ∂L/∂v' = v' − f and ∂L/∂v = −Jᵀ(v' − f).
[[nodiscard]] LagrangianSystem least_squares_adapter(const ResidualSystem& sys);

/// Central-difference Jacobian of f with step √ε·(1 + |v_i|) per component.
[[nodiscard]] Matrix fd_jacobian(const RhsFn& f, int dim, double t, const Vector& v);

/// Wraps a right-hand side whose Jacobian is not available analytically.
[[nodiscard]] ResidualSystem with_fd_jacobian(int dim, RhsFn f);

}  // namespace lsvi
