#pragma once

#include <stdexcept>
#include <string>

#include "lsvi/core.hpp"

namespace lsvi {

/// Base class for solver failures. `step_index()` is -1 unless the failure
/// happened inside an integration loop, in which case it names the step.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& message, int step_index = -1)
      : std::runtime_error(message), step_index_(step_index) {}
  [[nodiscard]] int step_index() const noexcept { return step_index_; }

 private:
  int step_index_ = -1;
};

/// Newton iteration ran out of iterations or stalled. Carries the last
/// iterate and its residual norm.
class NonconvergenceError : public SolverError {
 public:
  NonconvergenceError(const std::string& message, Vector last_iterate,
                      double residual_norm, int iterations, int step_index = -1)
      : SolverError(message, step_index),
        last_iterate_(std::move(last_iterate)),
        residual_norm_(residual_norm),
        iterations_(iterations) {}
  [[nodiscard]] const Vector& last_iterate() const noexcept { return last_iterate_; }
  [[nodiscard]] double residual_norm() const noexcept { return residual_norm_; }
  [[nodiscard]] int iterations() const noexcept { return iterations_; }

 private:
  Vector last_iterate_;
  double residual_norm_ = 0.0;
  int iterations_ = 0;
};

/// A linear solve hit a singular (or non-finite) matrix.
class SingularityError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Default step scale for central-difference Jacobians, ε^(1/3).
inline constexpr double kCentralDiffStep = 6.0554544523933395e-06;

struct NewtonConfig {
  double tol = 1e-12;  // ∞-norm threshold on the residual, checked as given
  int max_iter = 50;
  double fd_jacobian_step = kCentralDiffStep;
};

struct NewtonResult {
  Vector x;
  int iterations = 0;
  double residual_norm = 0.0;
};

using VectorFn = std::function<Vector(const Vector&)>;
using MatrixFn = std::function<Matrix(const Vector&)>;

/// Damped Newton iteration on G(x) = 0.
///
/// The Jacobian comes from `jac` when provided, otherwise from central
/// differences with step fd_jacobian_step·(1 + |x_i|). Each Newton step is
/// clipped to length 10·(1 + ‖x‖∞) and then halved (at most 30 times) until
/// the residual ∞-norm decreases. Throws NonconvergenceError if the tolerance
/// is not reached within max_iter steps or no halving makes progress, and
/// SingularityError if the Jacobian cannot be inverted.
NewtonResult newton_solve(const VectorFn& G, Vector x0, const NewtonConfig& cfg,
                          const MatrixFn& jac = {});

}  // namespace lsvi
