#pragma once

#include "lsvi/core.hpp"

namespace lsvi {

/// Scalar-valued closed-form reference solution.
struct ExactSolution {
  std::function<double(double)> eval;
};

/// A bundled scalar test system with its reference solution and initial state.
struct FirstOrderProblem {
  ResidualSystem system;
  ExactSolution exact;
  Vector v0;
};

/// v' = −v, v(0) = 1; exact solution e^(−t).
[[nodiscard]] FirstOrderProblem linear_decay();

/// v' = −v², v(0) = 1; exact solution 1/(1 + t).
[[nodiscard]] FirstOrderProblem quadratic_drag();

/// Plane channel flow driven by a constant pressure gradient, reduced to the
/// parabolic shape function u(y, t) = v(t)·(1 − y²) on y ∈ [−1, 1] with the
/// fluid initially at rest.
struct ChannelParams {
  double gamma = 2.0;         // non-dimensional pressure gradient
  double series_tol = 1e-13;  // truncation threshold for the exact series
};

/// y-integrated least-squares Lagrangian of the shape-function channel model:
///   L(v, v') = γ² − 4γv + 4v² + (4/3)(−γ + 2v)·v' + (8/15)·v'²,
/// identical to ∫ ½(−γ + 2v + v'(1 − y²))² dy over y ∈ [−1, 1].
[[nodiscard]] LagrangianSystem channel_lagrangian(const ChannelParams& params);

/// Centerline velocity of the exact developing flow,
///   u(0, t) = Σ_{n odd} (16γ/(n³π³))·sin(nπ/2)·[1 − e^(−(nπ/2)²·t)],
/// with the sum truncated at the first odd n whose coefficient magnitude
/// 16|γ|/(n³π³) drops below series_tol. Requires t ≥ 0.
[[nodiscard]] double channel_exact_centerline(const ChannelParams& params, double t);

/// channel_exact_centerline with the truncation and the steady part
/// precomputed; evaluations agree with channel_exact_centerline bit for bit.
[[nodiscard]] ExactSolution channel_exact(const ChannelParams& params);

/// ODE for the y-averaged channel velocity: −2γ + 4v + (4/3)v' = 0, i.e.
/// v' = (3/2)γ − 3v, starting from v(0) = 0.
[[nodiscard]] ResidualSystem channel_averaged_system(const ChannelParams& params);

}  // namespace lsvi
