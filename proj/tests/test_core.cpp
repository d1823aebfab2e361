#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lsvi/core.hpp"
#include "lsvi/problems.hpp"
#include "support.hpp"

namespace {

lsvi::Vector scalar(double x) {
  lsvi::Vector v(1);
  v << x;
  return v;
}

}  // namespace

TEST_CASE("residual is the defect of the first-order equation") {
  const auto sys = lsvi::linear_decay().system;
  // v' = -v: residual(v', v) = v' + v.
  CHECK(lsvi::residual(sys, 0.0, scalar(1.0), scalar(-1.0))[0] == 0.0);
  CHECK(lsvi::residual(sys, 0.0, scalar(1.0), scalar(0.0))[0] == doctest::Approx(1.0));
  CHECK(lsvi::residual(sys, 3.0, scalar(-2.0), scalar(1.0))[0] == doctest::Approx(-1.0));
}

TEST_CASE("residual rejects mismatched dimensions") {
  const auto sys = lsvi::linear_decay().system;
  lsvi::Vector two(2);
  two << 1.0, 2.0;
  CHECK_THROWS_AS((void)lsvi::residual(sys, 0.0, two, two), std::invalid_argument);
  CHECK_THROWS_AS((void)lsvi::residual(sys, 0.0, scalar(1.0), two), std::invalid_argument);

  lsvi::ResidualSystem bad;
  bad.dim = 1;
  bad.f = [](double, const lsvi::Vector&) {
    lsvi::Vector out(2);
    out << 0.0, 0.0;
    return out;
  };
  CHECK_THROWS_AS((void)lsvi::residual(bad, 0.0, scalar(1.0), scalar(1.0)),
                  std::invalid_argument);
}

TEST_CASE("squared-residual Lagrangian matches expanded closed forms") {
  // For v' = -v:   L = (v' + v)^2 / 2.
  // For v' = -v^2: L = (v' + v^2)^2 / 2.
  const auto linear = lsvi::least_squares_adapter(lsvi::linear_decay().system);
  const auto drag = lsvi::least_squares_adapter(lsvi::quadratic_drag().system);

  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 50; ++i) {
    const double t = testsupport::uniform(rng, 0.0, 4.0);
    const double v = testsupport::uniform(rng, -2.0, 2.0);
    const double vdot = testsupport::uniform(rng, -2.0, 2.0);

    const double lin = 0.5 * (vdot + v) * (vdot + v);
    const double drg = 0.5 * (vdot + v * v) * (vdot + v * v);
    CHECK(std::abs(linear.lagrangian(t, scalar(v), scalar(vdot)) - lin) <= 1e-14);
    CHECK(std::abs(drag.lagrangian(t, scalar(v), scalar(vdot)) - drg) <= 1e-14);

    // The density is a squared norm, so it can never be negative.
    CHECK(linear.lagrangian(t, scalar(v), scalar(vdot)) >= 0.0);
    CHECK(drag.lagrangian(t, scalar(v), scalar(vdot)) >= 0.0);
  }
}

TEST_CASE("adapter Lagrangian vanishes exactly on solutions") {
  const auto linear = lsvi::least_squares_adapter(lsvi::linear_decay().system);
  // On the solution manifold v' = f(t, v) the residual is identically zero.
  for (double v : {-1.5, -0.25, 0.0, 0.5, 2.0}) {
    CHECK(linear.lagrangian(0.3, scalar(v), scalar(-v)) == 0.0);
  }
}

TEST_CASE("adapter gradients agree with finite differences of the density") {
  const auto problems = {lsvi::linear_decay().system, lsvi::quadratic_drag().system};
  std::mt19937_64 rng(771204);
  for (const auto& sys : problems) {
    const auto lag = lsvi::least_squares_adapter(sys);
    for (int i = 0; i < 100; ++i) {
      const double t = testsupport::uniform(rng, 0.0, 3.0);
      const lsvi::Vector v = scalar(testsupport::uniform(rng, -2.0, 2.0));
      const lsvi::Vector vdot = scalar(testsupport::uniform(rng, -2.0, 2.0));

      const lsvi::Vector gv = lag.grad_v(t, v, vdot);
      const lsvi::Vector gvdot = lag.grad_vdot(t, v, vdot);
      const lsvi::Vector fd_gv = testsupport::fd_gradient(
          [&](const lsvi::Vector& p) { return lag.lagrangian(t, p, vdot); }, v);
      const lsvi::Vector fd_gvdot = testsupport::fd_gradient(
          [&](const lsvi::Vector& p) { return lag.lagrangian(t, v, p); }, vdot);

      CHECK(std::abs(gv[0] - fd_gv[0]) <= 1e-6 * (1.0 + std::abs(gv[0])));
      CHECK(std::abs(gvdot[0] - fd_gvdot[0]) <= 1e-6 * (1.0 + std::abs(gvdot[0])));
    }
  }
}

TEST_CASE("adapter velocity gradient is exactly the residual") {
  const auto sys = lsvi::quadratic_drag().system;
  const auto lag = lsvi::least_squares_adapter(sys);
  // grad wrt v' of (1/2)|v' - f|^2 is v' - f itself.
  const lsvi::Vector g = lag.grad_vdot(0.0, scalar(2.0), scalar(1.0));
  CHECK(g[0] == doctest::Approx(1.0 + 4.0).epsilon(1e-15));  // 1 - (-4)
}

TEST_CASE("finite-difference Jacobian matches analytic Jacobians") {
  std::mt19937_64 rng(99173);
  for (const auto& problem : {lsvi::linear_decay(), lsvi::quadratic_drag()}) {
    for (int i = 0; i < 25; ++i) {
      const double t = testsupport::uniform(rng, 0.0, 2.0);
      const lsvi::Vector v = scalar(testsupport::uniform(rng, -2.0, 2.0));
      const lsvi::Matrix fd = lsvi::fd_jacobian(problem.system.f, 1, t, v);
      const lsvi::Matrix an = problem.system.jacobian(t, v);
      CHECK(std::abs(fd(0, 0) - an(0, 0)) <= 1e-6 * (1.0 + std::abs(an(0, 0))));
    }
  }
}

TEST_CASE("with_fd_jacobian produces a usable Jacobian closure") {
  auto f = [](double, const lsvi::Vector& v) {
    lsvi::Vector out(2);
    out << v[0] * v[1], std::sin(v[0]);
    return out;
  };
  const auto sys = lsvi::with_fd_jacobian(2, f);
  lsvi::Vector at(2);
  at << 0.5, 2.0;
  const lsvi::Matrix J = sys.jacobian(0.0, at);
  CHECK(std::abs(J(0, 0) - 2.0) <= 1e-8);
  CHECK(std::abs(J(0, 1) - 0.5) <= 1e-8);
  CHECK(std::abs(J(1, 0) - std::cos(0.5)) <= 1e-8);
  CHECK(std::abs(J(1, 1) - 0.0) <= 1e-8);
}

TEST_CASE("stationarity of the squared residual recovers the second-order form") {
  // Minimizing (1/2)|v' - f|^2 over paths yields v'' = J f on solutions.
  // Check that the exact flows satisfy this to finite-difference accuracy.
  const double delta = 1e-4;
  for (const auto& problem : {lsvi::linear_decay(), lsvi::quadratic_drag()}) {
    for (double t : {0.1, 0.7, 1.9}) {
      const double v = problem.exact.eval(t);
      const double above = problem.exact.eval(t + delta);
      const double below = problem.exact.eval(t - delta);
      const double second = (above - 2.0 * v + below) / (delta * delta);
      const lsvi::Vector vv = scalar(v);
      const double rhs =
          (problem.system.jacobian(t, vv) * problem.system.f(t, vv))(0);
      CHECK(std::abs(second - rhs) <= 1e-5 * (1.0 + std::abs(rhs)));
    }
  }
}
