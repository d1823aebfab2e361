#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lsvi/baselines.hpp"
#include "lsvi/problems.hpp"
#include "support.hpp"

namespace {

lsvi::Vector scalar(double x) {
  lsvi::Vector v(1);
  v << x;
  return v;
}

}  // namespace

TEST_CASE("explicit Euler is the forward update v + h f") {
  const auto linear = lsvi::linear_decay().system;
  // v' = -v at h = 1 from v = 1 lands exactly on zero.
  CHECK(lsvi::explicit_euler_step(linear, 0.0, 1.0, scalar(1.0))[0] == 0.0);
  CHECK(lsvi::explicit_euler_step(linear, 0.0, 0.25, scalar(2.0))[0] ==
        doctest::Approx(1.5).epsilon(1e-15));

  const auto drag = lsvi::quadratic_drag().system;
  CHECK(lsvi::explicit_euler_step(drag, 0.0, 0.5, scalar(1.0))[0] ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("implicit Euler solves the backward update") {
  const auto linear = lsvi::linear_decay().system;
  // v1 = v0/(1 + h): h = 1 from 1 gives 0.5.
  CHECK(std::abs(lsvi::implicit_euler_step(linear, 0.0, 1.0, scalar(1.0))[0] - 0.5) <=
        1e-12);

  // Averaged channel flow v' = 1.5*gamma - 3v, gamma = 2, h = 1 from rest:
  // v1 = (0 + 3)/(1 + 3) = 0.75.
  const auto channel = lsvi::channel_averaged_system({2.0, 1e-13});
  CHECK(std::abs(lsvi::implicit_euler_step(channel, 0.0, 1.0, scalar(0.0))[0] - 0.75) <=
        1e-12);

  // Unconditionally stable: an enormous step lands near the steady state.
  // The defect's rounding floor is about h·ulp(3) ~ 4e-4 at this scale, so the
  // tolerance must sit above it; the solved state is still accurate to
  // tol / (1 + 3h) ~ 3e-15.
  lsvi::NewtonConfig cfg;
  cfg.tol = 1e-2;
  const double huge = lsvi::implicit_euler_step(channel, 0.0, 1e12, scalar(0.0), cfg)[0];
  CHECK(std::abs(huge - 1.0) <= 1e-8);
}

TEST_CASE("implicit Euler on linear decay matches 1/(1+h)^n") {
  const auto linear = lsvi::linear_decay();
  for (double h : {0.5, 1.0, 2.5}) {
    const int steps = 6;
    const auto traj = lsvi::integrate_baseline(linear.system, lsvi::BaselineMethod::ImplicitEuler,
                                               0.0, h, steps, linear.v0);
    double expected = 1.0;
    for (int n = 1; n <= steps; ++n) {
      expected /= 1.0 + h;
      CHECK(std::abs(traj.states[n][0] - expected) <= 1e-13 * std::max(1.0, expected));
    }
    // Implicit steps report their Newton iteration counts.
    CHECK(traj.diagnostics.size() == static_cast<size_t>(steps));
    CHECK(traj.diagnostics[0].newton_iters >= 1);
  }
}

TEST_CASE("classical Runge-Kutta reproduces its stability polynomial") {
  const auto linear = lsvi::linear_decay();
  // Single step at h = 1: R(-1) = 1 - 1 + 1/2 - 1/6 + 1/24 = 0.375.
  CHECK(std::abs(lsvi::rk4_step(linear.system, 0.0, 1.0, scalar(1.0))[0] - 0.375) <= 1e-15);

  for (double h : {0.1, 0.5, 1.0, 2.0}) {
    const double factor = 1.0 - h + h * h / 2.0 - h * h * h / 6.0 + h * h * h * h / 24.0;
    const int steps = 5;
    const auto traj = lsvi::integrate_baseline(linear.system, lsvi::BaselineMethod::Rk4, 0.0,
                                               h, steps, linear.v0);
    double expected = 1.0;
    for (int n = 1; n <= steps; ++n) {
      expected *= factor;
      CHECK(std::abs(traj.states[n][0] - expected) <=
            1e-13 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("one Runge-Kutta step at small h is fourth-order accurate") {
  const auto linear = lsvi::linear_decay();
  const double h = 0.1;
  const double value = lsvi::rk4_step(linear.system, 0.0, h, scalar(1.0))[0];
  CHECK(std::abs(value - 0.9048375) <= 1e-15);
  CHECK(std::abs(value - std::exp(-h)) <= 1e-7);
}

TEST_CASE("baseline integration grids and validation") {
  const auto linear = lsvi::linear_decay();
  const auto traj = lsvi::integrate_baseline(linear.system, lsvi::BaselineMethod::ExplicitEuler,
                                             0.5, 0.25, 8, linear.v0);
  REQUIRE(traj.times.size() == 9);
  for (int n = 0; n <= 8; ++n) {
    CHECK(std::abs(traj.times[n] - (0.5 + 0.25 * n)) <= 1e-12);
  }
  CHECK_THROWS_AS((void)lsvi::integrate_baseline(linear.system, lsvi::BaselineMethod::Rk4, 0.0,
                                           0.0, 4, linear.v0),
                  std::domain_error);
  CHECK_THROWS_AS((void)lsvi::integrate_baseline(linear.system, lsvi::BaselineMethod::Rk4, 0.0,
                                           0.5, 0, linear.v0),
                  std::invalid_argument);
}

TEST_CASE("implicit Euler nonconvergence carries the step index") {
  const auto drag = lsvi::quadratic_drag();
  lsvi::NewtonConfig cfg;
  cfg.max_iter = 1;
  cfg.tol = 1e-16;
  bool thrown = false;
  try {
    const auto traj = lsvi::integrate_baseline(
        drag.system, lsvi::BaselineMethod::ImplicitEuler, 0.0, 0.5, 4, drag.v0, cfg);
    (void)traj;
  } catch (const lsvi::NonconvergenceError& err) {
    thrown = true;
    CHECK(err.step_index() >= 0);
  }
  CHECK(thrown);
}
