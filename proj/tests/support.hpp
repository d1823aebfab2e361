#pragma once

// Shared helpers for the unit and acceptance suites: finite-difference
// oracles, closed-form single-step updates, quadrature, RNG, and slope fits.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "lsvi/core.hpp"
#include "lsvi/schemes.hpp"

namespace testsupport {

inline constexpr double kFdStep = 6.0554544523933395e-06;  // cbrt(eps)

// Central finite differences of a scalar function of one Vector argument.
template <typename Fn>
lsvi::Vector fd_gradient(const Fn& fn, const lsvi::Vector& x) {
  lsvi::Vector grad(x.size());
  lsvi::Vector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double step = kFdStep * (1.0 + std::abs(x[i]));
    probe[i] = x[i] + step;
    const double above = fn(probe);
    probe[i] = x[i] - step;
    const double below = fn(probe);
    probe[i] = x[i];
    grad[i] = (above - below) / (2.0 * step);
  }
  return grad;
}

// Finite-difference momenta: p_start = -dL_h/dv_start, p_end = +dL_h/dv_end.
inline lsvi::MomentumPair fd_momenta(const lsvi::LagrangianSystem& sys, double t_start,
                                     double t_end, const lsvi::Vector& v_start,
                                     const lsvi::Vector& v_end) {
  lsvi::MomentumPair out;
  out.p_start = -fd_gradient(
      [&](const lsvi::Vector& a) {
        return lsvi::discrete_lagrangian(sys, t_start, t_end, a, v_end);
      },
      v_start);
  out.p_end = fd_gradient(
      [&](const lsvi::Vector& b) {
        return lsvi::discrete_lagrangian(sys, t_start, t_end, v_start, b);
      },
      v_end);
  return out;
}

// |a - b| scaled against max(1, |b|).
inline double rel_error(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

inline double rel_error(const lsvi::Vector& a, const lsvi::Vector& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    worst = std::max(worst, rel_error(a[i], b[i]));
  }
  return worst;
}

// Single-step closed forms for v' = -v under the constraint (alpha, beta).
inline double linear_growth_factor(double alpha, double beta, double h) {
  return (alpha + beta - alpha * h + 0.5 * alpha * h * h) /
         (alpha + beta + beta * h + 0.5 * beta * h * h);
}

// Single-step closed forms for the shape-function channel model.
inline double channel_method_i_update(double gamma, double h, double v) {
  return ((8.0 / 15.0) * v + gamma * h * h + (2.0 / 3.0) * gamma * h) /
         ((8.0 / 15.0) + 2.0 * h * h + (4.0 / 3.0) * h);
}

inline double channel_method_ii_update(double gamma, double h, double v) {
  return ((1.0 - 1.5 * h) * v + 1.5 * gamma * h) / (1.0 + 1.5 * h);
}

// Five-point Gauss-Legendre quadrature on [-1, 1]; exact through degree 9.
template <typename Fn>
double gauss_legendre_5(const Fn& fn) {
  constexpr std::array<double, 5> nodes = {-0.906179845938663992797626878299,
                                           -0.538469310105683091036314420700, 0.0,
                                           0.538469310105683091036314420700,
                                           0.906179845938663992797626878299};
  constexpr std::array<double, 5> weights = {0.236926885056189087514264040720,
                                             0.478628670499366468041291514836,
                                             0.568888888888888888888888888889,
                                             0.478628670499366468041291514836,
                                             0.236926885056189087514264040720};
  double sum = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * fn(nodes[i]);
  return sum;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

// Least-squares slope of log(error) against log(h).
inline double fitted_order(const std::vector<double>& hs,
                           const std::vector<double>& errors) {
  const auto n = static_cast<double>(hs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < hs.size(); ++i) {
    const double x = std::log(hs[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace testsupport
