#include "lsvi/problems.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace lsvi {

namespace {

void check_channel_params(const ChannelParams& params) {
  if (!std::isfinite(params.gamma)) {
    throw std::invalid_argument("gamma must be finite");
  }
  if (!(params.series_tol > 0.0) || !std::isfinite(params.series_tol)) {
    throw std::invalid_argument("series_tol must be positive and finite");
  }
}

/// Odd-mode expansion of the developing channel flow at the centerline.
/// Terms are summed in ascending n for both the steady and transient parts,
/// so eval(0) cancels to exactly zero.
class CenterlineSeries {
 public:
  explicit CenterlineSeries(const ChannelParams& params) : gamma_(params.gamma) {
    constexpr double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
    const double magnitude = 16.0 * std::abs(gamma_) / pi3;
    // Largest odd n whose coefficient magnitude is still >= series_tol.
    last_mode_ = -1;
    if (magnitude >= params.series_tol) {
      const double bound = std::cbrt(magnitude / params.series_tol);
      if (bound > 2.0e7) {
        throw std::invalid_argument("series_tol is too small for this gamma");
      }
      long n = std::lround(std::floor(bound));
      if (n % 2 == 0) --n;
      if (n < 1) n = 1;
      // Float cube roots can land one mode off; fix up against the predicate.
      while (coefficient_magnitude(n + 2) >= params.series_tol) n += 2;
      while (n >= 1 && coefficient_magnitude(n) < params.series_tol) n -= 2;
      last_mode_ = n;
    }
    steady_ = 0.0;
    double sign = 1.0;
    for (long n = 1; n <= last_mode_; n += 2) {
      steady_ += sign * coefficient(n);
      sign = -sign;
    }
  }

  [[nodiscard]] double eval(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("t must be >= 0");
    constexpr double half_pi = 0.5 * std::numbers::pi;
    double transient = 0.0;
    double sign = 1.0;
    for (long n = 1; n <= last_mode_; n += 2) {
      const double rate = (n * half_pi) * (n * half_pi);
      const double exponent = rate * t;
      if (exponent > 746.0) break;  // exp underflows to exactly zero beyond this
      transient += sign * coefficient(n) * std::exp(-exponent);
      sign = -sign;
    }
    return steady_ - transient;
  }

 private:
  [[nodiscard]] double coefficient(long n) const {
    constexpr double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
    const double dn = static_cast<double>(n);
    return 16.0 * gamma_ / (dn * dn * dn * pi3);
  }
  [[nodiscard]] double coefficient_magnitude(long n) const {
    return std::abs(coefficient(n));
  }

  double gamma_ = 0.0;
  long last_mode_ = -1;
  double steady_ = 0.0;
};

}  // namespace

FirstOrderProblem linear_decay() {
  FirstOrderProblem problem;
  problem.system.dim = 1;
  problem.system.f = [](double, const Vector& v) { return Vector(-v); };
  problem.system.jacobian = [](double, const Vector&) {
    return Matrix::Constant(1, 1, -1.0);
  };
  problem.exact.eval = [](double t) { return std::exp(-t); };
  problem.v0 = Vector::Constant(1, 1.0);
  return problem;
}

FirstOrderProblem quadratic_drag() {
  FirstOrderProblem problem;
  problem.system.dim = 1;
  problem.system.f = [](double, const Vector& v) {
    return Vector(-v.array().square());
  };
  problem.system.jacobian = [](double, const Vector& v) {
    return Matrix::Constant(1, 1, -2.0 * v[0]);
  };
  problem.exact.eval = [](double t) { return 1.0 / (1.0 + t); };
  problem.v0 = Vector::Constant(1, 1.0);
  return problem;
}

LagrangianSystem channel_lagrangian(const ChannelParams& params) {
  check_channel_params(params);
  const double gamma = params.gamma;
  LagrangianSystem sys;
  sys.dim = 1;
  sys.lagrangian = [gamma](double, const Vector& v, const Vector& vdot) {
    const double u = v[0];
    const double w = vdot[0];
    return gamma * gamma - 4.0 * gamma * u + 4.0 * u * u +
           (4.0 / 3.0) * (-gamma + 2.0 * u) * w + (8.0 / 15.0) * w * w;
  };
  sys.grad_v = [gamma](double, const Vector& v, const Vector& vdot) {
    return Vector(Vector::Constant(
        1, -4.0 * gamma + 8.0 * v[0] + (8.0 / 3.0) * vdot[0]));
  };
  sys.grad_vdot = [gamma](double, const Vector& v, const Vector& vdot) {
    return Vector(Vector::Constant(
        1, (4.0 / 3.0) * (-gamma + 2.0 * v[0]) + (16.0 / 15.0) * vdot[0]));
  };
  sys.rhs = [gamma](double, const Vector& v) {
    return Vector(Vector::Constant(1, 1.5 * gamma - 3.0 * v[0]));
  };
  return sys;
}

double channel_exact_centerline(const ChannelParams& params, double t) {
  check_channel_params(params);
  return CenterlineSeries(params).eval(t);
}

ExactSolution channel_exact(const ChannelParams& params) {
  check_channel_params(params);
  auto series = std::make_shared<const CenterlineSeries>(params);
  ExactSolution exact;
  exact.eval = [series](double t) { return series->eval(t); };
  return exact;
}

ResidualSystem channel_averaged_system(const ChannelParams& params) {
  check_channel_params(params);
  const double gamma = params.gamma;
  ResidualSystem sys;
  sys.dim = 1;
  sys.f = [gamma](double, const Vector& v) {
    return Vector(Vector::Constant(1, 1.5 * gamma - 3.0 * v[0]));
  };
  sys.jacobian = [](double, const Vector&) { return Matrix::Constant(1, 1, -3.0); };
  return sys;
}

}  // namespace lsvi
