#include "lsvi/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lsvi {

namespace {

void check_dim(const Vector& v, int dim, const char* what) {
  if (v.size() != dim) {
    throw std::invalid_argument(std::string(what) + " has size " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(dim));
  }
}

}  // namespace

Vector residual(const ResidualSystem& sys, double t, const Vector& v,
                const Vector& vdot) {
  check_dim(v, sys.dim, "state");
  check_dim(vdot, sys.dim, "rate");
  Vector fv = sys.f(t, v);
  check_dim(fv, sys.dim, "f(t, v)");
  return vdot - fv;
}

LagrangianSystem least_squares_adapter(const ResidualSystem& sys) {
  if (sys.dim <= 0 || !sys.f || !sys.jacobian) {
    throw std::invalid_argument("least_squares_adapter needs dim > 0, f and jacobian");
  }
  LagrangianSystem out;
  out.dim = sys.dim;
  out.lagrangian = [sys](double t, const Vector& v, const Vector& vdot) {
    return 0.5 * residual(sys, t, v, vdot).squaredNorm();
  };
  out.grad_vdot = [sys](double t, const Vector& v, const Vector& vdot) {
    return residual(sys, t, v, vdot);
  };
  out.grad_v = [sys](double t, const Vector& v, const Vector& vdot) {
    Vector r = residual(sys, t, v, vdot);
    return Vector(-sys.jacobian(t, v).transpose() * r);
  };
  out.rhs = sys.f;
  return out;
}

Matrix fd_jacobian(const RhsFn& f, int dim, double t, const Vector& v) {
  check_dim(v, dim, "state");
  const double scale = std::sqrt(std::numeric_limits<double>::epsilon());
  Matrix jac(dim, dim);
  Vector probe = v;
  for (int j = 0; j < dim; ++j) {
    const double step = scale * (1.0 + std::abs(v[j]));
    probe[j] = v[j] + step;
    Vector fp = f(t, probe);
    probe[j] = v[j] - step;
    Vector fm = f(t, probe);
    probe[j] = v[j];
    jac.col(j) = (fp - fm) / (2.0 * step);
  }
  return jac;
}

ResidualSystem with_fd_jacobian(int dim, RhsFn f) {
  if (dim <= 0 || !f) {
    throw std::invalid_argument("with_fd_jacobian needs dim > 0 and f");
  }
  ResidualSystem sys;
  sys.dim = dim;
  sys.f = f;
  sys.jacobian = [f, dim](double t, const Vector& v) {
    return fd_jacobian(f, dim, t, v);
  };
  return sys;
}

}  // namespace lsvi
