#include "lsvi/newton.hpp"

#include <cmath>
#include <stdexcept>

namespace lsvi {

namespace {

constexpr double kMaxStepScale = 10.0;
constexpr int kMaxHalvings = 30;

double inf_norm(const Vector& v) { return v.lpNorm<Eigen::Infinity>(); }

Matrix central_difference_jacobian(const VectorFn& G, const Vector& x,
                                   const Vector& gx, double step_scale) {
  const auto dim = x.size();
  Matrix jac(gx.size(), dim);
  Vector probe = x;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double step = step_scale * (1.0 + std::abs(x[j]));
    probe[j] = x[j] + step;
    Vector gp = G(probe);
    probe[j] = x[j] - step;
    Vector gm = G(probe);
    probe[j] = x[j];
    jac.col(j) = (gp - gm) / (2.0 * step);
  }
  return jac;
}

}  // namespace

NewtonResult newton_solve(const VectorFn& G, Vector x0, const NewtonConfig& cfg,
                          const MatrixFn& jac) {
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(cfg.tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
  if (!(cfg.fd_jacobian_step > 0.0)) {
    throw std::invalid_argument("fd_jacobian_step must be > 0");
  }

  Vector x = std::move(x0);
  Vector gx = G(x);
  double norm = inf_norm(gx);

  for (int iter = 0; iter <= cfg.max_iter; ++iter) {
    if (norm <= cfg.tol) return {x, iter, norm};
    if (iter == cfg.max_iter) break;

    Matrix jacobian =
        jac ? jac(x) : central_difference_jacobian(G, x, gx, cfg.fd_jacobian_step);
    if (!jacobian.allFinite()) {
      throw SingularityError("non-finite jacobian in newton iteration");
    }
    Eigen::FullPivLU<Matrix> lu(jacobian);
    if (!lu.isInvertible()) {
      throw SingularityError("singular jacobian in newton iteration");
    }
    Vector delta = lu.solve(-gx);

    const double delta_norm = inf_norm(delta);
    const double cap = kMaxStepScale * (1.0 + inf_norm(x));
    if (delta_norm > cap) delta *= cap / delta_norm;

    bool accepted = false;
    double lambda = 1.0;
    for (int k = 0; k <= kMaxHalvings; ++k) {
      Vector trial = x + lambda * delta;
      Vector gt = G(trial);
      const double trial_norm = inf_norm(gt);
      if (trial_norm < norm) {
        x = std::move(trial);
        gx = std::move(gt);
        norm = trial_norm;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) {
      throw NonconvergenceError("newton line search stalled", x, norm, iter);
    }
  }
  throw NonconvergenceError("newton did not reach tolerance", x, norm, cfg.max_iter);
}

}  // namespace lsvi
