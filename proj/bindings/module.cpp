#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lsvi/harness.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_lsvi, m) {
  m.doc() = "Momentum-constrained variational integrators for dissipative systems";

  // Exception translation; leaf classes registered after the base so they are
  // matched first.
  auto solver_error = py::register_exception<lsvi::SolverError>(m, "SolverError",
                                                                PyExc_RuntimeError);
  py::register_exception<lsvi::NonconvergenceError>(m, "NonconvergenceError",
                                                    solver_error);
  py::register_exception<lsvi::SingularityError>(m, "SingularityError", solver_error);

  py::class_<lsvi::ResidualSystem>(m, "ResidualSystem",
                                   "First-order dynamics v' = f(t, v)")
      .def(py::init([](int dim, lsvi::RhsFn f, lsvi::JacobianFn jacobian) {
             lsvi::ResidualSystem sys;
             sys.dim = dim;
             sys.f = std::move(f);
             sys.jacobian = std::move(jacobian);
             return sys;
           }),
           py::arg("dim"), py::arg("f"), py::arg("jacobian"))
      .def_readonly("dim", &lsvi::ResidualSystem::dim)
      .def("f", [](const lsvi::ResidualSystem& sys, double t,
                   const lsvi::Vector& v) { return sys.f(t, v); })
      .def("jacobian", [](const lsvi::ResidualSystem& sys, double t,
                          const lsvi::Vector& v) { return sys.jacobian(t, v); });

  py::class_<lsvi::LagrangianSystem>(m, "LagrangianSystem",
                                     "Lagrangian L(t, v, v') with its gradients")
      .def(py::init([](int dim, lsvi::LagrangianFn lagrangian,
                       lsvi::LagrangianGradFn grad_v, lsvi::LagrangianGradFn grad_vdot,
                       lsvi::RhsFn rhs) {
             lsvi::LagrangianSystem sys;
             sys.dim = dim;
             sys.lagrangian = std::move(lagrangian);
             sys.grad_v = std::move(grad_v);
             sys.grad_vdot = std::move(grad_vdot);
             sys.rhs = std::move(rhs);
             return sys;
           }),
           py::arg("dim"), py::arg("lagrangian"), py::arg("grad_v"),
           py::arg("grad_vdot"), py::arg("rhs") = nullptr)
      .def_readonly("dim", &lsvi::LagrangianSystem::dim)
      .def("lagrangian",
           [](const lsvi::LagrangianSystem& sys, double t, const lsvi::Vector& v,
              const lsvi::Vector& vdot) { return sys.lagrangian(t, v, vdot); })
      .def("grad_v",
           [](const lsvi::LagrangianSystem& sys, double t, const lsvi::Vector& v,
              const lsvi::Vector& vdot) { return sys.grad_v(t, v, vdot); })
      .def("grad_vdot",
           [](const lsvi::LagrangianSystem& sys, double t, const lsvi::Vector& v,
              const lsvi::Vector& vdot) { return sys.grad_vdot(t, v, vdot); });

  py::class_<lsvi::MomentumConstraint>(m, "MomentumConstraint",
                                       "Constraint alpha*p_start + beta*p_end = 0")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_readwrite("alpha", &lsvi::MomentumConstraint::alpha)
      .def_readwrite("beta", &lsvi::MomentumConstraint::beta)
      .def("__repr__", [](const lsvi::MomentumConstraint& c) {
        std::ostringstream out;
        out << "MomentumConstraint(alpha=" << c.alpha << ", beta=" << c.beta << ")";
        return out.str();
      });
  m.def("method_i", &lsvi::method_i, "Constraint that zeroes the end-of-step momentum");
  m.def("method_ii", &lsvi::method_ii,
        "Constraint that keeps the momentum constant across the step");

  py::class_<lsvi::NewtonConfig>(m, "NewtonConfig")
      .def(py::init([](double tol, int max_iter, double fd_jacobian_step) {
             return lsvi::NewtonConfig{tol, max_iter, fd_jacobian_step};
           }),
           py::arg("tol") = lsvi::NewtonConfig{}.tol,
           py::arg("max_iter") = lsvi::NewtonConfig{}.max_iter,
           py::arg("fd_jacobian_step") = lsvi::NewtonConfig{}.fd_jacobian_step)
      .def_readwrite("tol", &lsvi::NewtonConfig::tol)
      .def_readwrite("max_iter", &lsvi::NewtonConfig::max_iter)
      .def_readwrite("fd_jacobian_step", &lsvi::NewtonConfig::fd_jacobian_step);

  py::class_<lsvi::StepDiagnostics>(m, "StepDiagnostics")
      .def_readonly("newton_iters", &lsvi::StepDiagnostics::newton_iters)
      .def_readonly("final_residual_norm", &lsvi::StepDiagnostics::final_residual_norm);

  py::class_<lsvi::Trajectory>(m, "Trajectory")
      .def_readonly("times", &lsvi::Trajectory::times)
      .def_property_readonly("states", &lsvi::Trajectory::states_matrix,
                             "Samples as a (steps+1, dim) array")
      .def_readonly("diagnostics", &lsvi::Trajectory::diagnostics)
      .def("states_matrix", &lsvi::Trajectory::states_matrix);

  py::class_<lsvi::MomentumPair>(m, "MomentumPair")
      .def_readonly("p_start", &lsvi::MomentumPair::p_start)
      .def_readonly("p_end", &lsvi::MomentumPair::p_end);

  py::class_<lsvi::StepResult>(m, "StepResult")
      .def_readonly("state", &lsvi::StepResult::state)
      .def_readonly("diagnostics", &lsvi::StepResult::diagnostics);

  py::class_<lsvi::ExactSolution>(m, "ExactSolution")
      .def("__call__", [](const lsvi::ExactSolution& exact, double t) {
        return exact.eval(t);
      });

  py::class_<lsvi::FirstOrderProblem>(m, "FirstOrderProblem")
      .def_readonly("system", &lsvi::FirstOrderProblem::system)
      .def_readonly("exact", &lsvi::FirstOrderProblem::exact)
      .def_readonly("v0", &lsvi::FirstOrderProblem::v0);

  py::class_<lsvi::ChannelParams>(m, "ChannelParams")
      .def(py::init([](double gamma, double series_tol) {
             return lsvi::ChannelParams{gamma, series_tol};
           }),
           py::arg("gamma") = lsvi::ChannelParams{}.gamma,
           py::arg("series_tol") = lsvi::ChannelParams{}.series_tol)
      .def_readwrite("gamma", &lsvi::ChannelParams::gamma)
      .def_readwrite("series_tol", &lsvi::ChannelParams::series_tol);

  m.def("residual", &lsvi::residual, py::arg("system"), py::arg("t"), py::arg("v"),
        py::arg("vdot"), "v' - f(t, v)");
  m.def("least_squares_adapter", &lsvi::least_squares_adapter, py::arg("system"),
        "Lagrangian 0.5*||v' - f||^2 with analytic gradients");
  m.def("with_fd_jacobian", &lsvi::with_fd_jacobian, py::arg("dim"), py::arg("f"),
        "Attach a central-difference Jacobian to a right-hand side");
  m.def("discrete_lagrangian", &lsvi::discrete_lagrangian, py::arg("system"),
        py::arg("t_start"), py::arg("t_end"), py::arg("v_start"), py::arg("v_end"));
  m.def("discrete_momenta", &lsvi::discrete_momenta, py::arg("system"),
        py::arg("t_start"), py::arg("t_end"), py::arg("v_start"), py::arg("v_end"));
  m.def("variational_step", &lsvi::variational_step, py::arg("system"),
        py::arg("constraint"), py::arg("t"), py::arg("h"), py::arg("v"),
        py::arg("config") = lsvi::NewtonConfig{});
  m.def("amplification_factor", &lsvi::amplification_factor, py::arg("constraint"),
        py::arg("h"), "Per-step growth factor on v' = -v");
  m.def("integrate", &lsvi::integrate, py::arg("system"), py::arg("constraint"),
        py::arg("t0"), py::arg("h"), py::arg("steps"), py::arg("v0"),
        py::arg("config") = lsvi::NewtonConfig{});

  m.def("explicit_euler_step", &lsvi::explicit_euler_step, py::arg("system"),
        py::arg("t"), py::arg("h"), py::arg("v"));
  m.def("implicit_euler_step", &lsvi::implicit_euler_step, py::arg("system"),
        py::arg("t"), py::arg("h"), py::arg("v"),
        py::arg("config") = lsvi::NewtonConfig{});
  m.def("rk4_step", &lsvi::rk4_step, py::arg("system"), py::arg("t"), py::arg("h"),
        py::arg("v"));

  py::enum_<lsvi::BaselineMethod>(m, "BaselineMethod")
      .value("explicit_euler", lsvi::BaselineMethod::ExplicitEuler)
      .value("implicit_euler", lsvi::BaselineMethod::ImplicitEuler)
      .value("rk4", lsvi::BaselineMethod::Rk4);
  m.def("integrate_baseline", &lsvi::integrate_baseline, py::arg("system"),
        py::arg("method"), py::arg("t0"), py::arg("h"), py::arg("steps"), py::arg("v0"),
        py::arg("config") = lsvi::NewtonConfig{});

  m.def("linear_decay", &lsvi::linear_decay);
  m.def("quadratic_drag", &lsvi::quadratic_drag);
  m.def("channel_lagrangian", &lsvi::channel_lagrangian, py::arg("params"));
  m.def("channel_exact_centerline", &lsvi::channel_exact_centerline, py::arg("params"),
        py::arg("t"));
  m.def("channel_exact", &lsvi::channel_exact, py::arg("params"));
  m.def("channel_averaged_system", &lsvi::channel_averaged_system, py::arg("params"));

  py::enum_<lsvi::ProblemKind>(m, "ProblemKind")
      .value("linear", lsvi::ProblemKind::Linear)
      .value("qdrag", lsvi::ProblemKind::QuadraticDrag)
      .value("channel", lsvi::ProblemKind::Channel);
  py::enum_<lsvi::MethodKind>(m, "MethodKind")
      .value("method1", lsvi::MethodKind::Method1)
      .value("method2", lsvi::MethodKind::Method2)
      .value("alphabeta", lsvi::MethodKind::AlphaBeta)
      .value("explicit_euler", lsvi::MethodKind::ExplicitEuler)
      .value("implicit_euler", lsvi::MethodKind::ImplicitEuler)
      .value("rk4", lsvi::MethodKind::Rk4);

  py::class_<lsvi::RunSpec>(m, "RunSpec")
      .def(py::init([](lsvi::ProblemKind problem, lsvi::MethodKind method, double h,
                       double t_end, double alpha, double beta, double gamma,
                       lsvi::NewtonConfig newton) {
             lsvi::RunSpec spec;
             spec.problem = problem;
             spec.method = method;
             spec.h = h;
             spec.t_end = t_end;
             spec.alpha = alpha;
             spec.beta = beta;
             spec.gamma = gamma;
             spec.newton = newton;
             return spec;
           }),
           py::arg("problem"), py::arg("method"), py::arg("h"), py::arg("t_end"),
           py::arg("alpha") = 0.0, py::arg("beta") = 1.0, py::arg("gamma") = 2.0,
           py::arg("newton") = lsvi::NewtonConfig{})
      .def_readwrite("problem", &lsvi::RunSpec::problem)
      .def_readwrite("method", &lsvi::RunSpec::method)
      .def_readwrite("alpha", &lsvi::RunSpec::alpha)
      .def_readwrite("beta", &lsvi::RunSpec::beta)
      .def_readwrite("h", &lsvi::RunSpec::h)
      .def_readwrite("t_end", &lsvi::RunSpec::t_end)
      .def_readwrite("gamma", &lsvi::RunSpec::gamma)
      .def_readwrite("newton", &lsvi::RunSpec::newton);

  py::class_<lsvi::ErrorSample>(m, "ErrorSample")
      .def_readonly("t", &lsvi::ErrorSample::t)
      .def_readonly("error", &lsvi::ErrorSample::error);
  m.def("error_trace", &lsvi::error_trace, py::arg("trajectory"), py::arg("exact"));
  m.def("max_abs_error", &lsvi::max_abs_error, py::arg("trace"));

  py::class_<lsvi::RunResult>(m, "RunResult")
      .def_readonly("trajectory", &lsvi::RunResult::trajectory)
      .def_readonly("exact_values", &lsvi::RunResult::exact_values)
      .def_readonly("abs_errors", &lsvi::RunResult::abs_errors)
      .def_readonly("max_abs_error", &lsvi::RunResult::max_abs_error)
      .def_readonly("final_abs_error", &lsvi::RunResult::final_abs_error);
  m.def("execute", &lsvi::execute, py::arg("spec"));

  py::class_<lsvi::SweepRecord>(m, "SweepRecord")
      .def_readonly("method", &lsvi::SweepRecord::method)
      .def_readonly("h", &lsvi::SweepRecord::h)
      .def_readonly("max_abs_error", &lsvi::SweepRecord::max_abs_error)
      .def_readonly("final_abs_error", &lsvi::SweepRecord::final_abs_error)
      .def_readonly("steps", &lsvi::SweepRecord::steps);

  py::class_<lsvi::SweepSpec>(m, "SweepSpec")
      .def(py::init([](lsvi::ProblemKind problem, std::vector<lsvi::MethodKind> methods,
                       std::vector<double> step_sizes, double t_end, double alpha,
                       double beta, double gamma, lsvi::NewtonConfig newton) {
             lsvi::SweepSpec spec;
             spec.problem = problem;
             spec.methods = std::move(methods);
             spec.step_sizes = std::move(step_sizes);
             spec.t_end = t_end;
             spec.alpha = alpha;
             spec.beta = beta;
             spec.gamma = gamma;
             spec.newton = newton;
             return spec;
           }),
           py::arg("problem"), py::arg("methods"), py::arg("step_sizes"),
           py::arg("t_end"), py::arg("alpha") = 0.0, py::arg("beta") = 1.0,
           py::arg("gamma") = 2.0, py::arg("newton") = lsvi::NewtonConfig{});

  py::class_<lsvi::SweepOutcome>(m, "SweepOutcome")
      .def_readonly("records", &lsvi::SweepOutcome::records)
      .def_readonly("failed_cells", &lsvi::SweepOutcome::failed_cells);
  m.def("sweep", &lsvi::sweep, py::arg("spec"));

  m.def("steps_for", &lsvi::steps_for, py::arg("t_end"), py::arg("h"));
  m.def("trajectory_csv", [](const lsvi::RunResult& result) {
    std::ostringstream out;
    lsvi::write_trajectory_csv(out, result);
    return out.str();
  });
  m.def("sweep_csv", [](const std::vector<lsvi::SweepRecord>& records) {
    std::ostringstream out;
    lsvi::write_sweep_csv(out, records);
    return out.str();
  });

  m.attr("__version__") = "0.1.0";
}
