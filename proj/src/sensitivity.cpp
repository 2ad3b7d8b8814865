#include "volent/sensitivity.hpp"

#include <cmath>
#include <limits>

namespace volent {

Eigen::MatrixXd jacobian(const Graph& g, const MetricStructure& m,
                         const EntropySolution& sol) {
  const int n = g.oriented_count();
  TransferMatrix t = transfer_matrix(g, m, sol.h);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n + 1, n + 1);
  J.topLeftCorner(n, n) = t.A - Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, n) = -m.lengths[i] * sol.Y(i);
    J(n, i) = 2.0 * sol.Y(i);
  }
  return J;
}

SensitivityResult entropy_gradient(const Graph& g, const MetricStructure& m,
                                   const EntropyOptions& opts) {
  if (m.cls != MetricClass::Metric && m.cls != MetricClass::QuasiMetric) {
    throw Error(ErrorKind::SingularStructure,
                "gradient needs a positive length structure");
  }
  const int n = g.oriented_count();
  SensitivityResult r;
  r.solution = volume_entropy(g, m, opts);
  r.jacobian = jacobian(g, m, r.solution);

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  rhs(n) = 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(r.jacobian.transpose());
  Eigen::VectorXd u = lu.solve(rhs);
  r.solve_residual = (r.jacobian.transpose() * u - rhs).cwiseAbs().maxCoeff();
  if (!u.allFinite() || r.solve_residual > 1e-8) {
    throw Error(ErrorKind::SolveFailure,
                "Jacobian solve failed; residual " + std::to_string(r.solve_residual));
  }

  const double h = r.solution.h;
  r.b = u.head(n);
  r.gradient.resize(n);
  double euler = 0.0;
  for (int i = 0; i < n; ++i) {
    // dF_i/dL_i = -s e^{-s L_i} (M Y)_i = -s y_i at the solution, so the
    // implicit derivative is h b_i y_i
    r.gradient(i) = h * r.b(i) * r.solution.Y(i);
    euler += m.lengths[i] * r.gradient(i);
  }
  r.euler_residual = std::abs(euler + h) / h;
  return r;
}

double critical_point_residual(const Graph& g, const MetricStructure& m,
                               const EntropyOptions& opts) {
  const int degree = g.regular_degree();  // throws on non-regular input
  (void)degree;
  if (m.cls != MetricClass::Metric && m.cls != MetricClass::QuasiMetric) {
    throw Error(ErrorKind::SingularStructure,
                "critical point residual needs positive lengths");
  }
  EntropySolution sol = volume_entropy(g, m, opts);
  const int n = g.oriented_count();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = sol.Z(i) * std::exp(-sol.h * m.lengths[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    mean += v;
  }
  mean /= n;
  return (hi - lo) / mean;
}

}  // namespace volent
