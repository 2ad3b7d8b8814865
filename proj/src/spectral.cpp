#include "volent/spectral.hpp"

#include <cmath>
#include <limits>

namespace volent {

TransferMatrix transfer_matrix(const Graph& g, const MetricStructure& m, double s) {
  if (!m.usable()) {
    throw Error(ErrorKind::SingularStructure,
                "transfer matrix needs a non-singular structure");
  }
  if (s < 0.0) {
    throw Error(ErrorKind::DomainError, "s must be >= 0");
  }
  const int n = g.oriented_count();
  TransferMatrix t;
  t.s = s;
  t.M = Eigen::MatrixXd::Zero(n, n);
  for (EdgeIndex e = 0; e < n; ++e) {
    for (EdgeIndex f : g.successors(e)) t.M(e, f) = 1.0;
  }
  t.A = t.M;
  for (EdgeIndex e = 0; e < n; ++e) {
    t.A.row(e) *= std::exp(-s * m.lengths[e]);
  }
  return t;
}

namespace {

struct PowerResult {
  double radius;
  Eigen::VectorXd vec;  // unit Euclidean norm, positive
  double residual;
  int iterations;
};

// Power iteration on B = A + I with Collatz-Wielandt stopping: for a
// positive iterate x, r(B) lies between min_i and max_i of (Bx)_i / x_i,
// so the interval width certifies the eigen-residual.
PowerResult power_iterate(const Eigen::MatrixXd& A, const SpectralOptions& opts) {
  const int n = static_cast<int>(A.rows());
  const int max_iter =
      opts.max_iterations > 0 ? opts.max_iterations : 100 * n * n;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(double(n));
  double radius = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::VectorXd y = A * x + x;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
      double ratio = y(i) / x(i);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= opts.tol) {
      radius = 0.5 * (lo + hi) - 1.0;
      double resid = (A * x - radius * x).cwiseAbs().maxCoeff();
      return {radius, x, resid, it};
    }
    x = y / y.norm();
  }
  throw Error(ErrorKind::IterationLimit,
              "power iteration did not converge in " + std::to_string(max_iter) +
                  " iterations");
}

}  // namespace

SpectralData spectral_radius(const Eigen::MatrixXd& A, const SpectralOptions& opts) {
  PowerResult right = power_iterate(A, opts);
  PowerResult left = power_iterate(A.transpose(), opts);
  SpectralData out;
  out.radius = right.radius;
  out.right = right.vec;
  out.left = left.vec / left.vec.dot(right.vec);
  out.right_residual = right.residual;
  out.left_residual =
      (A.transpose() * out.left - out.radius * out.left).cwiseAbs().maxCoeff();
  out.iterations = right.iterations + left.iterations;
  return out;
}

double perron_radius(const Eigen::MatrixXd& A, const SpectralOptions& opts) {
  return power_iterate(A, opts).radius;
}

double phi(const Graph& g, const MetricStructure& m, double s,
           const SpectralOptions& opts) {
  return perron_radius(transfer_matrix(g, m, s).A, opts);
}

}  // namespace volent
