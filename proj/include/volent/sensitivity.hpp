#pragma once

#include <Eigen/Dense>

#include "volent/entropy.hpp"
#include "volent/graph.hpp"

namespace volent {

struct SensitivityResult {
  Eigen::MatrixXd jacobian;   // (n+1) x (n+1)
  Eigen::VectorXd b;          // first n entries of the last row of J^{-1}
  Eigen::VectorXd gradient;   // dh/dL_i per oriented edge, = h b_i y_i
  double solve_residual = 0.0;  // ||J^T u - e_{n+1}||_inf
  double euler_residual = 0.0;  // |sum_i L_i dh/dL_i + h| / h
  EntropySolution solution;
};

/// Jacobian of the system  e^{-s L_i}(M Y)_i - y_i = 0 (i = 1..n),
/// |Y|^2 - 1 = 0, in the variables (y_1..y_n, s): blocks
/// [A(h) - I | -L_i y_i ; 2 y^T | 0].
Eigen::MatrixXd jacobian(const Graph& g, const MetricStructure& m,
                         const EntropySolution& sol);

/// Exact entropy gradient via the implicit function theorem.  The last
/// row of J^{-1} is obtained from the linear solve J^T u = e_{n+1}; no
/// adjugate or determinant is formed, which also fixes all signs.
SensitivityResult entropy_gradient(const Graph& g, const MetricStructure& m,
                                   const EntropyOptions& opts = {});

/// Spread of the values z_i e^{-h L_i} (max pairwise gap over mean).
/// Zero exactly when the structure is a constrained critical point of h
/// on the volume simplex; defined for regular graphs only.
double critical_point_residual(const Graph& g, const MetricStructure& m,
                               const EntropyOptions& opts = {});

}  // namespace volent
