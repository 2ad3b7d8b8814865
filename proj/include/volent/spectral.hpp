#pragma once

#include <Eigen/Dense>

#include "volent/graph.hpp"

namespace volent {

/// A(s) = Diag(e^{-s L(e_i)}) M, where M is the adjacency matrix of the
/// reduced line graph: M_ij = 1 iff e_i e_j is a reduced two-edge path.
/// Edge ordering is declaration order, + before -.
struct TransferMatrix {
  Eigen::MatrixXd A;
  Eigen::MatrixXd M;
  double s = 0.0;
};

TransferMatrix transfer_matrix(const Graph& g, const MetricStructure& m, double s);

struct SpectralOptions {
  double tol = 1e-12;
  int max_iterations = 0;  // 0 -> 100 * n^2
};

struct SpectralData {
  double radius = 0.0;
  Eigen::VectorXd right;  // positive, unit Euclidean norm
  Eigen::VectorXd left;   // positive, scaled so left . right = 1
  double right_residual = 0.0;  // max_i |(A Y)_i - r Y_i|
  double left_residual = 0.0;
  int iterations = 0;
};

/// Perron-Frobenius data for a nonnegative irreducible matrix via power
/// iteration on A + I (the shift makes an imprimitive A primitive; the
/// eigenvectors are unchanged).  Deterministic: starts from all-ones.
SpectralData spectral_radius(const Eigen::MatrixXd& A, const SpectralOptions& opts = {});

/// Spectral radius only; skips the left eigenvector.
double perron_radius(const Eigen::MatrixXd& A, const SpectralOptions& opts = {});

/// Spectral radius of A(s), i.e. the function whose unique root of
/// phi(s) = 1 is the volume entropy.
double phi(const Graph& g, const MetricStructure& m, double s,
           const SpectralOptions& opts = {});

}  // namespace volent
