#pragma once

#include <Eigen/Dense>

#include "volent/graph.hpp"
#include "volent/spectral.hpp"

namespace volent {

struct EntropyOptions {
  double tol = 1e-12;  // on |phi(s) - 1|
  SpectralOptions spectral{};
  int max_doublings = 60;
};

struct EntropySolution {
  double h = 0.0;
  Eigen::VectorXd Y;  // right Perron vector of A(h), unit norm
  Eigen::VectorXd Z;  // left Perron vector, Z . Y = 1
  Eigen::VectorXd w;  // Patterson-Sullivan edge weights (= Y by default)
  std::vector<double> lengths;  // copy of the oriented lengths
  bool symmetric = false;
  double phi_residual = 0.0;     // |phi(h) - 1|
  double system_residual = 0.0;  // max_e |w_e - e^{-h L_e} sum_{b(e)} w| / w_e
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int bisections = 0;
};

/// Volume entropy h as the unique root of phi(s) = 1, found by doubling
/// bracket expansion, bisection, and a secant polish.  The weights w
/// solve w_e = e^{-h L(e)} sum_{e' in b(e)} w_{e'} up to system_residual.
EntropySolution volume_entropy(const Graph& g, const MetricStructure& m,
                               const EntropyOptions& opts = {});

/// m(k-1)/(m-2) * log(m-1): entropy of the uniform volume-one structure
/// on an m-regular graph of rank k.
double uniform_entropy_closed_form(int m, int k);

/// Independent scalar solve of 4 = (e^{sx} - 1)(e^{sy} - 1) with y = 1-x:
/// the entropy of the two-loop rose with loop lengths (x, 1-x).  Serves
/// as the oracle for volume_entropy on that graph.
double rose2_entropy(double x);

double ps_cylinder_weight(const EntropySolution& sol, EdgeIndex e);

/// Alternate scaling with sum of weights over oriented edges equal to 1.
std::vector<double> weights_sum_normalized(const EntropySolution& sol);

}  // namespace volent
