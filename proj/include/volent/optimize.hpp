#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "volent/entropy.hpp"
#include "volent/graph.hpp"

namespace volent {

struct OptimizeOptions {
  double initial_step = 0.1;
  double shrink = 0.5;
  double armijo = 1e-4;
  double grad_tol = 1e-6;   // on the projected-gradient norm
  double stall_tol = 1e-5;  // stalled line search still counts as converged below this
  int max_iterations = 20000;
  double floor = 1e-9;  // keeps iterates in the open simplex
  bool record_trajectory = true;
  EntropyOptions entropy{};
};

struct OptimizeResult {
  std::vector<double> lengths;  // per non-oriented edge, sums to 1
  double h = 0.0;
  int iterations = 0;
  bool converged = false;
  bool hit_boundary = false;
  std::vector<std::pair<double, double>> trajectory;  // (h, pg-norm)
};

/// Projected gradient descent for h over symmetric volume-one structures:
/// Armijo backtracking line search with Euclidean projection onto
/// { L >= floor, sum L = 1 }.  h is non-increasing along accepted steps.
OptimizeResult minimize_entropy(const Graph& g, const MetricStructure& init,
                                const OptimizeOptions& opts = {});

struct ConvexityReport {
  int trials = 0;
  int violations = 0;
  double max_violation = 0.0;  // of h(mix) - (lam h1 + (1-lam) h2), clipped at 0
};

/// Samples random pairs of positive metric structures (not volume-one)
/// and checks h(lam L1 + (1-lam) L2) <= lam h(L1) + (1-lam) h(L2) + 1e-9.
ConvexityReport convexity_probe(const Graph& g, int trials, std::uint64_t seed);

/// Entropies of the two-loop rose with lengths (x, 1-x) for each x; grows
/// without bound as x -> 0.
std::vector<std::pair<double, double>> sup_entropy_demo(const std::vector<double>& xs);

/// Euclidean projection onto { x_i >= floor, sum x = 1 }.
std::vector<double> project_simplex(std::vector<double> v, double floor);

}  // namespace volent
