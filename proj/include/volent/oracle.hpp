#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "volent/graph.hpp"

namespace volent {

/// Number of reduced paths from `origin` with metric length <= R,
/// by depth-first enumeration with length pruning.
long long growth_count(const Graph& g, const MetricStructure& m, double R,
                       VertexIndex origin, long long path_budget = 10000000);

struct GrowthEstimate {
  std::vector<std::pair<double, long long>> samples;  // (R, N(R))
  double h_hat = 0.0;  // slope of log N(R) vs R over the largest half
  long long path_budget = 0;
  bool truncated = false;  // budget cut the grid short
};

/// Growth-rate estimate of volume entropy: independent of the transfer
/// matrix machinery, used as an oracle for the solver.
GrowthEstimate estimate_entropy_growth(const Graph& g, const MetricStructure& m,
                                       const std::vector<double>& r_grid,
                                       VertexIndex origin = 0,
                                       long long path_budget = 10000000);

/// Truncated Poincare series: 1 + sum of e^{-s L(w)} over reduced loops w
/// at the basepoint with at most max_edges edges (orbit points correspond
/// to reduced loops).
double poincare_partial(const Graph& g, const MetricStructure& m, double s,
                        int max_edges, VertexIndex basepoint,
                        long long path_budget = 10000000);

struct WalkStats {
  std::vector<double> edge_frequency;  // per oriented edge, sums to 1
  int steps = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Simple non-backtracking random walk: initial edge uniform among edges
/// leaving the base vertex, each step uniform over b(e).  Trial t uses
/// the SplitMix64 stream derived from (seed, t), so results are
/// bit-reproducible.
WalkStats nbrw_simulate(const Graph& g, int steps, int trials, std::uint64_t seed,
                        VertexIndex base_vertex = 0);

}  // namespace volent
