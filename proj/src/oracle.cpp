#include "volent/oracle.hpp"

#include <cmath>

#include "volent/rng.hpp"

namespace volent {

namespace {

void require_positive(const MetricStructure& m) {
  if (m.cls != MetricClass::Metric && m.cls != MetricClass::QuasiMetric) {
    throw Error(ErrorKind::DomainError, "growth counting needs positive lengths");
  }
}

// counts extensions of the path ending with `last`, remaining budget in *budget
void count_within(const Graph& g, const MetricStructure& m, EdgeIndex last,
                  double remaining, long long* count, long long budget) {
  for (EdgeIndex f : g.successors(last)) {
    if (m.lengths[f] > remaining) continue;
    if (++*count > budget) {
      throw Error(ErrorKind::BudgetExceeded, "path budget exceeded");
    }
    count_within(g, m, f, remaining - m.lengths[f], count, budget);
  }
}

}  // namespace

long long growth_count(const Graph& g, const MetricStructure& m, double R,
                       VertexIndex origin, long long path_budget) {
  require_positive(m);
  if (R <= 0.0) {
    throw Error(ErrorKind::DomainError, "R must be > 0");
  }
  long long count = 0;
  for (EdgeIndex e : g.out_edges(origin)) {
    if (m.lengths[e] > R) continue;
    if (++count > path_budget) {
      throw Error(ErrorKind::BudgetExceeded, "path budget exceeded");
    }
    count_within(g, m, e, R - m.lengths[e], &count, path_budget);
  }
  return count;
}

GrowthEstimate estimate_entropy_growth(const Graph& g, const MetricStructure& m,
                                       const std::vector<double>& r_grid,
                                       VertexIndex origin, long long path_budget) {
  if (r_grid.size() < 4) {
    throw Error(ErrorKind::DomainError, "need at least 4 grid points");
  }
  for (std::size_t i = 1; i < r_grid.size(); ++i) {
    if (r_grid[i] <= r_grid[i - 1]) {
      throw Error(ErrorKind::DomainError, "R grid must be strictly increasing");
    }
  }
  GrowthEstimate est;
  est.path_budget = path_budget;
  for (double R : r_grid) {
    try {
      est.samples.emplace_back(R, growth_count(g, m, R, origin, path_budget));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::BudgetExceeded) throw;
      est.truncated = true;
      break;
    }
  }
  if (est.samples.size() < 4) {
    throw Error(ErrorKind::BudgetExceeded,
                "fewer than 4 grid points fit within the path budget");
  }
  // least-squares slope of log N vs R over the largest half of the grid
  std::size_t start = est.samples.size() / 2;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  double count = 0.0;
  for (std::size_t i = start; i < est.samples.size(); ++i) {
    double x = est.samples[i].first;
    double y = std::log(static_cast<double>(est.samples[i].second));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    count += 1.0;
  }
  est.h_hat = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return est;
}

double poincare_partial(const Graph& g, const MetricStructure& m, double s,
                        int max_edges, VertexIndex basepoint,
                        long long path_budget) {
  if (s <= 0.0) {
    throw Error(ErrorKind::DomainError, "s must be > 0");
  }
  if (max_edges == 0) return 1.0;
  double sum = 1.0;  // identity term
  long long visited = 0;
  for_each_reduced_path(g, basepoint, max_edges,
                        [&](const std::vector<EdgeIndex>& edges) {
    if (++visited > path_budget) {
      throw Error(ErrorKind::BudgetExceeded, "path budget exceeded");
    }
    if (g.edge(edges.back()).terminus != basepoint) return;
    double length = 0.0;
    for (EdgeIndex e : edges) length += m.lengths[e];
    sum += std::exp(-s * length);
  });
  return sum;
}

WalkStats nbrw_simulate(const Graph& g, int steps, int trials, std::uint64_t seed,
                        VertexIndex base_vertex) {
  if (steps < 1 || trials < 1) {
    throw Error(ErrorKind::DomainError, "steps and trials must be >= 1");
  }
  std::vector<long long> counts(g.oriented_count(), 0);
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(SplitMix64::stream_seed(seed, static_cast<std::uint64_t>(t)));
    const auto& starts = g.out_edges(base_vertex);
    EdgeIndex e = starts[rng.next_below(starts.size())];
    ++counts[e];
    for (int i = 1; i < steps; ++i) {
      const auto& succ = g.successors(e);
      e = succ[rng.next_below(succ.size())];
      ++counts[e];
    }
  }
  WalkStats stats;
  stats.steps = steps;
  stats.trials = trials;
  stats.seed = seed;
  stats.edge_frequency.resize(g.oriented_count());
  const double total = static_cast<double>(steps) * trials;
  for (int i = 0; i < g.oriented_count(); ++i) {
    stats.edge_frequency[i] = counts[i] / total;
  }
  return stats;
}

}  // namespace volent
