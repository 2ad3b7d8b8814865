#include "volent/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "volent/rng.hpp"
#include "volent/sensitivity.hpp"

namespace volent {

std::vector<double> project_simplex(std::vector<double> v, double floor) {
  // shift by the floor and project onto the scaled standard simplex
  const int n = static_cast<int>(v.size());
  const double target = 1.0 - n * floor;
  if (target <= 0.0) {
    throw Error(ErrorKind::DomainError, "floor too large for simplex projection");
  }
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) u[i] = v[i] - floor;
  std::vector<double> sorted = u;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumsum = 0.0;
  double theta = 0.0;
  for (int j = 0; j < n; ++j) {
    cumsum += sorted[j];
    double t = (cumsum - target) / (j + 1);
    if (j + 1 == n || sorted[j + 1] <= t) {
      theta = t;
      break;
    }
  }
  for (int i = 0; i < n; ++i) v[i] = std::max(u[i] - theta, 0.0) + floor;
  return v;
}

namespace {

std::vector<double> fold_gradient(const Eigen::VectorXd& oriented) {
  std::vector<double> g(oriented.size() / 2);
  for (std::size_t j = 0; j < g.size(); ++j) {
    g[j] = oriented(2 * j) + oriented(2 * j + 1);
  }
  return g;
}

}  // namespace

OptimizeResult minimize_entropy(const Graph& g, const MetricStructure& init,
                                const OptimizeOptions& opts) {
  if (init.cls != MetricClass::Metric) {
    throw Error(ErrorKind::DomainError,
                "minimization starts from a positive symmetric metric structure");
  }
  if (std::abs(init.volume - 1.0) > 1e-9) {
    throw Error(ErrorKind::DomainError, "initial structure must have volume one");
  }
  const int N = g.non_oriented_count();
  std::vector<double> L(N);
  for (int j = 0; j < N; ++j) L[j] = init.lengths[2 * j];
  L = project_simplex(std::move(L), opts.floor);

  OptimizeResult res;
  auto grad_at = [&](const std::vector<double>& x) {
    return entropy_gradient(g, symmetric_metric(g, x), opts.entropy);
  };
  auto entropy_at = [&](const std::vector<double>& x) {
    return volume_entropy(g, symmetric_metric(g, x), opts.entropy).h;
  };

  SensitivityResult sr = grad_at(L);
  double h = sr.solution.h;
  for (int it = 0; it < opts.max_iterations; ++it) {
    std::vector<double> gvec = fold_gradient(sr.gradient);

    // projected-gradient norm: ||L - P(L - g)||_inf
    std::vector<double> probe(N);
    for (int j = 0; j < N; ++j) probe[j] = L[j] - gvec[j];
    probe = project_simplex(std::move(probe), opts.floor);
    double pgnorm = 0.0;
    for (int j = 0; j < N; ++j) pgnorm = std::max(pgnorm, std::abs(L[j] - probe[j]));
    if (opts.record_trajectory) res.trajectory.emplace_back(h, pgnorm);
    if (pgnorm <= opts.grad_tol) {
      res.converged = true;
      res.iterations = it;
      break;
    }

    double step = opts.initial_step;
    bool accepted = false;
    while (step > 1e-16) {
      std::vector<double> trial(N);
      for (int j = 0; j < N; ++j) trial[j] = L[j] - step * gvec[j];
      trial = project_simplex(std::move(trial), opts.floor);
      double directional = 0.0;
      for (int j = 0; j < N; ++j) directional += gvec[j] * (trial[j] - L[j]);
      double h_trial = entropy_at(trial);
      if (h_trial <= h + opts.armijo * directional) {
        L = std::move(trial);
        h = h_trial;
        accepted = true;
        break;
      }
      step *= opts.shrink;
    }
    res.iterations = it + 1;
    if (!accepted) {
      // line search stalled: the entropy solver noise dominates the attainable
      // decrease.  Near the minimizer that is expected, so still report
      // convergence when the projected gradient is already small.
      res.converged = pgnorm <= opts.stall_tol;
      break;
    }
    for (int j = 0; j < N; ++j) {
      if (L[j] <= opts.floor * (1.0 + 1e-6)) res.hit_boundary = true;
    }
    sr = grad_at(L);
    h = sr.solution.h;
  }
  res.lengths = L;
  res.h = h;
  return res;
}

ConvexityReport convexity_probe(const Graph& g, int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorKind::DomainError, "trials must be >= 1");
  }
  const int N = g.non_oriented_count();
  ConvexityReport report;
  report.trials = trials;
  SplitMix64 rng(seed);
  auto sample = [&]() {
    std::vector<double> L(N);
    for (int j = 0; j < N; ++j) L[j] = 0.1 + 1.9 * rng.next_unit();
    return L;
  };
  for (int t = 0; t < trials; ++t) {
    std::vector<double> a = sample();
    std::vector<double> b = sample();
    double lam = 0.05 + 0.9 * rng.next_unit();
    std::vector<double> mix(N);
    for (int j = 0; j < N; ++j) mix[j] = lam * a[j] + (1.0 - lam) * b[j];
    double ha = volume_entropy(g, symmetric_metric(g, a)).h;
    double hb = volume_entropy(g, symmetric_metric(g, b)).h;
    double hm = volume_entropy(g, symmetric_metric(g, mix)).h;
    double violation = hm - (lam * ha + (1.0 - lam) * hb);
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > 1e-9) ++report.violations;
  }
  report.max_violation = std::max(report.max_violation, 0.0);
  return report;
}

std::vector<std::pair<double, double>> sup_entropy_demo(const std::vector<double>& xs) {
  ParsedGraph rose = catalog("rose2");
  std::vector<std::pair<double, double>> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(x > 0.0 && x < 1.0)) {
      throw Error(ErrorKind::DomainError, "x must lie in (0, 1)");
    }
    MetricStructure m = symmetric_metric(rose.graph, {x, 1.0 - x});
    out.emplace_back(x, volume_entropy(rose.graph, m).h);
  }
  return out;
}

}  // namespace volent
