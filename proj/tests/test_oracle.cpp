#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "volent/entropy.hpp"
#include "volent/graph.hpp"
#include "volent/oracle.hpp"

using namespace volent;

TEST_CASE("exact growth counts on small balls") {
  ParsedGraph theta = catalog("theta");
  CHECK(growth_count(theta.graph, theta.metric, 2.0, 0) == 189);
  CHECK(growth_count(theta.graph, theta.metric, 1.0 / 3.0, 0) == 3);
  CHECK(growth_count(theta.graph, theta.metric, 0.1, 0) == 0);

  ParsedGraph rose = catalog("rose2");
  CHECK(growth_count(rose.graph, rose.metric, 1.0, 0) == 16);
}

TEST_CASE("growth counts agree with edge-count enumeration on uniform metrics") {
  ParsedGraph p = catalog("theta");
  // radius t/3 captures exactly the paths with at most t edges
  for (int t = 1; t <= 6; ++t) {
    long long by_edges = 0;
    for_each_reduced_path(p.graph, 0, t,
                          [&](const std::vector<EdgeIndex>&) { ++by_edges; });
    CHECK(growth_count(p.graph, p.metric, t / 3.0 + 1e-12, 0) == by_edges);
  }
}

TEST_CASE("growth-rate estimates land within 5% of the solver entropy") {
  struct Row {
    const char* name;
    double edge_len;
    int max_t;
  };
  for (Row r : {Row{"theta", 1.0 / 3.0, 18}, Row{"rose2", 0.5, 12},
                Row{"K4", 1.0 / 6.0, 18}}) {
    ParsedGraph p = catalog(r.name);
    double h = volume_entropy(p.graph, p.metric).h;
    // radii between layers: counts are exact t-edge ball sizes, no boundary
    // jitter from accumulated rounding in the path lengths
    std::vector<double> grid;
    for (int t = r.max_t / 2; t <= r.max_t; ++t) {
      grid.push_back((t + 0.5) * r.edge_len);
    }
    GrowthEstimate est = estimate_entropy_growth(p.graph, p.metric, grid);
    CHECK(!est.truncated);
    CHECK(est.samples.size() == grid.size());
    CHECK(std::abs(est.h_hat - h) / h <= 0.05);
  }
}

TEST_CASE("path budget is enforced") {
  ParsedGraph p = catalog("theta");
  CHECK_THROWS_AS(growth_count(p.graph, p.metric, 5.0, 0, 100), Error);
  // ball counts: 21, 45, 93, 189, 1533, then past the 2000-path budget
  GrowthEstimate est = estimate_entropy_growth(
      p.graph, p.metric, {1.0, 4.0 / 3.0, 5.0 / 3.0, 2.0, 3.0, 4.0}, 0, 2000);
  CHECK(est.truncated);
  CHECK(est.samples.size() == 5);
  // too few grid points before or after truncation
  CHECK_THROWS_AS(estimate_entropy_growth(p.graph, p.metric, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(estimate_entropy_growth(
                      p.graph, p.metric, {1.0, 2.0, 3.0, 4.0, 5.0}, 0, 500),
                  Error);
}

TEST_CASE("truncated orbital sums flatten beyond the entropy") {
  ParsedGraph p = catalog("theta");
  double h = volume_entropy(p.graph, p.metric).h;
  CHECK(poincare_partial(p.graph, p.metric, h, 0, 0) == 1.0);

  // well above h the partial sums stabilize; below h they keep growing
  double above_8 = poincare_partial(p.graph, p.metric, 2.0 * h, 8, 0);
  double above_12 = poincare_partial(p.graph, p.metric, 2.0 * h, 12, 0);
  double below_8 = poincare_partial(p.graph, p.metric, 0.5 * h, 8, 0);
  double below_12 = poincare_partial(p.graph, p.metric, 0.5 * h, 12, 0);
  CHECK(above_12 > above_8);
  CHECK(below_12 > below_8);
  CHECK(above_12 - above_8 < 0.1);
  CHECK(below_12 - below_8 > 10.0);
}

TEST_CASE("non-backtracking walk frequencies match the stationary values") {
  // stationary frequency per oriented edge on an m-regular rank-k graph
  auto stationary = [](int m, int k) {
    return static_cast<double>(m - 2) / (2.0 * m * k - 2.0 * m);
  };
  struct Row {
    const char* name;
    int m, k;
  };
  for (Row r : {Row{"theta", 3, 2}, Row{"rose2", 4, 2}}) {
    ParsedGraph p = catalog(r.name);
    WalkStats w = nbrw_simulate(p.graph, 10000, 50, 20240819);
    double expect = stationary(r.m, r.k);
    double sigma = std::sqrt(expect * (1.0 - expect) / (10000.0 * 50.0));
    double total = 0.0;
    for (double f : w.edge_frequency) {
      CHECK(std::abs(f - expect) <= 3.0 * sigma);
      total += f;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("walk simulation is bit-reproducible") {
  ParsedGraph p = catalog("dumbbell");
  WalkStats a = nbrw_simulate(p.graph, 2000, 10, 7);
  WalkStats b = nbrw_simulate(p.graph, 2000, 10, 7);
  CHECK(a.edge_frequency == b.edge_frequency);
  WalkStats c = nbrw_simulate(p.graph, 2000, 10, 8);
  CHECK(a.edge_frequency != c.edge_frequency);
}
