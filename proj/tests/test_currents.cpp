#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "volent/currents.hpp"
#include "volent/entropy.hpp"
#include "volent/graph.hpp"
#include "volent/rng.hpp"

using namespace volent;

namespace {

std::vector<double> random_volume_one(const Graph& g, SplitMix64& rng) {
  std::vector<double> L(g.non_oriented_count());
  double sum = 0.0;
  for (double& x : L) {
    x = 0.1 + rng.next_unit();
    sum += x;
  }
  for (double& x : L) x /= sum;
  return L;
}

// relative difference with an absolute fallback near zero
double rel(double a, double b) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("uniform theta cylinder values are 1/3 and 1/6") {
  ParsedGraph p = catalog("theta");
  EntropySolution sol = volume_entropy(p.graph, p.metric);
  for (EdgeIndex e = 0; e < 6; ++e) {
    ReducedPath single = make_path(p.graph, {e});
    CHECK(cylinder_measure(p.graph, sol, single) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  }
  ReducedPath two = make_path(p.graph, {0, 3});  // a+ b-
  CHECK(cylinder_measure(p.graph, sol, two) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("single-edge cylinders satisfy nu(Cyl(e)) = e^{hL} w_e w_{e^-1}") {
  SplitMix64 rng(3111);
  for (const char* name : {"theta", "dumbbell", "rose2", "K4"}) {
    ParsedGraph p = catalog(name);
    for (int trial = 0; trial < 3; ++trial) {
      MetricStructure m =
          symmetric_metric(p.graph, random_volume_one(p.graph, rng));
      EntropySolution sol = volume_entropy(p.graph, m);
      for (EdgeIndex e = 0; e < p.graph.oriented_count(); ++e) {
        double lhs = cylinder_measure(p.graph, sol, make_path(p.graph, {e}));
        double rhs = std::exp(sol.h * m.lengths[e]) * sol.w(e) *
                     sol.w(p.graph.inverse(e));
        CHECK(rel(lhs, rhs) <= 1e-10);
      }
    }
  }
}

TEST_CASE("prefix and suffix additivity, and flip invariance") {
  SplitMix64 rng(424242);
  for (const char* name : {"theta", "dumbbell", "rose2", "K4", "rose3"}) {
    ParsedGraph p = catalog(name);
    std::vector<MetricStructure> metrics{p.metric};
    for (int trial = 0; trial < 5; ++trial) {
      metrics.push_back(
          symmetric_metric(p.graph, random_volume_one(p.graph, rng)));
    }
    for (const MetricStructure& m : metrics) {
      EntropySolution sol = volume_entropy(p.graph, m);
      for_each_reduced_path(p.graph, 3, [&](const std::vector<EdgeIndex>& label) {
        ReducedPath path = make_path(p.graph, label);
        double nu = cylinder_measure(p.graph, sol, path);

        double suffix_sum = 0.0;
        for (EdgeIndex f : p.graph.successors(label.back())) {
          std::vector<EdgeIndex> longer = label;
          longer.push_back(f);
          suffix_sum += cylinder_measure(p.graph, sol, make_path(p.graph, longer));
        }
        CHECK(rel(nu, suffix_sum) <= 1e-10);

        double prefix_sum = 0.0;
        for (EdgeIndex f : p.graph.predecessors(label.front())) {
          std::vector<EdgeIndex> longer;
          longer.push_back(f);
          longer.insert(longer.end(), label.begin(), label.end());
          prefix_sum += cylinder_measure(p.graph, sol, make_path(p.graph, longer));
        }
        CHECK(rel(nu, prefix_sum) <= 1e-10);

        std::vector<EdgeIndex> flipped;
        for (auto it = label.rbegin(); it != label.rend(); ++it) {
          flipped.push_back(p.graph.inverse(*it));
        }
        double nu_flip = cylinder_measure(p.graph, sol, make_path(p.graph, flipped));
        CHECK(rel(nu, nu_flip) <= 1e-10);
      });
    }
  }
}

TEST_CASE("current table bookkeeping") {
  ParsedGraph p = catalog("theta");
  EntropySolution sol = volume_entropy(p.graph, p.metric);
  CurrentTable t = current_coordinates(p.graph, sol, 2);
  CHECK(t.edge_count == 6);
  CHECK(t.max_edges == 2);
  // 6 single-edge labels + 12 two-edge labels
  CHECK(t.entries.size() == 18);
  CHECK(t.single_edge_sum == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(t.entries[0].projective == doctest::Approx(1.0 / 6.0).epsilon(1e-10));

  CHECK_THROWS_AS(current_coordinates(p.graph, sol, 2, 10), Error);
  CHECK_THROWS_AS(current_coordinates(p.graph, sol, 0), Error);
}

TEST_CASE("projective comparison separates distinct structures") {
  ParsedGraph p = catalog("theta");
  EntropySolution uni = volume_entropy(p.graph, p.metric);
  CurrentTable t_uni = current_coordinates(p.graph, uni, 3);
  CHECK(!projectively_distinct(t_uni, t_uni, 1e-9));

  MetricStructure other = symmetric_metric(p.graph, {0.4, 0.35, 0.25});
  CurrentTable t_other =
      current_coordinates(p.graph, volume_entropy(p.graph, other), 3);
  CHECK(projectively_distinct(t_uni, t_other, 1e-9));

  CurrentTable t_short = current_coordinates(p.graph, uni, 2);
  CHECK_THROWS_AS(projectively_distinct(t_uni, t_short, 1e-9), Error);
}

TEST_CASE("asymmetric structures are rejected") {
  ParsedGraph p = catalog("theta");
  MetricStructure quasi =
      classify_metric(p.graph, {0.2, 0.4, 0.3, 0.3, 0.4, 0.4});
  EntropySolution sol = volume_entropy(p.graph, quasi);
  CHECK_THROWS_AS(cylinder_measure(p.graph, sol, make_path(p.graph, {0})), Error);
  CHECK_THROWS_AS(current_coordinates(p.graph, sol, 2), Error);
}

TEST_CASE("currents vary continuously toward an edge collapse") {
  ParsedGraph p = catalog("theta");
  MetricStructure limit = symmetric_metric(p.graph, {0.0, 0.5, 0.5});
  CurrentTable t_limit =
      current_coordinates(p.graph, volume_entropy(p.graph, limit), 3);

  double prev_gap = -1.0;
  for (double eps : {0.1, 0.01, 0.001}) {
    MetricStructure m =
        symmetric_metric(p.graph, {eps, (1 - eps) / 2, (1 - eps) / 2});
    CurrentTable t = current_coordinates(p.graph, volume_entropy(p.graph, m), 3);
    double gap = 0.0;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      gap = std::max(gap,
                     std::abs(t.entries[i].projective - t_limit.entries[i].projective));
    }
    if (prev_gap >= 0.0) CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 0.01);
}
