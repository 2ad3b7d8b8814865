#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "volent/entropy.hpp"
#include "volent/graph.hpp"
#include "volent/rng.hpp"
#include "volent/spectral.hpp"

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

}  // namespace

TEST_CASE("uniform structures on small graphs hit closed-form entropies") {
  ParsedGraph theta = catalog("theta");
  EntropySolution s = volume_entropy(theta.graph, theta.metric);
  CHECK(s.h == doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(s.phi_residual <= 1e-10);
  CHECK(s.system_residual <= 1e-9);
  CHECK(s.symmetric);
  // weights coincide with the unit-norm Perron vector: all 1/sqrt(6)
  for (int i = 0; i < 6; ++i) {
    CHECK(s.w(i) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-10));
  }

  ParsedGraph k4 = catalog("K4");
  CHECK(volume_entropy(k4.graph, k4.metric).h ==
        doctest::Approx(6.0 * std::log(2.0)).epsilon(1e-12));

  ParsedGraph bell = catalog("dumbbell");
  CHECK(volume_entropy(bell.graph, bell.metric).h ==
        doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("closed form m(k-1)/(m-2) log(m-1) matches the solver on regular graphs") {
  struct Row {
    const char* name;
    int m, k;
  };
  for (Row r : {Row{"theta", 3, 2}, Row{"K4", 3, 3}, Row{"rose2", 4, 2},
                Row{"banana(4)", 4, 3}}) {
    ParsedGraph p = catalog(r.name);
    REQUIRE(p.graph.regular_degree() == r.m);
    REQUIRE(p.graph.rank() == r.k);
    double expect = uniform_entropy_closed_form(r.m, r.k);
    CHECK(volume_entropy(p.graph, p.metric).h ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(uniform_entropy_closed_form(3, 2) ==
        doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(uniform_entropy_closed_form(4, 2) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("two-loop rose agrees with the independent scalar equation") {
  ParsedGraph rose = catalog("rose2");
  for (double x : {0.5, 0.3, 0.1, 0.01}) {
    MetricStructure m = symmetric_metric(rose.graph, {x, 1.0 - x});
    double solver = volume_entropy(rose.graph, m).h;
    double scalar = rose2_entropy(x);
    CHECK(std::abs(solver - scalar) <= 1e-8);
    // the product equation itself
    double lhs = std::expm1(scalar * x) * std::expm1(scalar * (1.0 - x));
    CHECK(lhs == doctest::Approx(4.0).epsilon(1e-9));
  }
  MetricStructure half = symmetric_metric(rose.graph, {0.5, 0.5});
  CHECK(volume_entropy(rose.graph, half).h ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));
  // entropy grows as the short loop shrinks
  CHECK(rose2_entropy(0.1) > rose2_entropy(0.3));
  CHECK(rose2_entropy(0.01) > rose2_entropy(0.1));
}

TEST_CASE("collapsing one theta edge reproduces the two-loop rose entropy") {
  ParsedGraph theta = catalog("theta");
  MetricStructure semi = symmetric_metric(theta.graph, {0.0, 0.5, 0.5});
  REQUIRE(semi.cls == MetricClass::SemiMetric);
  double h = volume_entropy(theta.graph, semi).h;
  CHECK(h == doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-9));

  // limit from positive structures
  double prev = volume_entropy(
      theta.graph, symmetric_metric(theta.graph, {0.1, 0.45, 0.45})).h;
  for (double eps : {0.01, 0.001}) {
    double cur = volume_entropy(
        theta.graph,
        symmetric_metric(theta.graph, {eps, (1 - eps) / 2, (1 - eps) / 2})).h;
    CHECK(std::abs(cur - h) < std::abs(prev - h));
    prev = cur;
  }
}

TEST_CASE("entropy obeys the scaling law h(cL) = h(L)/c") {
  SplitMix64 rng(91);
  for (const char* name : {"theta", "rose2", "dumbbell"}) {
    ParsedGraph p = catalog(name);
    std::vector<double> L = random_volume_one(p.graph, rng);
    double h = volume_entropy(p.graph, symmetric_metric(p.graph, L)).h;
    for (double c : {0.5, 2.0, 10.0}) {
      std::vector<double> scaled = L;
      for (double& x : scaled) x *= c;
      double hc = volume_entropy(p.graph, symmetric_metric(p.graph, scaled)).h;
      CHECK(std::abs(hc - h / c) / (h / c) <= 1e-10);
    }
  }
}

TEST_CASE("the root is bracketed and unique") {
  ParsedGraph p = catalog("dumbbell");
  SplitMix64 rng(7);
  std::vector<double> L = random_volume_one(p.graph, rng);
  MetricStructure m = symmetric_metric(p.graph, L);
  EntropySolution s = volume_entropy(p.graph, m);
  CHECK(s.bracket_lo < s.h);
  CHECK(s.bracket_hi > s.h);
  CHECK(phi(p.graph, m, s.h - 0.1) > 1.0);
  CHECK(phi(p.graph, m, s.h + 0.1) < 1.0);
}

TEST_CASE("entropy never drops below the regular-uniform value at volume one") {
  SplitMix64 rng(20240818);
  struct Row {
    const char* name;
    int m;
  };
  for (Row r : {Row{"theta", 3}, Row{"rose2", 4}}) {
    ParsedGraph p = catalog(r.name);
    double bound = uniform_entropy_closed_form(r.m, p.graph.rank());
    for (int t = 0; t < 10; ++t) {
      std::vector<double> L = random_volume_one(p.graph, rng);
      double h = volume_entropy(p.graph, symmetric_metric(p.graph, L)).h;
      CHECK(h >= bound - 1e-9);
    }
  }
}

TEST_CASE("quasi-metric structures are accepted, singular ones rejected") {
  ParsedGraph theta = catalog("theta");
  MetricStructure quasi =
      classify_metric(theta.graph, {0.2, 0.4, 0.3, 0.3, 0.4, 0.4});
  EntropySolution s = volume_entropy(theta.graph, quasi);
  CHECK(s.h > 0.0);
  CHECK(!s.symmetric);

  MetricStructure sing = symmetric_metric(theta.graph, {0.0, 0.0, 1.0});
  CHECK_THROWS_AS(volume_entropy(theta.graph, sing), Error);
}

TEST_CASE("weight normalizations") {
  ParsedGraph p = catalog("dumbbell");
  EntropySolution s = volume_entropy(p.graph, p.metric);
  CHECK(s.Y.norm() == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> sums = weights_sum_normalized(s);
  double total = 0.0;
  for (double w : sums) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ps_cylinder_weight(s, 0) == doctest::Approx(s.w(0)).epsilon(1e-15));
}
