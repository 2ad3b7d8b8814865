#pragma once

#include <cstddef>
#include <vector>

#include "volent/entropy.hpp"
#include "volent/graph.hpp"

namespace volent {

/// nu(Cyl(gamma)) = e^{-h L(gamma)} (sum_{e in b(e')} w_e)(sum_{e in b(e'')} w_e),
/// where (e')^{-1} is the first edge of gamma and e'' its last edge.
/// Rejects asymmetric length structures.
double cylinder_measure(const Graph& g, const EntropySolution& sol,
                        const ReducedPath& path);

struct CurrentEntry {
  std::vector<EdgeIndex> label;
  double raw = 0.0;
  double projective = 0.0;  // raw / (sum over single-edge cylinders)
};

struct CurrentTable {
  std::vector<CurrentEntry> entries;  // deterministic path order
  int max_edges = 0;
  int edge_count = 0;  // oriented edges of the underlying graph
  double single_edge_sum = 0.0;
};

CurrentTable current_coordinates(const Graph& g, const EntropySolution& sol,
                                 int max_edges, std::size_t max_entries = 1000000);

/// True iff the projective coordinate vectors differ somewhere by more
/// than tol relative.  Tables must come from the same graph and horizon.
bool projectively_distinct(const CurrentTable& t1, const CurrentTable& t2, double tol);

}  // namespace volent
