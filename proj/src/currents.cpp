#include "volent/currents.hpp"

#include <cmath>

namespace volent {

namespace {

double successor_weight_sum(const Graph& g, const EntropySolution& sol, EdgeIndex e) {
  double sum = 0.0;
  for (EdgeIndex f : g.successors(e)) sum += sol.w(f);
  return sum;
}

double measure_of_label(const Graph& g, const EntropySolution& sol,
                        const std::vector<EdgeIndex>& label) {
  double length = 0.0;
  for (EdgeIndex e : label) length += sol.lengths[e];
  double in_sum = successor_weight_sum(g, sol, g.inverse(label.front()));
  double out_sum = successor_weight_sum(g, sol, label.back());
  return std::exp(-sol.h * length) * in_sum * out_sum;
}

}  // namespace

double cylinder_measure(const Graph& g, const EntropySolution& sol,
                        const ReducedPath& path) {
  if (!sol.symmetric) {
    throw Error(ErrorKind::AsymmetricLengths,
                "currents are defined for symmetric length structures only");
  }
  if (static_cast<int>(sol.lengths.size()) != g.oriented_count()) {
    throw Error(ErrorKind::Mismatch, "solution does not match graph");
  }
  return measure_of_label(g, sol, path.edges);
}

CurrentTable current_coordinates(const Graph& g, const EntropySolution& sol,
                                 int max_edges, std::size_t max_entries) {
  if (!sol.symmetric) {
    throw Error(ErrorKind::AsymmetricLengths,
                "currents are defined for symmetric length structures only");
  }
  if (max_edges < 1) {
    throw Error(ErrorKind::DomainError, "max_edges must be >= 1");
  }
  CurrentTable table;
  table.max_edges = max_edges;
  table.edge_count = g.oriented_count();
  for_each_reduced_path(g, max_edges, [&](const std::vector<EdgeIndex>& label) {
    if (table.entries.size() >= max_entries) {
      throw Error(ErrorKind::BudgetExceeded,
                  "current table exceeds " + std::to_string(max_entries) + " entries");
    }
    CurrentEntry entry;
    entry.label = label;
    entry.raw = measure_of_label(g, sol, label);
    table.entries.push_back(std::move(entry));
    if (label.size() == 1) table.single_edge_sum += table.entries.back().raw;
  });
  for (CurrentEntry& e : table.entries) {
    e.projective = e.raw / table.single_edge_sum;
  }
  return table;
}

bool projectively_distinct(const CurrentTable& t1, const CurrentTable& t2, double tol) {
  if (t1.edge_count != t2.edge_count || t1.max_edges != t2.max_edges ||
      t1.entries.size() != t2.entries.size()) {
    throw Error(ErrorKind::Mismatch, "tables are over different graphs or horizons");
  }
  for (std::size_t i = 0; i < t1.entries.size(); ++i) {
    if (t1.entries[i].label != t2.entries[i].label) {
      throw Error(ErrorKind::Mismatch, "tables enumerate different labels");
    }
    double a = t1.entries[i].projective;
    double b = t2.entries[i].projective;
    if (std::abs(a - b) > tol * std::max(std::abs(a), std::abs(b))) return true;
  }
  return false;
}

}  // namespace volent
