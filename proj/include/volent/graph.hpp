#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace volent {

enum class ErrorKind {
  ParseSyntax,
  DuplicateEdge,
  DuplicateVertex,
  UnknownVertex,
  UnknownEdge,
  UnknownName,
  Validation,
  NegativeLength,
  MissingLength,
  SingularStructure,
  AsymmetricLengths,
  NotClosed,
  NotReduced,
  DomainError,
  BracketFailure,
  ToleranceNotReached,
  IterationLimit,
  BudgetExceeded,
  SolveFailure,
  Mismatch,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using EdgeIndex = int;
using VertexIndex = int;

struct OrientedEdge {
  std::string id;  // "<name>+" or "<name>-"
  VertexIndex origin = -1;
  VertexIndex terminus = -1;
  EdgeIndex inverse = -1;
};

struct EdgeDecl {
  std::string id;
  std::string from;
  std::string to;
};

/// Finite connected graph stored as oriented-edge pairs.  Each declared
/// edge materializes both orientations: index 2i is "<id>+", index 2i+1
/// is "<id>-".  Successor sets b(e) exclude the inverse edge, so two-edge
/// paths through them are exactly the reduced ones.
///
/// Validation requires: connected, no degree-one vertices, rank >= 2.
/// Degree-two vertices are allowed but reported via has_degree_two_vertex().
class Graph {
 public:
  Graph(std::vector<std::string> vertex_ids, const std::vector<EdgeDecl>& decls);

  int oriented_count() const { return static_cast<int>(edges_.size()); }
  int non_oriented_count() const { return oriented_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int rank() const { return non_oriented_count() - vertex_count() + 1; }

  int degree(VertexIndex v) const { return static_cast<int>(out_edges_[v].size()); }
  bool is_regular() const;
  int regular_degree() const;  // throws DomainError if not regular
  bool has_degree_two_vertex() const;

  const OrientedEdge& edge(EdgeIndex e) const { return edges_[e]; }
  EdgeIndex inverse(EdgeIndex e) const { return edges_[e].inverse; }
  EdgeIndex pair_index(EdgeIndex e) const { return e / 2; }
  const std::vector<EdgeIndex>& successors(EdgeIndex e) const { return succ_[e]; }
  const std::vector<EdgeIndex>& predecessors(EdgeIndex e) const { return pred_[e]; }
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_edges_[v]; }

  VertexIndex vertex_index(const std::string& id) const;
  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
  EdgeIndex edge_index(const std::string& oriented_id) const;

 private:
  void validate() const;

  std::vector<std::string> vertex_ids_;
  std::map<std::string, VertexIndex> vertex_lookup_;
  std::vector<OrientedEdge> edges_;
  std::map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> succ_;
  std::vector<std::vector<EdgeIndex>> pred_;
  std::vector<std::vector<EdgeIndex>> out_edges_;
};

enum class MetricClass {
  Metric,       // symmetric, all lengths positive
  SemiMetric,   // symmetric, zero-length edges form a forest
  QuasiMetric,  // all lengths positive, possibly asymmetric
  Singular,     // unusable for entropy
};

const char* metric_class_name(MetricClass c);

struct MetricStructure {
  std::vector<double> lengths;  // per oriented edge
  MetricClass cls = MetricClass::Singular;
  double volume = 0.0;

  bool usable() const { return cls != MetricClass::Singular; }
  bool symmetric() const {
    return cls == MetricClass::Metric || cls == MetricClass::SemiMetric;
  }
};

/// Classify an oriented length assignment.  A symmetric structure whose
/// zero-length edges contain a cycle is classified Singular (flagged, not
/// an error); asymmetric structures must be everywhere positive.
MetricStructure classify_metric(const Graph& g, std::vector<double> oriented_lengths);

/// Symmetric structure from one length per non-oriented edge.
MetricStructure symmetric_metric(const Graph& g, const std::vector<double>& pair_lengths);

MetricStructure uniform_volume_one(const Graph& g);

struct ReducedPath {
  std::vector<EdgeIndex> edges;  // nonempty, reduced
  VertexIndex origin = -1;
  VertexIndex terminus = -1;
};

/// Builds a path, checking adjacency and the no-backtracking condition.
ReducedPath make_path(const Graph& g, std::vector<EdgeIndex> edges);

double path_length(const MetricStructure& m, const ReducedPath& p);
std::vector<int> occurrence_counts(const Graph& g, const ReducedPath& p);

/// Metric length of the cyclic reduction of a closed path.
double translation_length(const Graph& g, const MetricStructure& m,
                          const ReducedPath& loop);

using PathVisitor = std::function<void(const std::vector<EdgeIndex>&)>;

/// Emits every reduced path from `origin` with at most `max_edges` edges,
/// in length-then-lexicographic order (lexicographic by edge index, which
/// is declaration order with + before -).
void for_each_reduced_path(const Graph& g, VertexIndex origin, int max_edges,
                           const PathVisitor& visit);

/// Same ordering, paths from every origin.
void for_each_reduced_path(const Graph& g, int max_edges, const PathVisitor& visit);

std::vector<ReducedPath> enumerate_reduced_paths(const Graph& g, VertexIndex origin,
                                                 int max_edges);

struct ParsedGraph {
  Graph graph;
  MetricStructure metric;
};

/// Parses the line-based graph file format:
///   vertex <id>
///   edge <id> <from> <to> [<length>]
///   lenq <oriented-id> <length>
///   # comment
/// Lengths are decimals or fractions "p/q".  When no edge carries a
/// length the uniform volume-one structure is used.
ParsedGraph parse_graph(const std::string& text);

ParsedGraph load_graph(const std::string& path);

/// Built-in graphs with their uniform volume-one structures:
/// theta, dumbbell, K4, rose(k) (aliases rose2, rose3), banana(m).
ParsedGraph catalog(const std::string& name);

std::vector<std::string> catalog_names();

/// "0.25" or "1/4".
double parse_length_token(const std::string& token);

}  // namespace volent
