#include "volent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace volent {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseSyntax: return "parse-syntax";
    case ErrorKind::DuplicateEdge: return "duplicate-edge";
    case ErrorKind::DuplicateVertex: return "duplicate-vertex";
    case ErrorKind::UnknownVertex: return "unknown-vertex";
    case ErrorKind::UnknownEdge: return "unknown-edge";
    case ErrorKind::UnknownName: return "unknown-name";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::NegativeLength: return "negative-length";
    case ErrorKind::MissingLength: return "missing-length";
    case ErrorKind::SingularStructure: return "singular-structure";
    case ErrorKind::AsymmetricLengths: return "asymmetric-lengths";
    case ErrorKind::NotClosed: return "not-closed";
    case ErrorKind::NotReduced: return "not-reduced";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::BracketFailure: return "bracket-failure";
    case ErrorKind::ToleranceNotReached: return "tolerance-not-reached";
    case ErrorKind::IterationLimit: return "iteration-limit";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::SolveFailure: return "solve-failure";
    case ErrorKind::Mismatch: return "mismatch";
  }
  return "unknown";
}

const char* metric_class_name(MetricClass c) {
  switch (c) {
    case MetricClass::Metric: return "metric";
    case MetricClass::SemiMetric: return "semi-metric";
    case MetricClass::QuasiMetric: return "quasi-metric";
    case MetricClass::Singular: return "singular";
  }
  return "unknown";
}

Graph::Graph(std::vector<std::string> vertex_ids, const std::vector<EdgeDecl>& decls)
    : vertex_ids_(std::move(vertex_ids)) {
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (!vertex_lookup_.emplace(vertex_ids_[v], v).second) {
      throw Error(ErrorKind::DuplicateVertex, "duplicate vertex id: " + vertex_ids_[v]);
    }
  }
  edges_.reserve(2 * decls.size());
  for (const EdgeDecl& d : decls) {
    auto from = vertex_lookup_.find(d.from);
    auto to = vertex_lookup_.find(d.to);
    if (from == vertex_lookup_.end()) {
      throw Error(ErrorKind::UnknownVertex,
                  "edge " + d.id + " references unknown vertex " + d.from);
    }
    if (to == vertex_lookup_.end()) {
      throw Error(ErrorKind::UnknownVertex,
                  "edge " + d.id + " references unknown vertex " + d.to);
    }
    EdgeIndex fwd = static_cast<EdgeIndex>(edges_.size());
    OrientedEdge e_fwd{d.id + "+", from->second, to->second, fwd + 1};
    OrientedEdge e_bwd{d.id + "-", to->second, from->second, fwd};
    if (!edge_lookup_.emplace(e_fwd.id, fwd).second) {
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge id: " + d.id);
    }
    edge_lookup_.emplace(e_bwd.id, fwd + 1);
    edges_.push_back(e_fwd);
    edges_.push_back(e_bwd);
  }

  out_edges_.assign(vertex_count(), {});
  for (EdgeIndex e = 0; e < oriented_count(); ++e) {
    out_edges_[edges_[e].origin].push_back(e);
  }
  succ_.assign(oriented_count(), {});
  pred_.assign(oriented_count(), {});
  for (EdgeIndex e = 0; e < oriented_count(); ++e) {
    for (EdgeIndex f : out_edges_[edges_[e].terminus]) {
      if (f != edges_[e].inverse) succ_[e].push_back(f);
    }
    for (EdgeIndex f : succ_[e]) pred_[f].push_back(e);
  }
  for (auto& p : pred_) std::sort(p.begin(), p.end());

  validate();
}

void Graph::validate() const {
  if (oriented_count() == 0) {
    throw Error(ErrorKind::Validation, "graph has no edges");
  }
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (degree(v) <= 1) {
      throw Error(ErrorKind::Validation,
                  "vertex " + vertex_ids_[v] + " has degree " + std::to_string(degree(v)));
    }
  }
  // connectivity
  std::vector<char> seen(vertex_count(), 0);
  std::deque<VertexIndex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : out_edges_[v]) {
      VertexIndex u = edges_[e].terminus;
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::Validation, "graph is not connected");
  }
  if (rank() < 2) {
    throw Error(ErrorKind::Validation,
                "fundamental group rank is " + std::to_string(rank()) + ", need >= 2");
  }
}

bool Graph::is_regular() const {
  for (VertexIndex v = 1; v < vertex_count(); ++v) {
    if (degree(v) != degree(0)) return false;
  }
  return true;
}

int Graph::regular_degree() const {
  if (!is_regular()) {
    throw Error(ErrorKind::DomainError, "graph is not regular");
  }
  return degree(0);
}

bool Graph::has_degree_two_vertex() const {
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (degree(v) == 2) return true;
  }
  return false;
}

VertexIndex Graph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) {
    throw Error(ErrorKind::UnknownVertex, "unknown vertex: " + id);
  }
  return it->second;
}

EdgeIndex Graph::edge_index(const std::string& oriented_id) const {
  auto it = edge_lookup_.find(oriented_id);
  if (it == edge_lookup_.end()) {
    throw Error(ErrorKind::UnknownEdge, "unknown oriented edge: " + oriented_id);
  }
  return it->second;
}

namespace {

// union-find over vertices, used for the zero-length forest test
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false if x and y were already connected
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

MetricStructure classify_metric(const Graph& g, std::vector<double> oriented_lengths) {
  const int n = g.oriented_count();
  if (static_cast<int>(oriented_lengths.size()) != n) {
    throw Error(ErrorKind::MissingLength,
                "expected " + std::to_string(n) + " oriented lengths, got " +
                    std::to_string(oriented_lengths.size()));
  }
  for (double L : oriented_lengths) {
    if (std::isnan(L) || L < 0.0) {
      throw Error(ErrorKind::NegativeLength, "edge lengths must be >= 0");
    }
  }
  MetricStructure m;
  m.lengths = std::move(oriented_lengths);
  m.volume = 0.5 * std::accumulate(m.lengths.begin(), m.lengths.end(), 0.0);

  bool sym = true;
  bool has_zero = false;
  for (EdgeIndex e = 0; e < n; e += 2) {
    if (m.lengths[e] != m.lengths[e + 1]) sym = false;
    if (m.lengths[e] == 0.0 || m.lengths[e + 1] == 0.0) has_zero = true;
  }
  if (!has_zero) {
    m.cls = sym ? MetricClass::Metric : MetricClass::QuasiMetric;
    return m;
  }
  if (!sym) {
    m.cls = MetricClass::Singular;  // positive quasi-metric requires L > 0
    return m;
  }
  // symmetric with zeros: non-singular iff the zero set is a forest
  UnionFind uf(g.vertex_count());
  bool cycle = false;
  for (EdgeIndex e = 0; e < n; e += 2) {
    if (m.lengths[e] == 0.0) {
      if (!uf.unite(g.edge(e).origin, g.edge(e).terminus)) cycle = true;
    }
  }
  m.cls = cycle ? MetricClass::Singular : MetricClass::SemiMetric;
  return m;
}

MetricStructure symmetric_metric(const Graph& g, const std::vector<double>& pair_lengths) {
  if (static_cast<int>(pair_lengths.size()) != g.non_oriented_count()) {
    throw Error(ErrorKind::MissingLength,
                "expected " + std::to_string(g.non_oriented_count()) + " lengths, got " +
                    std::to_string(pair_lengths.size()));
  }
  std::vector<double> oriented(g.oriented_count());
  for (int i = 0; i < g.non_oriented_count(); ++i) {
    oriented[2 * i] = pair_lengths[i];
    oriented[2 * i + 1] = pair_lengths[i];
  }
  return classify_metric(g, std::move(oriented));
}

MetricStructure uniform_volume_one(const Graph& g) {
  std::vector<double> pair_lengths(g.non_oriented_count(),
                                   1.0 / g.non_oriented_count());
  return symmetric_metric(g, pair_lengths);
}

ReducedPath make_path(const Graph& g, std::vector<EdgeIndex> edges) {
  if (edges.empty()) {
    throw Error(ErrorKind::NotReduced, "path must be nonempty");
  }
  for (EdgeIndex e : edges) {
    if (e < 0 || e >= g.oriented_count()) {
      throw Error(ErrorKind::UnknownEdge, "edge index out of range");
    }
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.edge(edges[i]).terminus != g.edge(edges[i + 1]).origin) {
      throw Error(ErrorKind::NotReduced, "consecutive edges are not adjacent");
    }
    if (edges[i + 1] == g.inverse(edges[i])) {
      throw Error(ErrorKind::NotReduced, "path contains a backtrack");
    }
  }
  ReducedPath p;
  p.origin = g.edge(edges.front()).origin;
  p.terminus = g.edge(edges.back()).terminus;
  p.edges = std::move(edges);
  return p;
}

double path_length(const MetricStructure& m, const ReducedPath& p) {
  double sum = 0.0;
  for (EdgeIndex e : p.edges) sum += m.lengths[e];
  return sum;
}

std::vector<int> occurrence_counts(const Graph& g, const ReducedPath& p) {
  std::vector<int> counts(g.oriented_count(), 0);
  for (EdgeIndex e : p.edges) ++counts[e];
  return counts;
}

double translation_length(const Graph& g, const MetricStructure& m,
                          const ReducedPath& loop) {
  if (loop.origin != loop.terminus) {
    throw Error(ErrorKind::NotClosed, "translation length needs a closed path");
  }
  std::deque<EdgeIndex> d(loop.edges.begin(), loop.edges.end());
  while (d.size() >= 2 && d.front() == g.inverse(d.back())) {
    d.pop_front();
    d.pop_back();
  }
  double sum = 0.0;
  for (EdgeIndex e : d) sum += m.lengths[e];
  return sum;
}

namespace {

void dfs_exact_depth(const Graph& g, std::vector<EdgeIndex>& stack, int depth,
                     const PathVisitor& visit) {
  if (static_cast<int>(stack.size()) == depth) {
    visit(stack);
    return;
  }
  for (EdgeIndex f : g.successors(stack.back())) {
    stack.push_back(f);
    dfs_exact_depth(g, stack, depth, visit);
    stack.pop_back();
  }
}

void enumerate_from_starts(const Graph& g, const std::vector<EdgeIndex>& starts,
                           int max_edges, const PathVisitor& visit) {
  if (max_edges < 1) {
    throw Error(ErrorKind::DomainError, "max_edges must be >= 1");
  }
  std::vector<EdgeIndex> stack;
  for (int depth = 1; depth <= max_edges; ++depth) {
    for (EdgeIndex e : starts) {
      stack.push_back(e);
      dfs_exact_depth(g, stack, depth, visit);
      stack.pop_back();
    }
  }
}

}  // namespace

void for_each_reduced_path(const Graph& g, VertexIndex origin, int max_edges,
                           const PathVisitor& visit) {
  enumerate_from_starts(g, g.out_edges(origin), max_edges, visit);
}

void for_each_reduced_path(const Graph& g, int max_edges, const PathVisitor& visit) {
  std::vector<EdgeIndex> starts(g.oriented_count());
  std::iota(starts.begin(), starts.end(), 0);
  enumerate_from_starts(g, starts, max_edges, visit);
}

std::vector<ReducedPath> enumerate_reduced_paths(const Graph& g, VertexIndex origin,
                                                 int max_edges) {
  std::vector<ReducedPath> out;
  for_each_reduced_path(g, origin, max_edges, [&](const std::vector<EdgeIndex>& edges) {
    out.push_back(make_path(g, edges));
  });
  return out;
}

double parse_length_token(const std::string& token) {
  std::size_t slash = token.find('/');
  try {
    if (slash != std::string::npos) {
      double p = std::stod(token.substr(0, slash));
      double q = std::stod(token.substr(slash + 1));
      if (q == 0.0) throw Error(ErrorKind::ParseSyntax, "zero denominator: " + token);
      return p / q;
    }
    std::size_t pos = 0;
    double v = std::stod(token, &pos);
    if (pos != token.size()) {
      throw Error(ErrorKind::ParseSyntax, "bad number: " + token);
    }
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseSyntax, "bad number: " + token);
  }
}

ParsedGraph parse_graph(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> decls;
  std::vector<double> pair_lengths;  // -1 marks "not given"
  std::vector<std::pair<std::string, double>> overrides;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) -> Error {
      return Error(ErrorKind::ParseSyntax,
                   "line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw fail("expected: vertex <id>");
      vertices.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 5) {
        throw fail("expected: edge <id> <from> <to> [<length>]");
      }
      decls.push_back({tok[1], tok[2], tok[3]});
      double L = -1.0;  // marks "not given"
      if (tok.size() == 5) {
        L = parse_length_token(tok[4]);
        if (L < 0.0) {
          throw Error(ErrorKind::NegativeLength,
                      "line " + std::to_string(lineno) + ": negative length");
        }
      }
      pair_lengths.push_back(L);
    } else if (tok[0] == "lenq") {
      if (tok.size() != 3) throw fail("expected: lenq <oriented-id> <length>");
      overrides.emplace_back(tok[1], parse_length_token(tok[2]));
    } else {
      throw fail("unknown directive: " + tok[0]);
    }
  }

  Graph g(std::move(vertices), decls);

  bool any_given = false;
  for (double L : pair_lengths) {
    if (L >= 0.0) any_given = true;
  }
  std::vector<double> oriented(g.oriented_count());
  if (!any_given && overrides.empty()) {
    MetricStructure uni = uniform_volume_one(g);
    return {std::move(g), std::move(uni)};
  }
  for (int i = 0; i < g.non_oriented_count(); ++i) {
    if (pair_lengths[i] < 0.0) {
      throw Error(ErrorKind::MissingLength,
                  "edge " + decls[i].id + " has no length but other edges do");
    }
    oriented[2 * i] = pair_lengths[i];
    oriented[2 * i + 1] = pair_lengths[i];
  }
  for (const auto& [id, L] : overrides) {
    oriented[g.edge_index(id)] = L;
  }
  MetricStructure m = classify_metric(g, std::move(oriented));
  return {std::move(g), std::move(m)};
}

ParsedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseSyntax, "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

namespace {

ParsedGraph make_banana(int m) {
  // two vertices joined by m parallel edges; m-regular, rank m-1
  if (m < 3) throw Error(ErrorKind::UnknownName, "banana(m) needs m >= 3");
  std::vector<EdgeDecl> decls;
  for (int i = 0; i < m; ++i) {
    decls.push_back({std::string(1, static_cast<char>('a' + i)), "u", "v"});
  }
  Graph g({"u", "v"}, decls);
  MetricStructure uni = uniform_volume_one(g);
  return {std::move(g), std::move(uni)};
}

ParsedGraph make_rose(int k) {
  if (k < 2) throw Error(ErrorKind::UnknownName, "rose(k) needs k >= 2");
  std::vector<EdgeDecl> decls;
  for (int i = 0; i < k; ++i) {
    decls.push_back({std::string(1, static_cast<char>('a' + i)), "u", "u"});
  }
  Graph g({"u"}, decls);
  MetricStructure uni = uniform_volume_one(g);
  return {std::move(g), std::move(uni)};
}

ParsedGraph make_dumbbell() {
  Graph g({"u", "v"}, {{"a", "u", "u"}, {"b", "u", "v"}, {"c", "v", "v"}});
  MetricStructure uni = uniform_volume_one(g);
  return {std::move(g), std::move(uni)};
}

ParsedGraph make_k4() {
  std::vector<std::string> vs{"v1", "v2", "v3", "v4"};
  std::vector<EdgeDecl> decls;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      decls.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1),
                       vs[i], vs[j]});
    }
  }
  Graph g(vs, decls);
  MetricStructure uni = uniform_volume_one(g);
  return {std::move(g), std::move(uni)};
}

int parse_arg(const std::string& name, std::size_t open) {
  if (name.back() != ')') {
    throw Error(ErrorKind::UnknownName, "unknown catalog name: " + name);
  }
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  try {
    return std::stoi(inner);
  } catch (const std::exception&) {
    throw Error(ErrorKind::UnknownName, "unknown catalog name: " + name);
  }
}

}  // namespace

ParsedGraph catalog(const std::string& name) {
  if (name == "theta") return make_banana(3);
  if (name == "dumbbell") return make_dumbbell();
  if (name == "K4" || name == "k4") return make_k4();
  if (name == "rose2") return make_rose(2);
  if (name == "rose3") return make_rose(3);
  if (name.rfind("rose(", 0) == 0) return make_rose(parse_arg(name, 4));
  if (name.rfind("banana(", 0) == 0) return make_banana(parse_arg(name, 6));
  throw Error(ErrorKind::UnknownName, "unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"theta", "dumbbell", "K4", "rose2", "rose3", "rose(k)", "banana(m)"};
}

}  // namespace volent
