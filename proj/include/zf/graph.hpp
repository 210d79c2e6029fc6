#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zf/bitset.hpp"

namespace zf {

/// Girth of a graph: either the exact length of a shortest cycle (>= 3) or
/// Acyclic when the graph is a forest. Never a sentinel integer.
class GirthValue {
 public:
  static GirthValue finite(int length) { return GirthValue(length); }
  static GirthValue acyclic() { return GirthValue(); }

  bool is_finite() const { return len_.has_value(); }
  bool is_acyclic() const { return !len_.has_value(); }

  /// Shortest cycle length; only valid when is_finite().
  int length() const { return *len_; }

  bool operator==(const GirthValue&) const = default;

 private:
  GirthValue() = default;
  explicit GirthValue(int length) : len_(length) {}
  std::optional<int> len_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Neighborhoods are
/// packed boolean rows so that intersection and popcount are word operations.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges are merged.
  /// Throws std::invalid_argument on self-loops or out-of-range vertices.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return deg_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }

  /// All edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> deg_;
};

/// Result of taking an induced subgraph: the subgraph plus the vertex maps
/// in both directions (to_sub[v] == -1 for vertices outside the set).
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_sub;     // parent vertex -> subgraph vertex, or -1
  std::vector<int> to_parent;  // subgraph vertex -> parent vertex
};

int min_degree(const Graph& g);  // 0 for the empty graph

/// Common neighborhood N(u) & N(v); requires u != v, both in range.
Bitset common_neighbors(const Graph& g, int u, int v);

/// Exact girth via per-root BFS: for each root, the minimum d(u)+d(v)+1 over
/// non-tree edges {u,v}; the minimum over all roots is the girth.
GirthValue girth(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s);

// Standard constructions. Sizes are validated (cycle needs n >= 3, the rest
// need positive sizes).
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_hypercube(int d);
Graph make_petersen();
Graph make_heawood();
Graph make_mcgee();

/// Parses a construction spec: "petersen", "heawood", "mcgee", "cycle(9)",
/// "path(4)", "complete(5)", "complete_bipartite(3,4)", "hypercube(3)".
/// Throws std::invalid_argument for unknown names, listing the known ones.
Graph named_graph(const std::string& spec);

}  // namespace zf
