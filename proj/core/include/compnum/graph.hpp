#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "compnum/vertex_set.hpp"

namespace compnum {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;
  bool is_subset_of(const EdgeSet& other) const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& members() const { return edges_; }

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Simple undirected graph on vertices 0..n-1, n <= kMaxOrder.
/// Adjacency rows are bitmasks, so neighbourhood intersection is one AND.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Rejects loops and out-of-range endpoints; adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  /// Unchecked row access; see open_neighborhood() for the checked form.
  VertexSet neighbors(Vertex v) const { return adj_[v]; }

  /// All edges in (u, v) lexicographic order.
  std::vector<Edge> edges() const;
  EdgeSet edge_set() const { return EdgeSet(edges()); }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Result of restricting a graph to a vertex subset and relabeling.
struct InducedSubgraph {
  Graph graph;
  /// new label -> original label (ascending)
  std::vector<Vertex> to_original;
  /// original label -> new label, or -1 when the vertex was dropped
  std::vector<Vertex> to_local;

  VertexSet lift(VertexSet local) const;
  Edge lift(Edge local) const { return {to_original[local.u], to_original[local.v]}; }
};

/// N_G(v): vertices adjacent to v.
VertexSet open_neighborhood(const Graph& g, Vertex v);

/// N_G[U]: U together with every vertex adjacent to a member of U.
VertexSet closed_neighborhood_set(const Graph& g, VertexSet u);

/// E_G[U]: edges with at least one endpoint in U.
EdgeSet incident_edges(const Graph& g, VertexSet u);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// True iff every pair in s is adjacent. The empty set and singletons are cliques.
bool is_clique(const Graph& g, VertexSet s);

/// Throws std::invalid_argument unless s is a subset of g's vertices.
void require_subset(const Graph& g, VertexSet s);

bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace compnum
