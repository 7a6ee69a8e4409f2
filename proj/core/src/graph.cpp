#include "compnum/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace compnum {

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxOrder) + "]");
  }
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet row : adj_) twice += static_cast<std::size_t>(row.size());
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " has an endpoint outside the graph");
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(to_original[v]);
  return out;
}

void require_subset(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw std::invalid_argument("vertex set " + s.to_string() + " is not contained in 0.." +
                                std::to_string(g.order() - 1));
  }
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  return g.neighbors(v);
}

VertexSet closed_neighborhood_set(const Graph& g, VertexSet u) {
  require_subset(g, u);
  VertexSet out = u;
  for (Vertex v : u) out |= g.neighbors(v);
  return out;
}

EdgeSet incident_edges(const Graph& g, VertexSet u) {
  require_subset(g, u);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (u.contains(e.u) || u.contains(e.v)) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  require_subset(g, s);
  InducedSubgraph out;
  out.to_original = s.to_vector();
  out.to_local.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    out.to_local[out.to_original[i]] = static_cast<Vertex>(i);
  }
  out.graph = Graph(s.size());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_original[i]) & s) {
      Vertex j = out.to_local[w];
      if (static_cast<Vertex>(i) < j) out.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  require_subset(g, s);
  for (Vertex v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.neighbors(e.u).intersects(g.neighbors(e.v))) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

}  // namespace compnum
