#include "compnum/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace compnum {

Digraph::Digraph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("digraph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxOrder) + "]");
  }
  out_.resize(static_cast<std::size_t>(n));
  in_.resize(static_cast<std::size_t>(n));
}

std::size_t Digraph::arc_count() const {
  std::size_t count = 0;
  for (VertexSet row : out_) count += static_cast<std::size_t>(row.size());
  return count;
}

void Digraph::add_arc(Vertex tail, Vertex head) {
  if (tail < 0 || head < 0 || tail >= order() || head >= order()) {
    throw std::invalid_argument("arc " + std::to_string(tail) + "->" + std::to_string(head) +
                                " has an endpoint outside the digraph");
  }
  if (tail == head) throw std::invalid_argument("loop at vertex " + std::to_string(tail));
  if (has_arc(tail, head)) {
    throw std::invalid_argument("duplicate arc " + std::to_string(tail) + "->" +
                                std::to_string(head));
  }
  out_[tail].insert(head);
  in_[head].insert(tail);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) out.push_back({u, v});
  }
  return out;
}

TopologicalOrder topological_order(const Digraph& d) {
  const int n = d.order();
  TopologicalOrder result;
  std::vector<int> indegree(static_cast<std::size_t>(n));
  VertexSet available;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = d.in_neighbors(v).size();
    if (indegree[v] == 0) available.insert(v);
  }
  VertexSet placed;
  while (!available.empty()) {
    Vertex v = available.front();
    available.erase(v);
    placed.insert(v);
    result.order.push_back(v);
    for (Vertex w : d.out_neighbors(v)) {
      if (--indegree[w] == 0) available.insert(w);
    }
  }
  if (static_cast<int>(result.order.size()) == n) return result;

  // Every unplaced vertex keeps an unplaced in-neighbour, so walking
  // backwards from any of them must revisit a vertex.
  VertexSet rest = VertexSet::range(n) - placed;
  std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> walk;
  Vertex v = rest.front();
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = (d.in_neighbors(v) & rest).front();
  }
  std::vector<Vertex> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  cycle.push_back(cycle.front());

  result.acyclic = false;
  result.order.clear();
  result.cycle = std::move(cycle);
  return result;
}

bool is_acyclic_ordering(const Digraph& d, const std::vector<Vertex>& ordering) {
  const int n = d.order();
  if (static_cast<int>(ordering.size()) != n) return false;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    Vertex v = ordering[i];
    if (v < 0 || v >= n || position[v] >= 0) return false;
    position[v] = static_cast<int>(i);
  }
  for (const Arc& a : d.arcs()) {
    if (position[a.tail] >= position[a.head]) return false;
  }
  return true;
}

}  // namespace compnum
