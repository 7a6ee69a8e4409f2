#pragma once

#include <utility>
#include <vector>

#include "compnum/vertex_set.hpp"

namespace compnum {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Loop-free directed graph without parallel arcs on vertices 0..n-1.
/// Acyclicity is never assumed; use topological_order() to check it.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const;

  /// Throws std::invalid_argument on loops, out-of-range endpoints and duplicates.
  void add_arc(Vertex tail, Vertex head);

  bool has_arc(Vertex tail, Vertex head) const { return out_[tail].contains(head); }
  VertexSet out_neighbors(Vertex v) const { return out_[v]; }
  VertexSet in_neighbors(Vertex v) const { return in_[v]; }

  /// Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

struct TopologicalOrder {
  bool acyclic = true;
  /// Acyclic ordering when `acyclic`; empty otherwise.
  std::vector<Vertex> order;
  /// One directed cycle, closed (first == last) and rotated to start at its
  /// smallest label; empty when `acyclic`.
  std::vector<Vertex> cycle;
};

/// Kahn's algorithm, always taking the smallest available label, so the
/// result is deterministic. A cycle is reported as a result, not thrown.
TopologicalOrder topological_order(const Digraph& d);

/// True iff every arc points forward in `ordering` and `ordering` is a
/// permutation of d's vertices.
bool is_acyclic_ordering(const Digraph& d, const std::vector<Vertex>& ordering);

}  // namespace compnum
