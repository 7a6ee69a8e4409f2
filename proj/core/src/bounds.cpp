#include "compnum/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "compnum/cover.hpp"

namespace compnum {
namespace {

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("bound is undefined for the empty graph");
}

// Visits m-subsets of {0..n-1} in lexicographic order of their sorted
// member lists until `visit` returns false.
template <typename Visit>
void for_each_subset(int n, int m, Visit&& visit) {
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    VertexSet u;
    for (int v : pick) u.insert(v);
    if (!visit(u)) return;
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Shared scan for one m. Stops once the running minimum reaches `stop_at`
// (or the floor 1 - m, below which no term can go).
BoundTerm scan_term(const Graph& g, int m, int stop_at) {
  BoundTerm term;
  term.m = m;
  term.value = std::numeric_limits<int>::max();
  const int floor = 1 - m;
  for_each_subset(g.order(), m, [&](VertexSet u) {
    const int value = neighborhood_cover_number(g, u) - m + 1;
    if (value < term.value) {
      term.value = value;
      term.argmin = u;
    }
    if (term.value <= floor) return false;
    if (term.value <= stop_at) {
      term.truncated = true;
      return false;
    }
    return true;
  });
  return term;
}

}  // namespace

int opsut_edge_bound(const Graph& g) {
  require_nonempty(g);
  return edge_clique_cover_number(g) - g.order() + 2;
}

int opsut_vertex_bound(const Graph& g) {
  require_nonempty(g);
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nbhd = g.neighbors(v);
    if (nbhd.empty()) return 0;
    best = std::min(best, vertex_clique_cover_number(induced_subgraph(g, nbhd).graph));
  }
  return best;
}

int neighborhood_cover_number(const Graph& g, VertexSet u) {
  // Any clique of G meets N_G[U] in a clique of the induced subgraph that
  // still covers the same edges of E_G[U], so the local problem is exact.
  const VertexSet closure = closed_neighborhood_set(g, u);
  const InducedSubgraph local = induced_subgraph(g, closure);
  std::vector<Edge> targets;
  for (const Edge& e : incident_edges(g, u)) {
    targets.emplace_back(local.to_local[e.u], local.to_local[e.v]);
  }
  return edge_clique_cover_number(EdgeSet(std::move(targets)), local.graph);
}

BoundTerm general_bound_term(const Graph& g, int m) {
  if (m < 1 || m > g.order()) {
    throw std::invalid_argument("subset size " + std::to_string(m) + " outside [1, " +
                                std::to_string(g.order()) + "]");
  }
  return scan_term(g, m, std::numeric_limits<int>::min());
}

BoundReport general_bound(const Graph& g, const BoundOptions& options) {
  require_nonempty(g);
  BoundReport report;
  report.n = g.order();
  report.opsut_edge = opsut_edge_bound(g);
  report.opsut_vertex = opsut_vertex_bound(g);
  report.general = std::numeric_limits<int>::min();
  for (int m = 1; m <= g.order(); ++m) {
    const int stop_at = options.prune && m > 1 ? report.general
                                               : std::numeric_limits<int>::min();
    BoundTerm term = scan_term(g, m, stop_at);
    if (term.truncated) {
      report.truncated_ms.push_back(m);
    } else {
      report.general = std::max(report.general, term.value);
    }
    report.per_m.push_back(term);
  }
  return report;
}

}  // namespace compnum
