#include <algorithm>

#include "compnum/cover.hpp"

namespace compnum {
namespace {

// Bron-Kerbosch with Tomita pivoting: branch only on candidates outside the
// neighbourhood of the pivot that leaves the fewest branches.
void expand(const Graph& g, VertexSet clique, VertexSet candidates, VertexSet excluded,
            std::vector<VertexSet>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) out.push_back(clique);
    return;
  }
  Vertex pivot = -1;
  int best = -1;
  for (Vertex u : candidates | excluded) {
    int reach = (candidates & g.neighbors(u)).size();
    if (reach > best) {
      best = reach;
      pivot = u;
    }
  }
  for (Vertex v : candidates - g.neighbors(pivot)) {
    VertexSet with_v = clique;
    with_v.insert(v);
    expand(g, with_v, candidates & g.neighbors(v), excluded & g.neighbors(v), out);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques_within(const Graph& g, VertexSet within) {
  require_subset(g, within);
  std::vector<VertexSet> out;
  if (within.empty()) return out;
  expand(g, VertexSet(), within, VertexSet(), out);
  std::sort(out.begin(), out.end(), lexicographically_less);
  return out;
}

CliqueFamily maximal_cliques(const Graph& g) {
  return CliqueFamily{maximal_cliques_within(g, g.vertices())};
}

bool CliqueFamily::all_cliques_of(const Graph& host) const {
  return std::all_of(cliques.begin(), cliques.end(), [&](VertexSet s) {
    return s.is_subset_of(host.vertices()) && is_clique(host, s);
  });
}

bool CliqueFamily::covers(const EdgeSet& edges) const {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return std::any_of(cliques.begin(), cliques.end(), [&](VertexSet s) {
      return s.contains(e.u) && s.contains(e.v);
    });
  });
}

bool CliqueFamily::covers(VertexSet vertices) const {
  VertexSet seen;
  for (VertexSet s : cliques) seen |= s;
  return vertices.is_subset_of(seen);
}

}  // namespace compnum
