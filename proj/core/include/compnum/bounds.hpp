#pragma once

#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

/// theta_E(G) - n + 2. Unclamped, so it can be negative. Throws for n = 0.
/// Only a lower bound for n >= 2: the single vertex graph gives 1 while its
/// competition number is 0.
int opsut_edge_bound(const Graph& g);

/// min over v of theta_V(G[N(v)]); 0 as soon as some vertex is isolated.
/// Throws for n = 0.
int opsut_vertex_bound(const Graph& g);

/// theta_E(E_G[U]; N_G[U]): fewest cliques of the subgraph induced by the
/// closed neighbourhood of U that cover every edge touching U.
int neighborhood_cover_number(const Graph& g, VertexSet u);

/// Lower-bound term for one subset size m:
///   min over m-subsets U of  theta_E(E_G[U]; N_G[U]) - m + 1.
struct BoundTerm {
  int m = 0;
  int value = 0;
  /// Lexicographically first minimizing subset.
  VertexSet argmin;
  /// The scan stopped early because this m could no longer raise the
  /// overall maximum. `value` is then only an upper bound on the true
  /// minimum and `argmin` the subset that triggered the stop.
  bool truncated = false;
};

/// Throws std::invalid_argument unless 1 <= m <= n.
BoundTerm general_bound_term(const Graph& g, int m);

struct BoundOptions {
  /// Abandon an m once its running minimum drops to the best maximum so far.
  bool prune = true;
};

struct BoundReport {
  int n = 0;
  int opsut_edge = 0;
  int opsut_vertex = 0;
  /// per_m[i] describes m = i + 1.
  std::vector<BoundTerm> per_m;
  /// Maximum over m of the per-m terms; exact even when some m were truncated.
  int general = 0;
  std::vector<int> truncated_ms;
};

/// The competition-number lower bound max_m min_U (...), together with both
/// classical special cases. Throws for n = 0.
BoundReport general_bound(const Graph& g, const BoundOptions& options = {});

/// max(0, bound); competition numbers are nonnegative.
inline int clamp_bound(int bound) { return bound < 0 ? 0 : bound; }

}  // namespace compnum
