#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the cover engine, the bound scan or the realization search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "compnum/digraph.hpp"
#include "compnum/graph.hpp"

namespace compnum::oracle {

/// graph6 by building the bit string literally, then chunking it.
inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) bits += g.adjacent(u, v) ? '1' : '0';
  }
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    out += static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2));
  }
  return out;
}

/// Every clique of g (including the empty set), by scanning all subsets.
inline std::vector<VertexSet> all_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        if (((mask >> u) & 1) && ((mask >> v) & 1) && !g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) out.push_back(VertexSet(mask));
  }
  return out;
}

/// Smallest r such that some r-subfamily of `sets` has `target` in its
/// union; -1 if none. Exhaustive over all subfamilies.
inline int exhaustive_cover(std::uint64_t target, const std::vector<std::uint64_t>& sets) {
  const std::size_t c = sets.size();
  int best = -1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
    std::uint64_t reached = 0;
    for (std::size_t i = 0; i < c; ++i) {
      if ((pick >> i) & 1) reached |= sets[i];
    }
    if ((reached & target) == target) {
      const int size = __builtin_popcountll(pick);
      if (best < 0 || size < best) best = size;
    }
  }
  return best;
}

/// Minimum number of cliques (of any size) covering `targets`, by trying
/// every family of r cliques for r = 0, 1, 2, ...
inline int brute_edge_clique_cover(const std::vector<Edge>& targets, const Graph& g) {
  if (targets.empty()) return 0;
  std::vector<std::uint64_t> covered;  // bit i: targets[i] inside the clique
  for (VertexSet c : all_cliques(g)) {
    if (c.size() < 2) continue;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (c.contains(targets[i].u) && c.contains(targets[i].v)) bits |= std::uint64_t{1} << i;
    }
    if (bits) covered.push_back(bits);
  }
  const std::uint64_t full = (std::uint64_t{1} << targets.size()) - 1;
  for (int r = 1;; ++r) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    const int c = static_cast<int>(covered.size());
    if (r > c) return -1;
    while (true) {
      std::uint64_t reached = 0;
      for (int i : idx) reached |= covered[i];
      if (reached == full) return r;
      int i = r - 1;
      while (i >= 0 && idx[i] == c - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

inline int brute_vertex_clique_cover(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<std::uint64_t> cliques;
  for (VertexSet c : all_cliques(g)) {
    if (!c.empty()) cliques.push_back(c.bits());
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (int r = 1; r <= n; ++r) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    const int c = static_cast<int>(cliques.size());
    while (true) {
      std::uint64_t reached = 0;
      for (int i : idx) reached |= cliques[i];
      if (reached == full) return r;
      int i = r - 1;
      while (i >= 0 && idx[i] == c - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return n;
}

/// C(D) by a double loop over vertex pairs and a scan over all potential prey.
inline Graph naive_competition_graph(const Digraph& d) {
  Graph g(d.order());
  for (int x = 0; x < d.order(); ++x) {
    for (int y = x + 1; y < d.order(); ++y) {
      for (int v = 0; v < d.order(); ++v) {
        if (d.has_arc(x, v) && d.has_arc(y, v)) {
          g.add_edge(x, y);
          break;
        }
      }
    }
  }
  return g;
}

/// Is G + I_k the competition graph of an acyclic digraph? Tries every
/// permutation of the n + k vertices and every arc set pointing forward in
/// it. Only practical for n + k <= 6.
inline bool naive_realizable(const Graph& g, int k) {
  const int n = g.order();
  const int total = n + k;
  std::vector<int> perm(static_cast<std::size_t>(total));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> forward;
  do {
    forward.clear();
    for (int i = 0; i < total; ++i) {
      for (int j = i + 1; j < total; ++j) forward.emplace_back(perm[i], perm[j]);
    }
    const std::uint64_t count = std::uint64_t{1} << forward.size();
    for (std::uint64_t arcs = 0; arcs < count; ++arcs) {
      std::vector<std::uint64_t> out(static_cast<std::size_t>(total), 0);
      for (std::size_t a = 0; a < forward.size(); ++a) {
        if ((arcs >> a) & 1) out[forward[a].first] |= std::uint64_t{1} << forward[a].second;
      }
      bool match = true;
      for (int x = 0; x < total && match; ++x) {
        for (int y = x + 1; y < total && match; ++y) {
          const bool edge = (out[x] & out[y]) != 0;
          const bool want = y < n && g.adjacent(x, y);
          match = edge == want;
        }
      }
      if (match) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Smallest k with naive_realizable(g, k), searching k = 0..limit; -1 if none.
inline int naive_competition_number(const Graph& g, int limit) {
  for (int k = 0; k <= limit; ++k) {
    if (naive_realizable(g, k)) return k;
  }
  return -1;
}

}  // namespace compnum::oracle
