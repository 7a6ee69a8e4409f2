#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

// Canonical labelings:
//   path / cycle    vertices joined in label order (cycle closes n-1 -> 0)
//   star K_{1,m}    centre 0, leaves 1..m
//   multipartite    parts are consecutive label blocks in the given order
//   random G(n,p)   pair (u,v) tested in graph6 column order with a
//                   std::mt19937_64 stream seeded by `seed`

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph star_graph(int leaves);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph random_graph(int n, double p, std::uint64_t seed);

/// A named family with numeric parameters, e.g. {"cycle", {4}} or
/// {"random", {5, 0.5}}. Family names: path, cycle, complete, edgeless,
/// star, multipartite (alias complete-multipartite), random.
struct GraphFamily {
  std::string name;
  std::vector<double> params;
};

/// Throws std::invalid_argument for unknown families, bad parameters, or a
/// random family without a seed.
Graph generate(const GraphFamily& family, std::optional<std::uint64_t> seed = std::nullopt);

/// Largest order all_labeled_graphs() accepts without `allow_large`.
inline constexpr int kLabeledCorpusLimit = 6;
/// Hard ceiling: the upper triangle must fit in a 64-bit pattern.
inline constexpr int kLabeledCorpusCeiling = 11;

/// The labeled graph on n vertices whose upper-triangle bits, in graph6
/// column order with pair 0 as the least significant bit, equal `pattern`.
Graph labeled_graph_from_pattern(int n, std::uint64_t pattern);

/// Calls `visit` on every labeled simple graph on n vertices exactly once,
/// in increasing pattern order. Orders above kLabeledCorpusLimit require
/// `allow_large`.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit,
                            bool allow_large = false);

std::vector<Graph> all_labeled_graphs(int n, bool allow_large = false);

}  // namespace compnum
