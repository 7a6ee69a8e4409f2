#include "compnum/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace compnum {
namespace {

int as_count(const GraphFamily& family, std::size_t index) {
  const double raw = family.params.at(index);
  if (raw < 0 || raw != std::floor(raw) || raw > kMaxOrder) {
    throw std::invalid_argument(family.name + ": parameter " + std::to_string(index + 1) +
                                " must be an integer in [0, " + std::to_string(kMaxOrder) + "]");
  }
  return static_cast<int>(raw);
}

void expect_params(const GraphFamily& family, std::size_t count) {
  if (family.params.size() != count) {
    throw std::invalid_argument(family.name + " expects " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(family.params.size()));
  }
}

}  // namespace

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::invalid_argument("multipartite parts must be nonempty");
    n += parts[p];
    if (n > kMaxOrder) throw std::invalid_argument("multipartite graph too large");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      // 53 random mantissa bits; identical on every standard library.
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) g.add_edge(u, v);
    }
  }
  return g;
}

Graph generate(const GraphFamily& family, std::optional<std::uint64_t> seed) {
  const std::string& name = family.name;
  if (name == "path") {
    expect_params(family, 1);
    return path_graph(as_count(family, 0));
  }
  if (name == "cycle") {
    expect_params(family, 1);
    return cycle_graph(as_count(family, 0));
  }
  if (name == "complete") {
    expect_params(family, 1);
    return complete_graph(as_count(family, 0));
  }
  if (name == "edgeless") {
    expect_params(family, 1);
    return edgeless_graph(as_count(family, 0));
  }
  if (name == "star") {
    expect_params(family, 1);
    return star_graph(as_count(family, 0));
  }
  if (name == "multipartite" || name == "complete-multipartite") {
    if (family.params.empty()) throw std::invalid_argument(name + " needs at least one part");
    std::vector<int> parts;
    for (std::size_t i = 0; i < family.params.size(); ++i) parts.push_back(as_count(family, i));
    return complete_multipartite_graph(parts);
  }
  if (name == "random") {
    expect_params(family, 2);
    if (!seed) throw std::invalid_argument("random family requires an explicit seed");
    return random_graph(as_count(family, 0), family.params[1], *seed);
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

Graph labeled_graph_from_pattern(int n, std::uint64_t pattern) {
  Graph g(n);
  int bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if ((pattern >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit,
                            bool allow_large) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (n > kLabeledCorpusCeiling) {
    throw std::invalid_argument("labeled enumeration is limited to n <= " +
                                std::to_string(kLabeledCorpusCeiling));
  }
  if (n > kLabeledCorpusLimit && !allow_large) {
    throw std::invalid_argument("labeled enumeration above n = " +
                                std::to_string(kLabeledCorpusLimit) +
                                " requires an explicit override");
  }
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t count = std::uint64_t{1} << pairs;
  for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
    visit(labeled_graph_from_pattern(n, pattern));
  }
}

std::vector<Graph> all_labeled_graphs(int n, bool allow_large) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); }, allow_large);
  return out;
}

}  // namespace compnum
