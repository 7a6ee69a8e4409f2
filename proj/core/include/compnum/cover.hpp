#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "compnum/graph.hpp"

namespace compnum {

// ---------------------------------------------------------------------------
// Clique families
// ---------------------------------------------------------------------------

/// Ordered list of vertex sets meant to be cliques of some host graph.
struct CliqueFamily {
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
  /// Every member is a clique of `host`.
  bool all_cliques_of(const Graph& host) const;
  /// Every edge of `edges` lies inside some member.
  bool covers(const EdgeSet& edges) const;
  /// Every vertex of `vertices` lies in some member.
  bool covers(VertexSet vertices) const;
};

/// All inclusion-maximal cliques, each once, sorted by member list.
/// Isolated vertices appear as singletons; the empty graph yields no cliques.
CliqueFamily maximal_cliques(const Graph& g);

/// Maximal cliques of the subgraph induced by `within`, in original labels.
/// Same ordering and conventions as maximal_cliques().
std::vector<VertexSet> maximal_cliques_within(const Graph& g, VertexSet within);

// ---------------------------------------------------------------------------
// Exact minimum set cover
// ---------------------------------------------------------------------------

using ElementId = std::int64_t;

class InfeasibleCover : public std::runtime_error {
 public:
  explicit InfeasibleCover(ElementId element)
      : std::runtime_error("element " + std::to_string(element) + " is in no candidate"),
        element_(element) {}
  ElementId element() const { return element_; }

 private:
  ElementId element_;
};

/// A universe of element ids and a list of candidate subsets. Elements are
/// remapped to dense positions 0..size()-1 in ascending id order; candidate
/// members outside the universe are dropped on construction.
class CoverInstance {
 public:
  using Bits = boost::dynamic_bitset<>;

  CoverInstance(std::vector<ElementId> universe,
                const std::vector<std::vector<ElementId>>& candidates);

  /// Universe {0..universe_size-1}; candidates already in dense form.
  static CoverInstance dense(std::size_t universe_size, std::vector<Bits> candidates);

  std::size_t universe_size() const { return ids_.size(); }
  std::size_t candidate_count() const { return candidates_.size(); }
  const std::vector<ElementId>& universe() const { return ids_; }
  const Bits& candidate(std::size_t index) const { return candidates_[index]; }
  const std::vector<Bits>& candidates() const { return candidates_; }

 private:
  CoverInstance() = default;

  std::vector<ElementId> ids_;
  std::vector<Bits> candidates_;
};

struct CoverSolution {
  std::size_t size = 0;
  /// Ascending candidate indices.
  std::vector<std::size_t> chosen;
};

/// Minimum-cardinality cover. Among optimal covers, returns the one whose
/// sorted index list is lexicographically smallest. Throws InfeasibleCover
/// naming the smallest uncoverable element.
CoverSolution min_set_cover(const CoverInstance& instance);

/// Size of a minimum cover only; cheaper than min_set_cover().
std::size_t min_set_cover_size(const CoverInstance& instance);

/// Some cover of size <= limit, or nullopt when none exists.
std::optional<CoverSolution> cover_within(const CoverInstance& instance, std::size_t limit);

// ---------------------------------------------------------------------------
// Clique cover numbers
// ---------------------------------------------------------------------------

/// theta_E(G): fewest cliques covering every edge.
int edge_clique_cover_number(const Graph& g);

/// theta_E(F; G): fewest cliques of G covering every edge in F.
/// Throws std::invalid_argument unless F is a subset of E(G).
int edge_clique_cover_number(const EdgeSet& f, const Graph& g);

/// theta_V(G): fewest cliques containing every vertex. 0 for the empty graph.
int vertex_clique_cover_number(const Graph& g);

/// A minimum edge clique cover of F in G built from maximal cliques.
CliqueFamily min_edge_clique_cover(const EdgeSet& f, const Graph& g);

}  // namespace compnum
