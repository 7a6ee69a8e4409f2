#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compnum/cover.hpp"
#include "compnum/digraph.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// C(D): x and y adjacent iff x != y and they share an out-neighbour.
/// Defined for any digraph, acyclic or not.
Graph competition_graph(const Digraph& d);

struct VerificationResult {
  bool ok = false;
  /// Empty on success; otherwise names the first violated condition.
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Checks that d is acyclic and C(d) equals g plus k isolated vertices
/// labeled n..n+k-1. Throws std::invalid_argument if d.order() != n + k.
VerificationResult verify_realization(const Graph& g, int k, const Digraph& d);

/// Certificate that k(G) <= k.
struct RealizationWitness {
  int k = 0;
  /// On n + k vertices; labels n..n+k-1 are the added isolated vertices.
  Digraph digraph;
  /// Acyclic ordering of `digraph` with every added vertex after every
  /// original vertex.
  std::vector<Vertex> ordering;
};

enum class SearchStatus { kFeasible, kInfeasible, kBudgetExceeded };

struct FeasibilityResult {
  SearchStatus status = SearchStatus::kInfeasible;
  std::optional<RealizationWitness> witness;
  std::uint64_t nodes = 0;
};

/// Decides whether G plus k isolated vertices is the competition graph of
/// an acyclic digraph. kInfeasible is a proof; kBudgetExceeded means the
/// node budget ran out first.
FeasibilityResult feasible_with_k(const Graph& g, int k,
                                  std::optional<std::uint64_t> node_budget = std::nullopt);

struct ExactOptions {
  /// First k tried; defaults to the best lower bound available.
  std::optional<int> start_k;
  /// Total search nodes across all k tried.
  std::optional<std::uint64_t> node_budget;
};

struct CompetitionNumberResult {
  /// lower_bound == upper_bound and `witness` realizes it.
  bool exact = false;
  /// Every k below this was refuted (or bounded away).
  int lower_bound = 0;
  /// `witness` realizes this value. On budget exhaustion it is the trivial
  /// realization with one added vertex per clique of a minimum edge clique cover.
  int upper_bound = 0;
  RealizationWitness witness;
  std::uint64_t nodes = 0;
};

/// k(G) by iterative deepening from a lower bound. Throws for n = 0.
CompetitionNumberResult exact_competition_number(const Graph& g, const ExactOptions& options = {});

/// The clique family built in the standard proof of the subset lower bound:
/// with W the last m original vertices of the witness ordering and v_first
/// the first of them, one member N^-(x) & N_G[W] for each x in
/// (W + added vertices) - {v_first}.
struct LemmaCover {
  VertexSet window;       // W
  VertexSet closure;      // N_G[W]
  std::vector<Vertex> sources;  // the x of each member, in the same order
  /// Exactly m + k - 1 members, empty ones retained, in G's labels.
  CliqueFamily family;
  std::size_t empty_members = 0;
  std::size_t distinct_nonempty = 0;
};

/// Throws std::invalid_argument when m is out of range or the witness does
/// not verify against g.
LemmaCover lemma_witness_cover(const Graph& g, const RealizationWitness& w, int m);

}  // namespace compnum
