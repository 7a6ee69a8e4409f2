#include "compnum/realizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "compnum/bounds.hpp"

namespace compnum {

Graph competition_graph(const Digraph& d) {
  Graph g(d.order());
  for (Vertex x = 0; x < d.order(); ++x) {
    for (Vertex y = x + 1; y < d.order(); ++y) {
      if (d.out_neighbors(x).intersects(d.out_neighbors(y))) g.add_edge(x, y);
    }
  }
  return g;
}

VerificationResult verify_realization(const Graph& g, int k, const Digraph& d) {
  const int n = g.order();
  if (k < 0 || d.order() != n + k) {
    throw std::invalid_argument("digraph has " + std::to_string(d.order()) +
                                " vertices, expected " + std::to_string(n) + " + " +
                                std::to_string(k));
  }
  const TopologicalOrder topo = topological_order(d);
  if (!topo.acyclic) {
    std::string cycle;
    for (Vertex v : topo.cycle) cycle += (cycle.empty() ? "" : "->") + std::to_string(v);
    return {false, "cycle found: " + cycle};
  }
  const Graph c = competition_graph(d);
  for (Vertex x = 0; x < d.order(); ++x) {
    for (Vertex y = x + 1; y < d.order(); ++y) {
      const bool have = c.adjacent(x, y);
      const auto pair = std::to_string(x) + "-" + std::to_string(y);
      if (y >= n) {
        if (have) return {false, "non-isolated added vertex: edge " + pair};
      } else if (have && !g.adjacent(x, y)) {
        return {false, "extra edge " + pair};
      } else if (!have && g.adjacent(x, y)) {
        return {false, "missing edge " + pair};
      }
    }
  }
  return {true, {}};
}

namespace {

// Search space for "G + I_k is a competition graph of an acyclic digraph".
//
// Normalization: given any realizing acyclic D, delete every arc leaving an
// added vertex z. The prey of z has an in-neighbourhood containing z; if it
// has another member, that member and z would be adjacent in C(D), which is
// impossible for isolated z, so the arc was the only one into that prey and
// covered nothing. Then every added vertex is a sink, and they can all be
// moved to the end of the ordering. What remains is:
//
//   - an ordering v_1..v_n of V(G),
//   - for each position i an in-neighbourhood F_i, a clique of G inside
//     {v_1..v_{i-1}},
//   - at most k further cliques (in-neighbourhoods of the added vertices)
//     covering every edge no F_i covers.
//
// F_i may be enlarged to a maximal clique of G[{v_1..v_{i-1}}]: the new
// arcs only create edges of G and respect the ordering. Positions 1 and 2
// cover no edge and are skipped. Whether a state can be completed depends
// only on the placed set and the uncovered edges, so failures are memoized
// on that pair.
class RealizationSearch {
 public:
  RealizationSearch(const Graph& g, int k, std::optional<std::uint64_t> budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget) {
    edge_index_.assign(static_cast<std::size_t>(n_ * n_), -1);
    for (const Edge& e : g.edges()) {
      edge_index_[static_cast<std::size_t>(e.u * n_ + e.v)] = static_cast<int>(edges_.size());
      edges_.push_back(e);
      // Edges e, f fit in one clique iff f's endpoints lie in this set.
      compatible_.push_back((g.neighbors(e.u) & g.neighbors(e.v)) | VertexSet{e.u, e.v});
    }
    words_ = (edges_.size() + 63) / 64;
    for (VertexSet c : maximal_cliques(g).cliques) {
      Bits mask = clique_mask(c);
      if (std::any_of(mask.begin(), mask.end(), [](std::uint64_t w) { return w != 0; })) {
        residue_cliques_.push_back(c);
        residue_masks_.push_back(std::move(mask));
      }
    }
  }

  FeasibilityResult run() {
    Bits all(words_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    const bool found = dfs(VertexSet(), all);
    FeasibilityResult result;
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kFeasible;
      result.witness = assemble();
    } else {
      result.status = exhausted_ ? SearchStatus::kBudgetExceeded : SearchStatus::kInfeasible;
    }
    return result;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  struct StateHash {
    std::size_t operator()(const Bits& key) const {
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (std::uint64_t w : key) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
      return h;
    }
  };

  struct Choice {
    VertexSet clique;
    Bits mask;
  };

  static constexpr std::size_t kMemoCapacity = 4'000'000;

  Bits clique_mask(VertexSet c) const {
    Bits mask(words_, 0);
    for (Vertex u : c) {
      for (Vertex v : c - VertexSet::range(u + 1)) {
        const int i = edge_index_[static_cast<std::size_t>(u * n_ + v)];
        mask[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
    return mask;
  }

  template <typename Visit>
  void for_each_edge(const Bits& set, Visit&& visit) const {
    for (std::size_t w = 0; w < set.size(); ++w) {
      for (std::uint64_t rest = set[w]; rest != 0; rest &= rest - 1) {
        visit(w * 64 + static_cast<std::size_t>(std::countr_zero(rest)));
      }
    }
  }

  static bool none(const Bits& set) {
    return std::all_of(set.begin(), set.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Uncovered edges pairwise incompatible with each other need distinct cliques.
  int disjoint_lower_bound(const Bits& uncovered) const {
    std::vector<std::size_t> picked;
    for_each_edge(uncovered, [&](std::size_t e) {
      const Edge& f = edges_[e];
      for (std::size_t p : picked) {
        if (compatible_[p].contains(f.u) && compatible_[p].contains(f.v)) return;
      }
      picked.push_back(e);
    });
    return static_cast<int>(picked.size());
  }

  // Cliques of G covering `uncovered` using at most k members.
  std::optional<std::vector<VertexSet>> residue_cover(const Bits& uncovered) const {
    if (none(uncovered)) return std::vector<VertexSet>{};
    std::vector<std::size_t> members;
    for_each_edge(uncovered, [&](std::size_t e) { members.push_back(e); });
    std::vector<CoverInstance::Bits> candidates;
    candidates.reserve(residue_masks_.size());
    for (const Bits& mask : residue_masks_) {
      CoverInstance::Bits bits(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((mask[members[i] / 64] >> (members[i] % 64)) & 1U) bits.set(i);
      }
      candidates.push_back(std::move(bits));
    }
    auto cover = cover_within(CoverInstance::dense(members.size(), std::move(candidates)),
                              static_cast<std::size_t>(k_));
    if (!cover) return std::nullopt;
    std::vector<VertexSet> out;
    for (std::size_t c : cover->chosen) out.push_back(residue_cliques_[c]);
    return out;
  }

  const std::vector<Choice>& choices(VertexSet placed) {
    auto [it, inserted] = choice_cache_.try_emplace(placed.bits());
    if (inserted) {
      for (VertexSet c : maximal_cliques_within(g_, placed)) {
        it->second.push_back({c, clique_mask(c)});
      }
    }
    return it->second;
  }

  bool dfs(VertexSet placed, const Bits& uncovered) {
    if (budget_ && nodes_ >= *budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;

    const int lb = disjoint_lower_bound(uncovered);
    const int slots = std::max(0, n_ - std::max(placed.size(), 2));
    if (slots + k_ < lb) return false;
    if (lb <= k_) {
      if (auto cover = residue_cover(uncovered)) {
        residue_ = std::move(*cover);
        for (Vertex v : g_.vertices() - placed) sequence_.push_back({v, VertexSet()});
        return true;
      }
    }
    if (placed.size() == n_) return false;

    Bits key = uncovered;
    key.push_back(placed.bits());
    if (failed_.contains(key)) return false;

    // Candidate in-neighbourhoods for the next position, keeping only those
    // whose newly covered edges are not strictly contained in another's.
    std::vector<std::pair<VertexSet, Bits>> moves;
    if (placed.size() >= 2) {
      std::vector<std::pair<VertexSet, Bits>> gains;
      for (const Choice& c : choices(placed)) {
        Bits gain(words_);
        for (std::size_t w = 0; w < words_; ++w) gain[w] = c.mask[w] & uncovered[w];
        gains.emplace_back(c.clique, std::move(gain));
      }
      auto subset = [](const Bits& a, const Bits& b) {
        for (std::size_t w = 0; w < a.size(); ++w) {
          if (a[w] & ~b[w]) return false;
        }
        return true;
      };
      std::vector<bool> keep(gains.size(), true);
      for (std::size_t i = 0; i < gains.size(); ++i) {
        for (std::size_t j = 0; j < gains.size() && keep[i]; ++j) {
          if (i == j) continue;
          const bool within = subset(gains[i].second, gains[j].second);
          const bool equal = within && subset(gains[j].second, gains[i].second);
          keep[i] = !(within && (!equal || j < i));
        }
      }
      for (std::size_t i = 0; i < gains.size(); ++i) {
        if (keep[i]) moves.push_back(std::move(gains[i]));
      }
    } else {
      moves.emplace_back(VertexSet(), Bits(words_, 0));
    }

    Bits next(words_);
    for (Vertex v : g_.vertices() - placed) {
      for (const auto& [clique, gain] : moves) {
        for (std::size_t w = 0; w < words_; ++w) next[w] = uncovered[w] & ~gain[w];
        sequence_.push_back({v, clique});
        VertexSet grown = placed;
        grown.insert(v);
        if (dfs(grown, next)) return true;
        sequence_.pop_back();
        if (exhausted_) return false;
      }
    }
    if (failed_.size() < kMemoCapacity) failed_.insert(std::move(key));
    return false;
  }

  RealizationWitness assemble() const {
    RealizationWitness w;
    w.k = k_;
    w.digraph = Digraph(n_ + k_);
    for (const auto& [v, prey_of] : sequence_) {
      w.ordering.push_back(v);
      for (Vertex u : prey_of) w.digraph.add_arc(u, v);
    }
    for (int j = 0; j < k_; ++j) {
      w.ordering.push_back(n_ + j);
      if (j < static_cast<int>(residue_.size())) {
        for (Vertex u : residue_[j]) w.digraph.add_arc(u, n_ + j);
      }
    }
    return w;
  }

  const Graph& g_;
  const int n_;
  const int k_;
  const std::optional<std::uint64_t> budget_;

  std::vector<Edge> edges_;
  std::vector<int> edge_index_;
  std::vector<VertexSet> compatible_;
  std::size_t words_ = 0;
  std::vector<VertexSet> residue_cliques_;
  std::vector<Bits> residue_masks_;
  std::unordered_map<std::uint64_t, std::vector<Choice>> choice_cache_;
  std::unordered_set<Bits, StateHash> failed_;

  std::vector<std::pair<Vertex, VertexSet>> sequence_;
  std::vector<VertexSet> residue_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// One added vertex per clique of a minimum edge clique cover.
RealizationWitness clique_cover_witness(const Graph& g, int k) {
  const int n = g.order();
  const CliqueFamily cover = min_edge_clique_cover(g.edge_set(), g);
  if (static_cast<int>(cover.size()) > k) {
    throw std::logic_error("clique cover witness needs k >= theta_E");
  }
  RealizationWitness w;
  w.k = k;
  w.digraph = Digraph(n + k);
  for (Vertex v = 0; v < n + k; ++v) w.ordering.push_back(v);
  for (std::size_t j = 0; j < cover.size(); ++j) {
    for (Vertex u : cover.cliques[j]) w.digraph.add_arc(u, n + static_cast<Vertex>(j));
  }
  return w;
}

void check_witness(const Graph& g, const RealizationWitness& w) {
  const auto verdict = verify_realization(g, w.k, w.digraph);
  if (!verdict || !is_acyclic_ordering(w.digraph, w.ordering)) {
    throw std::logic_error("constructed witness failed verification: " + verdict.diagnostic);
  }
}

}  // namespace

FeasibilityResult feasible_with_k(const Graph& g, int k, std::optional<std::uint64_t> node_budget) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (g.order() + k > kMaxOrder) {
    throw std::invalid_argument("n + k exceeds " + std::to_string(kMaxOrder));
  }
  RealizationSearch search(g, k, node_budget);
  FeasibilityResult result = search.run();
  if (result.witness) check_witness(g, *result.witness);
  return result;
}

CompetitionNumberResult exact_competition_number(const Graph& g, const ExactOptions& options) {
  if (g.order() == 0) {
    throw std::invalid_argument("competition number of the empty graph is not defined here");
  }
  int k = 0;
  if (options.start_k) {
    if (*options.start_k < 0) throw std::invalid_argument("start k must be nonnegative");
    k = *options.start_k;
  } else {
    // The general bound already dominates both classical bounds for n >= 2,
    // and the edge bound does not hold for n = 1.
    k = clamp_bound(general_bound(g).general);
  }
  const int cover_size = edge_clique_cover_number(g);

  CompetitionNumberResult result;
  std::uint64_t used = 0;
  for (;; ++k) {
    if (k >= cover_size) {
      result.exact = true;
      result.lower_bound = result.upper_bound = k;
      result.witness = clique_cover_witness(g, k);
      break;
    }
    std::optional<std::uint64_t> remaining;
    if (options.node_budget) remaining = *options.node_budget - std::min(used, *options.node_budget);
    FeasibilityResult attempt = feasible_with_k(g, k, remaining);
    used += attempt.nodes;
    if (attempt.status == SearchStatus::kFeasible) {
      result.exact = true;
      result.lower_bound = result.upper_bound = k;
      result.witness = std::move(*attempt.witness);
      break;
    }
    if (attempt.status == SearchStatus::kBudgetExceeded) {
      result.exact = false;
      result.lower_bound = k;
      result.upper_bound = cover_size;
      result.witness = clique_cover_witness(g, cover_size);
      break;
    }
  }
  result.nodes = used;
  check_witness(g, result.witness);
  return result;
}

LemmaCover lemma_witness_cover(const Graph& g, const RealizationWitness& w, int m) {
  const int n = g.order();
  if (m < 1 || m > n) {
    throw std::invalid_argument("m = " + std::to_string(m) + " outside [1, " + std::to_string(n) +
                                "]");
  }
  if (w.digraph.order() != n + w.k) throw std::invalid_argument("witness has the wrong order");
  if (auto verdict = verify_realization(g, w.k, w.digraph); !verdict) {
    throw std::invalid_argument("witness does not verify: " + verdict.diagnostic);
  }
  if (!is_acyclic_ordering(w.digraph, w.ordering)) {
    throw std::invalid_argument("witness ordering is not an acyclic ordering");
  }
  for (int i = 0; i < n; ++i) {
    if (w.ordering[i] >= n) {
      throw std::invalid_argument("witness ordering places an added vertex before an original one");
    }
  }

  LemmaCover out;
  for (int i = n - m; i < n; ++i) out.window.insert(w.ordering[i]);
  out.closure = closed_neighborhood_set(g, out.window);
  for (int i = n - m + 1; i < n; ++i) out.sources.push_back(w.ordering[i]);
  for (int j = 0; j < w.k; ++j) out.sources.push_back(n + j);

  std::vector<VertexSet> distinct;
  for (Vertex x : out.sources) {
    const VertexSet member = w.digraph.in_neighbors(x) & out.closure;
    out.family.cliques.push_back(member);
    if (member.empty()) {
      ++out.empty_members;
    } else if (std::find(distinct.begin(), distinct.end(), member) == distinct.end()) {
      distinct.push_back(member);
    }
  }
  out.distinct_nonempty = distinct.size();
  return out;
}

}  // namespace compnum
