#include "compnum/cover.hpp"

#include <algorithm>
#include <map>
#include <limits>

namespace compnum {
namespace {

using Bits = CoverInstance::Bits;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Depth-first branch and bound over candidate choices.
//
// Branching: the uncovered element with the fewest usable candidates
// (ties to the smallest element), trying its candidates in index order.
// A candidate tried in one branch is withheld from its later siblings,
// since every cover containing it was already explored.
//
// Bound: greedily pack uncovered elements whose usable candidate sets are
// pairwise disjoint; each needs its own candidate.
class CoverSearch {
 public:
  CoverSearch(const CoverInstance& instance, Bits usable)
      : candidates_(instance.candidates()), usable_(std::move(usable)) {
    const std::size_t universe = instance.universe_size();
    containing_.assign(universe, Bits(candidates_.size()));
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (!usable_.test(c)) continue;
      for (auto e = candidates_[c].find_first(); e != Bits::npos; e = candidates_[c].find_next(e)) {
        containing_[e].set(c);
      }
    }
    scratch_ = Bits(candidates_.size());
    packed_ = Bits(candidates_.size());
  }

  // Best cover of `uncovered` using fewer than `bound` candidates. With
  // `first_only`, returns as soon as any such cover is found.
  std::optional<std::vector<std::size_t>> run(const Bits& uncovered, std::size_t bound,
                                              bool first_only) {
    bound_ = bound;
    first_only_ = first_only;
    found_ = false;
    best_.clear();
    current_.clear();
    search(uncovered, usable_);
    if (!found_) return std::nullopt;
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::size_t lower_bound(const Bits& uncovered, const Bits& available) {
    packed_.reset();
    std::size_t count = 0;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      scratch_ = containing_[e];
      scratch_ &= available;
      if (scratch_.none()) return kNone;
      if (!scratch_.intersects(packed_)) {
        packed_ |= scratch_;
        ++count;
      }
    }
    return count;
  }

  void search(const Bits& uncovered, Bits available) {
    if (first_only_ && found_) return;
    if (uncovered.none()) {
      if (current_.size() < bound_) {
        bound_ = current_.size();
        best_ = current_;
        found_ = true;
      }
      return;
    }
    const std::size_t lb = lower_bound(uncovered, available);
    if (lb == kNone || current_.size() + lb >= bound_) return;

    std::size_t branch_element = Bits::npos;
    std::size_t fewest = kNone;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      scratch_ = containing_[e];
      scratch_ &= available;
      const std::size_t options = scratch_.count();
      if (options < fewest) {
        fewest = options;
        branch_element = e;
      }
    }
    Bits options = containing_[branch_element];
    options &= available;
    for (auto c = options.find_first(); c != Bits::npos; c = options.find_next(c)) {
      current_.push_back(c);
      search(uncovered - candidates_[c], available);
      current_.pop_back();
      if (first_only_ && found_) return;
      available.reset(c);
      if (current_.size() + 1 >= bound_) return;
    }
  }

  const std::vector<Bits>& candidates_;
  Bits usable_;
  std::vector<Bits> containing_;
  Bits scratch_;
  Bits packed_;
  std::size_t bound_ = 0;
  bool first_only_ = false;
  bool found_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

Bits full_universe(const CoverInstance& instance) {
  Bits all(instance.universe_size());
  all.set();
  return all;
}

Bits all_candidates(const CoverInstance& instance) {
  Bits all(instance.candidate_count());
  all.set();
  return all;
}

void require_coverable(const CoverInstance& instance) {
  Bits reached(instance.universe_size());
  for (const Bits& c : instance.candidates()) reached |= c;
  if (!reached.all()) {
    reached.flip();
    throw InfeasibleCover(instance.universe()[reached.find_first()]);
  }
}

// Largest-gain greedy; only used to seed the search with an upper bound.
std::vector<std::size_t> greedy_cover(const CoverInstance& instance) {
  Bits uncovered = full_universe(instance);
  std::vector<std::size_t> chosen;
  while (uncovered.any()) {
    std::size_t best = 0;
    std::size_t gain = 0;
    for (std::size_t c = 0; c < instance.candidate_count(); ++c) {
      const std::size_t g = (instance.candidate(c) & uncovered).count();
      if (g > gain) {
        gain = g;
        best = c;
      }
    }
    chosen.push_back(best);
    uncovered -= instance.candidate(best);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<std::size_t> optimal_cover(const CoverInstance& instance) {
  require_coverable(instance);
  std::vector<std::size_t> best = greedy_cover(instance);
  if (best.size() <= 1) return best;
  CoverSearch search(instance, all_candidates(instance));
  if (auto better = search.run(full_universe(instance), best.size(), false)) best = *better;
  return best;
}

}  // namespace

CoverInstance::CoverInstance(std::vector<ElementId> universe,
                             const std::vector<std::vector<ElementId>>& candidates) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  ids_ = std::move(universe);
  std::map<ElementId, std::size_t> position;
  for (std::size_t i = 0; i < ids_.size(); ++i) position.emplace(ids_[i], i);
  candidates_.reserve(candidates.size());
  for (const auto& members : candidates) {
    Bits bits(ids_.size());
    for (ElementId id : members) {
      if (auto it = position.find(id); it != position.end()) bits.set(it->second);
    }
    candidates_.push_back(std::move(bits));
  }
}

CoverInstance CoverInstance::dense(std::size_t universe_size, std::vector<Bits> candidates) {
  CoverInstance out;
  out.ids_.resize(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) out.ids_[i] = static_cast<ElementId>(i);
  for (Bits& c : candidates) c.resize(universe_size);
  out.candidates_ = std::move(candidates);
  return out;
}

std::size_t min_set_cover_size(const CoverInstance& instance) {
  return optimal_cover(instance).size();
}

CoverSolution min_set_cover(const CoverInstance& instance) {
  const std::size_t size = optimal_cover(instance).size();

  // Fix positions one at a time: the smallest index that still admits an
  // optimal completion from strictly larger indices.
  CoverSolution solution;
  solution.size = size;
  Bits uncovered = full_universe(instance);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < size; ++slot) {
    const std::size_t remaining = size - slot - 1;
    for (std::size_t c = next; c < instance.candidate_count(); ++c) {
      if (!instance.candidate(c).intersects(uncovered)) continue;
      Bits rest = uncovered - instance.candidate(c);
      bool completes = rest.none();
      if (!completes && remaining > 0) {
        Bits later(instance.candidate_count());
        for (std::size_t d = c + 1; d < instance.candidate_count(); ++d) later.set(d);
        CoverSearch search(instance, std::move(later));
        completes = search.run(rest, remaining + 1, true).has_value();
      }
      if (completes) {
        solution.chosen.push_back(c);
        uncovered = std::move(rest);
        next = c + 1;
        break;
      }
    }
  }
  return solution;
}

std::optional<CoverSolution> cover_within(const CoverInstance& instance, std::size_t limit) {
  Bits uncovered = full_universe(instance);
  if (uncovered.none()) return CoverSolution{};
  CoverSearch search(instance, all_candidates(instance));
  auto found = search.run(uncovered, limit + 1, true);
  if (!found) return std::nullopt;
  return CoverSolution{found->size(), std::move(*found)};
}

// ---------------------------------------------------------------------------

namespace {

// Candidates are the maximal cliques of g, each restricted to the edges of f.
CoverInstance edge_cover_instance(const EdgeSet& f, const Graph& g,
                                  const std::vector<VertexSet>& cliques) {
  const int n = g.order();
  std::vector<std::size_t> index(static_cast<std::size_t>(n * n), kNone);
  std::size_t i = 0;
  for (const Edge& e : f) index[static_cast<std::size_t>(e.u * n + e.v)] = i++;
  std::vector<Bits> candidates;
  candidates.reserve(cliques.size());
  for (VertexSet clique : cliques) {
    Bits bits(f.size());
    for (Vertex u : clique) {
      for (Vertex v : clique - VertexSet::range(u + 1)) {
        const std::size_t at = index[static_cast<std::size_t>(u * n + v)];
        if (at != kNone) bits.set(at);
      }
    }
    candidates.push_back(std::move(bits));
  }
  return CoverInstance::dense(f.size(), std::move(candidates));
}

void require_edges_of(const EdgeSet& f, const Graph& g) {
  for (const Edge& e : f) {
    if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("pair " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not an edge of the host graph");
    }
  }
}

}  // namespace

int edge_clique_cover_number(const EdgeSet& f, const Graph& g) {
  require_edges_of(f, g);
  if (f.empty()) return 0;
  const auto cliques = maximal_cliques(g).cliques;
  return static_cast<int>(min_set_cover_size(edge_cover_instance(f, g, cliques)));
}

int edge_clique_cover_number(const Graph& g) { return edge_clique_cover_number(g.edge_set(), g); }

int vertex_clique_cover_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const auto cliques = maximal_cliques(g).cliques;
  std::vector<Bits> candidates;
  for (VertexSet clique : cliques) {
    Bits bits(static_cast<std::size_t>(g.order()));
    for (Vertex v : clique) bits.set(static_cast<std::size_t>(v));
    candidates.push_back(std::move(bits));
  }
  return static_cast<int>(
      min_set_cover_size(CoverInstance::dense(static_cast<std::size_t>(g.order()), candidates)));
}

CliqueFamily min_edge_clique_cover(const EdgeSet& f, const Graph& g) {
  require_edges_of(f, g);
  CliqueFamily out;
  if (f.empty()) return out;
  const auto cliques = maximal_cliques(g).cliques;
  for (std::size_t c : min_set_cover(edge_cover_instance(f, g, cliques)).chosen) {
    out.cliques.push_back(cliques[c]);
  }
  return out;
}

}  // namespace compnum
