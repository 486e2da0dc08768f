#pragma once

#include <vector>

#include "hdpath/graph.hpp"
#include "hdpath/search_budget.hpp"

namespace hdpath {

// Cycle containing every vertex of X. Such a cycle alternates sides, so it
// has exactly |X| vertices from each part. Backtracks over X-orders (X
// visited in ascending-degree order, starting from the lowest-degree vertex)
// and distinct Y-connectors. Requires |X| >= 2.
SearchResult<CycleWitness> find_cycle_through_X(
    const Bipartition& b, const SearchBudget& budget = SearchBudget::unlimited());

// Cycle containing every vertex of `required` in an arbitrary graph, by plain
// DFS over paths rooted at the lowest required vertex. Shares no code with
// find_cycle_through_X and serves as its cross-check.
SearchResult<CycleWitness> find_cycle_containing(
    const Graph& g, const VertexSet& required,
    const SearchBudget& budget = SearchBudget::unlimited());

enum class PathHypotheses {
    jackson,    // |X| <= d+1, |Y| <= 2d-1
    essential,  // connected, |X| <= d, |Y| <= 3d-3
};

// Path containing all of X, found by joining an apex to every X vertex,
// searching for a cycle through X, and deleting the apex. d is the minimum
// degree over X. Unless `force` is set the chosen hypotheses are checked
// first (HypothesisViolation); under them a path always exists, so an
// exhaustive miss throws LemmaViolation. Requires |X| >= 1.
SearchResult<PathWitness> find_path_through_X(
    const Bipartition& b, PathHypotheses mode,
    const SearchBudget& budget = SearchBudget::unlimited(), bool force = false);

// Pairwise vertex-disjoint paths.
struct PathCover {
    std::vector<PathWitness> paths;
    VertexSet vertices() const;
};

// At most t+1 disjoint paths covering X, via t apexes and
// find_path_through_X. Hypotheses (d = minimum degree over X):
// |X| <= d+t and |Y| <= 3d+2t-3.
SearchResult<PathCover> path_cover_of_X(const Bipartition& b, int t,
                                        const SearchBudget& budget = SearchBudget::unlimited(),
                                        bool force = false);

// Path whose two ends have degree >= d and whose vertex set contains every
// vertex of `family`. Preconditions (DomainError): |V(g)| <= 2d+1, family
// non-empty, valid and pairwise disjoint, all family ends of degree >= d.
// A path always exists under them; an exhaustive miss throws LemmaViolation.
SearchResult<PathWitness> merge_high_end_paths(
    const Graph& g, int d, const PathCover& family,
    const SearchBudget& budget = SearchBudget::unlimited());

}  // namespace hdpath
