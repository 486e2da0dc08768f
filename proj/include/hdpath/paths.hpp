#pragma once

#include <cstdint>
#include <optional>

#include "hdpath/graph.hpp"
#include "hdpath/search_budget.hpp"

namespace hdpath {

// Largest connected piece the subset DP accepts (2^24 state words).
inline constexpr int kSubsetDpCap = 24;

enum class Engine {
    automatic,         // subset DP on pieces up to kSubsetDpCap, search above
    subset_dp,         // throws DomainError if a piece exceeds the cap
    branch_and_bound,  // budgeted DFS with reachability bounds
};

template <class Witness>
struct Longest {
    int length = 0;                  // vertex count of the best witness
    std::optional<Witness> witness;  // empty only when length == 0
    bool optimal = true;             // false when the budget ran out
    std::uint64_t nodes = 0;
};
using LongestPath = Longest<PathWitness>;
using LongestCycle = Longest<CycleWitness>;

// Is there a path on exactly m vertices? Depth-limited DFS from every start
// vertex, ascending, skipping components smaller than m and pruning on the
// number of unused vertices still reachable. m >= 1.
SearchResult<PathWitness> contains_path(const Graph& g, int m,
                                        const SearchBudget& budget = SearchBudget::unlimited());

// Maximum number of vertices on a path, solved per connected component.
LongestPath longest_path(const Graph& g, const SearchBudget& budget = SearchBudget::unlimited(),
                         Engine engine = Engine::automatic);

// Circumference (0 for forests), solved per block since every cycle lies
// inside one biconnected component.
LongestCycle longest_cycle(const Graph& g, const SearchBudget& budget = SearchBudget::unlimited(),
                           Engine engine = Engine::automatic);

}  // namespace hdpath
