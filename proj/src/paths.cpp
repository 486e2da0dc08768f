#include "hdpath/paths.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "hdpath/errors.hpp"

namespace hdpath {

namespace {

// ---------------------------------------------------------------------------
// Depth-limited search for a path on exactly `target` vertices.

class FixedLengthSearch {
public:
    FixedLengthSearch(const Graph& g, int target, BudgetTracker& tracker)
        : g_(g), target_(target), tracker_(tracker) {}

    bool from(int start, const VertexSet& component) {
        component_ = component;
        path_.assign(1, start);
        used_ = VertexSet{start};
        return extend();
    }
    const std::vector<int>& path() const { return path_; }

private:
    bool extend() {
        if (!tracker_.step()) return false;
        const int len = static_cast<int>(path_.size());
        if (len == target_) return true;
        const int end = path_.back();
        VertexSet free = component_ - used_;
        if (len + g_.reachable(end, free).size() - 1 < target_) return false;
        for (int u : g_.neighbors(end) & free) {
            path_.push_back(u);
            used_.insert(u);
            if (extend()) return true;
            used_.erase(u);
            path_.pop_back();
            if (tracker_.exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    int target_;
    BudgetTracker& tracker_;
    VertexSet component_;
    VertexSet used_;
    std::vector<int> path_;
};

// ---------------------------------------------------------------------------
// Subset DP over a piece of at most kSubsetDpCap vertices. reach[mask] holds
// the set of end vertices v such that some path visits exactly `mask` and
// ends at v; in cycle mode every path starts at the lowest bit of `mask`.

struct LocalPiece {
    std::vector<int> global;            // local -> global index
    std::vector<std::uint32_t> adj;     // local adjacency masks
};

LocalPiece localise(const Graph& g, const VertexSet& piece) {
    LocalPiece p;
    p.global = piece.to_vector();
    const int c = static_cast<int>(p.global.size());
    assert(c <= kSubsetDpCap);
    p.adj.assign(c, 0);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (g.adjacent(p.global[i], p.global[j])) p.adj[i] |= std::uint32_t{1} << j;
    return p;
}

// Walks reach[] backwards from (mask, end) to recover the vertex order.
std::vector<int> reconstruct(const LocalPiece& p, const std::vector<std::uint32_t>& reach,
                             std::uint32_t mask, int end) {
    std::vector<int> rev{end};
    while (std::popcount(mask) > 1) {
        std::uint32_t prev = mask & ~(std::uint32_t{1} << end);
        std::uint32_t cand = reach[prev] & p.adj[end];
        assert(cand != 0);
        end = std::countr_zero(cand);
        mask = prev;
        rev.push_back(end);
    }
    std::reverse(rev.begin(), rev.end());
    for (int& v : rev) v = p.global[v];
    return rev;
}

std::vector<int> dp_longest_path(const Graph& g, const VertexSet& piece) {
    const LocalPiece p = localise(g, piece);
    const int c = static_cast<int>(p.global.size());
    std::vector<std::uint32_t> reach(std::size_t{1} << c, 0);
    for (int v = 0; v < c; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    std::uint32_t best_mask = 1;
    int best_len = 1;
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << c) - 1);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const std::uint32_t ends = reach[mask];
        if (!ends) continue;
        if (int len = std::popcount(mask); len > best_len) best_len = len, best_mask = mask;
        for (std::uint32_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t ext = p.adj[v] & ~mask; ext; ext &= ext - 1) {
                const int u = std::countr_zero(ext);
                reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
        if (mask == full) break;
    }
    return reconstruct(p, reach, best_mask, std::countr_zero(reach[best_mask]));
}

std::vector<int> dp_longest_cycle(const Graph& g, const VertexSet& piece) {
    const LocalPiece p = localise(g, piece);
    const int c = static_cast<int>(p.global.size());
    std::vector<std::uint32_t> reach(std::size_t{1} << c, 0);
    for (int v = 0; v < c; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    std::uint32_t best_mask = 0;
    int best_len = 0, best_end = -1;
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << c) - 1);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const std::uint32_t ends = reach[mask];
        if (!ends) continue;
        const int start = std::countr_zero(mask);
        const int len = std::popcount(mask);
        if (len >= 3 && len > best_len) {
            if (std::uint32_t closing = ends & p.adj[start]) {
                best_len = len;
                best_mask = mask;
                best_end = std::countr_zero(closing);
            }
        }
        // Extend only above the start vertex so each cycle is rooted at its minimum.
        const std::uint32_t above = ~((std::uint32_t{2} << start) - 1);
        for (std::uint32_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t ext = p.adj[v] & ~mask & above; ext; ext &= ext - 1) {
                const int u = std::countr_zero(ext);
                reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
        if (mask == full) break;
    }
    if (best_len == 0) return {};
    return reconstruct(p, reach, best_mask, best_end);
}

// ---------------------------------------------------------------------------
// Branch and bound: DFS with the bound "current length + unused vertices
// reachable from the end".

class LongestSearch {
public:
    LongestSearch(const Graph& g, BudgetTracker& tracker, bool cycle)
        : g_(g), tracker_(tracker), cycle_(cycle) {}

    // Returns the best witness found within `piece`; empty if none.
    std::vector<int> run(const VertexSet& piece) {
        best_.clear();
        const int cap = piece.size();
        for (int s : piece) {
            if (static_cast<int>(best_.size()) == cap || tracker_.exhausted()) break;
            start_ = s;
            allowed_ = piece;
            if (cycle_) allowed_ -= VertexSet::range(0, s + 1);
            allowed_.insert(s);
            path_.assign(1, s);
            used_ = VertexSet{s};
            dfs();
        }
        return best_;
    }

private:
    void dfs() {
        if (!tracker_.step()) return;
        const int len = static_cast<int>(path_.size());
        const int end = path_.back();
        if (cycle_) {
            if (len >= 3 && len > static_cast<int>(best_.size()) && g_.adjacent(end, start_))
                best_ = path_;
        } else if (len > static_cast<int>(best_.size())) {
            best_ = path_;
        }
        const VertexSet free = allowed_ - used_;
        if (len + g_.reachable(end, free).size() - 1 <= static_cast<int>(best_.size())) return;
        for (int u : g_.neighbors(end) & free) {
            path_.push_back(u);
            used_.insert(u);
            dfs();
            used_.erase(u);
            path_.pop_back();
            if (tracker_.exhausted()) return;
        }
    }

    const Graph& g_;
    BudgetTracker& tracker_;
    bool cycle_;
    int start_ = 0;
    VertexSet allowed_, used_;
    std::vector<int> path_, best_;
};

template <class Witness>
Longest<Witness> solve_pieces(const Graph& g, const std::vector<VertexSet>& pieces,
                              const SearchBudget& budget, Engine engine, bool cycle) {
    BudgetTracker tracker(budget);
    Longest<Witness> out;
    for (const auto& piece : pieces) {
        const int size = piece.size();
        if (size <= out.length) continue;
        std::vector<int> best;
        const bool use_dp = engine == Engine::subset_dp ||
                            (engine == Engine::automatic && size <= kSubsetDpCap);
        if (use_dp) {
            if (size > kSubsetDpCap)
                throw DomainError("subset DP limited to " + std::to_string(kSubsetDpCap) +
                                  " vertices per piece, got " + std::to_string(size));
            best = cycle ? dp_longest_cycle(g, piece) : dp_longest_path(g, piece);
        } else {
            best = LongestSearch(g, tracker, cycle).run(piece);
            if (tracker.exhausted()) out.optimal = false;
        }
        if (static_cast<int>(best.size()) > out.length) {
            out.length = static_cast<int>(best.size());
            out.witness = Witness{best};
        }
    }
    out.nodes = tracker.nodes();
    if (out.witness) {
        if constexpr (std::is_same_v<Witness, PathWitness>) assert(is_valid_path(g, *out.witness));
        else assert(is_valid_cycle(g, *out.witness));
    }
    return out;
}

}  // namespace

SearchResult<PathWitness> contains_path(const Graph& g, int m, const SearchBudget& budget) {
    if (m < 1) throw DomainError("contains_path: target vertex count must be >= 1");
    BudgetTracker tracker(budget);
    SearchResult<PathWitness> out;
    FixedLengthSearch search(g, m, tracker);
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < m) continue;
        for (int s : comp) {
            if (search.from(s, comp)) {
                out.outcome = Outcome::found;
                out.witness = PathWitness{search.path()};
                assert(is_valid_path(g, *out.witness) && out.witness->size() == m);
                out.nodes = tracker.nodes();
                return out;
            }
            if (tracker.exhausted()) {
                out.outcome = Outcome::inconclusive;
                out.nodes = tracker.nodes();
                return out;
            }
        }
    }
    out.outcome = Outcome::none;
    out.nodes = tracker.nodes();
    return out;
}

LongestPath longest_path(const Graph& g, const SearchBudget& budget, Engine engine) {
    return solve_pieces<PathWitness>(g, connected_components(g), budget, engine, false);
}

LongestCycle longest_cycle(const Graph& g, const SearchBudget& budget, Engine engine) {
    std::vector<VertexSet> cyclic;
    for (const auto& b : blocks(g))
        if (b.size() >= 3) cyclic.push_back(b);
    return solve_pieces<CycleWitness>(g, cyclic, budget, engine, true);
}

}  // namespace hdpath
