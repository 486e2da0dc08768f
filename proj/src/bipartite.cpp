#include "hdpath/bipartite.hpp"

#include <algorithm>
#include <cassert>

#include "hdpath/errors.hpp"
#include "hdpath/graph_io.hpp"

namespace hdpath {

namespace {

class AlternatingCycleSearch {
public:
    AlternatingCycleSearch(const Bipartition& b, BudgetTracker& tracker)
        : g_(b.graph()), x_(b.x()), y_(b.y()), tracker_(tracker) {
        order_ = x_.to_vector();
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int c) { return g_.degree(a) < g_.degree(c); });
    }

    bool run() {
        start_ = order_.front();
        cycle_.assign(1, start_);
        used_x_ = VertexSet{start_};
        used_y_ = VertexSet{};
        return extend(start_);
    }
    const std::vector<int>& cycle() const { return cycle_; }

private:
    bool extend(int end) {
        if (!tracker_.step()) return false;
        const VertexSet free_y = y_ - used_y_;
        const VertexSet remaining = x_ - used_x_;
        if (remaining.empty()) {
            const VertexSet closing = g_.neighbors(end) & g_.neighbors(start_) & free_y;
            if (closing.empty()) return false;
            cycle_.push_back(closing.first());
            return true;
        }
        if (!feasible(end, remaining, free_y)) return false;
        for (int y : g_.neighbors(end) & free_y) {
            const VertexSet next_x = g_.neighbors(y) & remaining;
            if (next_x.empty()) continue;
            used_y_.insert(y);
            cycle_.push_back(y);
            for (int x : order_) {
                if (!next_x.contains(x)) continue;
                used_x_.insert(x);
                cycle_.push_back(x);
                if (extend(x)) return true;
                cycle_.pop_back();
                used_x_.erase(x);
                if (tracker_.exhausted()) return false;
            }
            cycle_.pop_back();
            used_y_.erase(y);
        }
        return false;
    }

    // Every unvisited X vertex still needs two unused Y neighbours, the two
    // open ends one each, and |remaining|+1 connectors must be available.
    bool feasible(int end, const VertexSet& remaining, const VertexSet& free_y) const {
        if (!g_.neighbors(end).intersects(free_y)) return false;
        if (!g_.neighbors(start_).intersects(free_y)) return false;
        VertexSet pool = (g_.neighbors(end) | g_.neighbors(start_)) & free_y;
        for (int r : remaining) {
            const VertexSet ny = g_.neighbors(r) & free_y;
            if (ny.size() < 2) return false;
            pool |= ny;
        }
        return pool.size() >= remaining.size() + 1;
    }

    const Graph& g_;
    const VertexSet& x_;
    const VertexSet& y_;
    BudgetTracker& tracker_;
    std::vector<int> order_;
    int start_ = -1;
    VertexSet used_x_, used_y_;
    std::vector<int> cycle_;
};

class RequiredCycleSearch {
public:
    RequiredCycleSearch(const Graph& g, const VertexSet& required, BudgetTracker& tracker)
        : g_(g), required_(required), tracker_(tracker) {}

    bool run() {
        root_ = required_.first();
        path_.assign(1, root_);
        used_ = VertexSet{root_};
        return extend();
    }
    const std::vector<int>& path() const { return path_; }

private:
    bool extend() {
        if (!tracker_.step()) return false;
        const int end = path_.back();
        if (path_.size() >= 3 && g_.adjacent(end, root_) && required_.is_subset_of(used_))
            return true;
        const VertexSet free = g_.vertices() - used_;
        const VertexSet reach = g_.reachable(end, free);
        if (!(required_ - used_).is_subset_of(reach)) return false;
        if (!g_.neighbors(root_).intersects(reach) ) return false;
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
    VertexSet required_;
    BudgetTracker& tracker_;
    int root_ = -1;
    VertexSet used_;
    std::vector<int> path_;
};

class HighEndPathSearch {
public:
    HighEndPathSearch(const Graph& g, const VertexSet& high, const VertexSet& required,
                      BudgetTracker& tracker)
        : g_(g), high_(high), required_(required), tracker_(tracker) {}

    bool from(int s) {
        path_.assign(1, s);
        used_ = VertexSet{s};
        return extend();
    }
    const std::vector<int>& path() const { return path_; }

private:
    bool extend() {
        if (!tracker_.step()) return false;
        const int end = path_.back();
        if (high_.contains(end) && required_.is_subset_of(used_)) return true;
        const VertexSet free = g_.vertices() - used_;
        const VertexSet reach = g_.reachable(end, free);
        if (!(required_ - used_).is_subset_of(reach)) return false;
        if (!reach.intersects(high_ - used_)) return false;
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
    VertexSet high_, required_;
    BudgetTracker& tracker_;
    VertexSet used_;
    std::vector<int> path_;
};

std::string sizes(const Bipartition& b, int d) {
    return "|X|=" + std::to_string(b.x().size()) + ", |Y|=" + std::to_string(b.y().size()) +
           ", d=" + std::to_string(d);
}

// Appends `apexes` new vertices joined to all of X. The apexes join Y.
Bipartition with_apexes(const Bipartition& b, int apexes) {
    GraphBuilder gb;
    gb.append(b.graph());
    for (int i = 0; i < apexes; ++i) {
        const int a = gb.add_vertices(1);
        for (int x : b.x()) gb.add_edge(a, x);
    }
    return Bipartition(gb.build(), b.x());
}

}  // namespace

SearchResult<CycleWitness> find_cycle_through_X(const Bipartition& b,
                                                const SearchBudget& budget) {
    if (b.x().size() < 2) throw DomainError("find_cycle_through_X needs |X| >= 2");
    BudgetTracker tracker(budget);
    AlternatingCycleSearch search(b, tracker);
    SearchResult<CycleWitness> out;
    if (search.run()) {
        out.outcome = Outcome::found;
        out.witness = CycleWitness{search.cycle()};
        assert(is_valid_cycle(b.graph(), *out.witness));
        assert(out.witness->size() == 2 * b.x().size());
    } else {
        out.outcome = tracker.exhausted() ? Outcome::inconclusive : Outcome::none;
    }
    out.nodes = tracker.nodes();
    return out;
}

SearchResult<CycleWitness> find_cycle_containing(const Graph& g, const VertexSet& required,
                                                 const SearchBudget& budget) {
    if (required.empty()) throw DomainError("find_cycle_containing needs a non-empty set");
    if (!required.is_subset_of(g.vertices()))
        throw DomainError("find_cycle_containing: required vertex outside the graph");
    BudgetTracker tracker(budget);
    RequiredCycleSearch search(g, required, tracker);
    SearchResult<CycleWitness> out;
    if (search.run()) {
        out.outcome = Outcome::found;
        out.witness = CycleWitness{search.path()};
        assert(is_valid_cycle(g, *out.witness));
    } else {
        out.outcome = tracker.exhausted() ? Outcome::inconclusive : Outcome::none;
    }
    out.nodes = tracker.nodes();
    return out;
}

SearchResult<PathWitness> find_path_through_X(const Bipartition& b, PathHypotheses mode,
                                              const SearchBudget& budget, bool force) {
    const int nx = b.x().size(), ny = b.y().size();
    const int d = b.min_x_degree();
    if (nx < 1) throw DomainError("find_path_through_X needs |X| >= 1");
    bool holds = false;
    std::string wanted;
    if (mode == PathHypotheses::jackson) {
        holds = nx <= d + 1 && ny <= 2 * d - 1;
        wanted = "|X| <= d+1 and |Y| <= 2d-1";
    } else {
        holds = is_connected(b.graph()) && nx <= d && ny <= 3 * d - 3;
        wanted = "connected, |X| <= d and |Y| <= 3d-3";
    }
    if (!holds && !force)
        throw HypothesisViolation("path through X: needs " + wanted + " (" + sizes(b, d) + ")");

    SearchResult<PathWitness> out;
    if (nx == 1) {
        out.outcome = Outcome::found;
        out.witness = PathWitness{{b.x().first()}};
        return out;
    }
    const int apex = b.graph().order();
    auto cycle = find_cycle_through_X(with_apexes(b, 1), budget);
    out.nodes = cycle.nodes;
    out.outcome = cycle.outcome;
    if (cycle.found()) {
        auto vs = cycle.witness->vertices;
        if (auto it = std::find(vs.begin(), vs.end(), apex); it != vs.end()) {
            std::rotate(vs.begin(), it, vs.end());
            vs.erase(vs.begin());
        }
        out.witness = PathWitness{vs};
        assert(is_valid_path(b.graph(), *out.witness));
    } else if (cycle.outcome == Outcome::none && holds) {
        throw LemmaViolation("no path through X although the hypotheses hold (" + sizes(b, d) + ")",
                             encode_graph6(b.graph()));
    }
    return out;
}

VertexSet PathCover::vertices() const {
    VertexSet all;
    for (const auto& p : paths) all |= VertexSet::of(p.vertices);
    return all;
}

SearchResult<PathCover> path_cover_of_X(const Bipartition& b, int t, const SearchBudget& budget,
                                        bool force) {
    if (t < 1) throw DomainError("path_cover_of_X needs t >= 1");
    const int nx = b.x().size(), ny = b.y().size();
    const int d = b.min_x_degree();
    if (!(nx <= d + t && ny <= 3 * d + 2 * t - 3) && !force)
        throw HypothesisViolation("path cover: needs |X| <= d+t and |Y| <= 3d+2t-3 (" +
                                  sizes(b, d) + ", t=" + std::to_string(t) + ")");
    SearchResult<PathCover> out;
    if (nx == 0) {
        out.outcome = Outcome::found;
        out.witness = PathCover{};
        return out;
    }

    // Drop isolated Y vertices, then hang t apexes on X.
    VertexSet keep = b.x();
    for (int y : b.y())
        if (b.graph().degree(y) > 0) keep.insert(y);
    std::vector<int> old;
    Graph core = b.graph().induced(keep, &old);
    VertexSet core_x;
    for (int i = 0; i < core.order(); ++i)
        if (b.x().contains(old[i])) core_x.insert(i);
    const Bipartition augmented = with_apexes(Bipartition(core, core_x), t);

    auto path = find_path_through_X(augmented, PathHypotheses::essential, budget, force);
    out.nodes = path.nodes;
    out.outcome = path.outcome;
    if (!path.found()) return out;

    PathCover cover;
    PathWitness current;
    for (int v : path.witness->vertices) {
        if (v >= core.order()) {
            if (!current.vertices.empty()) cover.paths.push_back(std::move(current));
            current = {};
        } else {
            current.vertices.push_back(old[v]);
        }
    }
    if (!current.vertices.empty()) cover.paths.push_back(std::move(current));
    assert(static_cast<int>(cover.paths.size()) <= t + 1);
    assert(b.x().is_subset_of(cover.vertices()));
    for ([[maybe_unused]] const auto& p : cover.paths) assert(is_valid_path(b.graph(), p));
    out.witness = std::move(cover);
    return out;
}

SearchResult<PathWitness> merge_high_end_paths(const Graph& g, int d, const PathCover& family,
                                               const SearchBudget& budget) {
    if (g.order() > 2 * d + 1)
        throw DomainError("merge: graph has " + std::to_string(g.order()) +
                          " vertices, more than 2d+1 = " + std::to_string(2 * d + 1));
    if (family.paths.empty()) throw DomainError("merge: family must contain at least one path");
    const VertexSet high = high_degree_vertices(g, d);
    VertexSet required;
    for (const auto& p : family.paths) {
        if (!is_valid_path(g, p)) throw DomainError("merge: family member is not a path in g");
        const VertexSet vs = VertexSet::of(p.vertices);
        if (vs.intersects(required)) throw DomainError("merge: family paths are not disjoint");
        if (!high.contains(p.vertices.front()) || !high.contains(p.vertices.back()))
            throw DomainError("merge: family path end has degree < d");
        required |= vs;
    }

    BudgetTracker tracker(budget);
    HighEndPathSearch search(g, high, required, tracker);
    SearchResult<PathWitness> out;
    for (int s : high) {
        if (search.from(s)) {
            out.outcome = Outcome::found;
            out.witness = PathWitness{search.path()};
            out.nodes = tracker.nodes();
            assert(is_valid_path(g, *out.witness));
            return out;
        }
        if (tracker.exhausted()) {
            out.outcome = Outcome::inconclusive;
            out.nodes = tracker.nodes();
            return out;
        }
    }
    throw LemmaViolation("merge: no high-end path contains the family (d=" + std::to_string(d) +
                             ")",
                         encode_graph6(g));
}

}  // namespace hdpath
