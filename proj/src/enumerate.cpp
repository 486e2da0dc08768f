#include "hdpath/enumerate.hpp"

#include <algorithm>
#include <set>

#include "hdpath/canonical.hpp"
#include "hdpath/errors.hpp"
#include "hdpath/parallel.hpp"

namespace hdpath {

namespace {

// Cheap isomorphism invariant used to pick deletion candidates.
int vertex_key(const Graph& g, int v) {
    int sum = 0;
    for (int u : g.neighbors(v)) sum += g.degree(u);
    return g.degree(v) * 1024 + sum;
}

std::vector<Graph> children(const Graph& parent) {
    const int m = parent.order() + 1;
    const int added = m - 1;
    std::vector<Graph> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (unsigned mask = 0; mask < (1u << parent.order()); ++mask) {
        GraphBuilder b(m);
        for (auto [u, v] : parent.edges()) b.add_edge(u, v);
        for (int v = 0; v < parent.order(); ++v)
            if (mask >> v & 1) b.add_edge(v, added);
        const Graph child = b.build();

        std::vector<int> keys(m);
        for (int v = 0; v < m; ++v) keys[v] = vertex_key(child, v);
        const int top = *std::max_element(keys.begin(), keys.end());
        if (keys[added] < top) continue;

        const auto canon = canonical_labelling(child);
        int deletion = -1;
        for (int i = m - 1; i >= 0 && deletion < 0; --i)
            if (keys[canon.order[i]] == top) deletion = canon.order[i];
        if (deletion != added) {
            std::vector<int> mark_added(m, 0), mark_deletion(m, 0);
            mark_added[added] = 1;
            mark_deletion[deletion] = 1;
            if (canonical_labelling(child, mark_added).certificate !=
                canonical_labelling(child, mark_deletion).certificate)
                continue;
        }
        if (seen.insert(canon.certificate).second) out.push_back(relabel(child, canon.order));
    }
    return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, int jobs) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw DomainError("enumeration order " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxEnumerationOrder) + "]");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::vector<Graph>> per_parent(level.size());
        parallel_for(level.size(), jobs, [&](std::size_t i) { per_parent[i] = children(level[i]); });
        std::vector<Graph> next;
        for (auto& group : per_parent)
            for (auto& g : group) next.push_back(std::move(g));
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> enumerate_graphs_naive(int n) {
    if (n < 1 || n > 6) throw DomainError("naive enumeration is limited to 1 <= n <= 6");
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) es.push_back(pairs[e]);
        Graph g = Graph::from_edges(n, es);
        if (seen.insert(naive_canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace hdpath
