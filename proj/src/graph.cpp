#include "hdpath/graph.hpp"

#include <algorithm>
#include <string>

#include "hdpath/errors.hpp"

namespace hdpath {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw DomainError("graph order " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
}

// Tarjan lowpoint DFS shared by cut_vertices() and blocks().
struct LowpointSearch {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> found_blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit LowpointSearch(const Graph& graph)
        : g(graph), disc(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), false) {}

    void run() {
        for (int v = 0; v < g.order(); ++v)
            if (disc[v] < 0) visit(v, -1);
    }

    void visit(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (disc[u] < 0) {
                ++children;
                edge_stack.emplace_back(v, u);
                visit(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    if (parent >= 0) is_cut[v] = true;
                    VertexSet block;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.insert(a);
                        block.insert(b);
                        if (a == v && b == u) break;
                    }
                    found_blocks.push_back(block);
                }
            } else if (u != parent && disc[u] < disc[v]) {
                edge_stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (parent < 0 && children > 1) is_cut[v] = true;
    }
};

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    n_ = n;
    adj_.assign(n, VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* old_index) const {
    std::vector<int> old = (keep & vertices()).to_vector();
    std::vector<int> fresh(n_, -1);
    for (int i = 0; i < static_cast<int>(old.size()); ++i) fresh[old[i]] = i;
    Graph h(static_cast<int>(old.size()));
    for (int i = 0; i < h.n_; ++i)
        for (int u : adj_[old[i]] & keep) h.adj_[i].insert(fresh[u]);
    if (old_index) *old_index = std::move(old);
    return h;
}

VertexSet Graph::reachable(int start, const VertexSet& allowed) const {
    VertexSet seen;
    seen.insert(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= adj_[v];
        next &= allowed;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    adj_.assign(n, VertexSet{});
}

int GraphBuilder::add_vertices(int count) {
    int first = order();
    check_order(first + count);
    adj_.resize(first + count);
    return first;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") has an endpoint outside [0, " + std::to_string(order()) + ")");
    if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

int GraphBuilder::append(const Graph& g) {
    int offset = add_vertices(g.order());
    for (auto [u, v] : g.edges()) add_edge(offset + u, offset + v);
    return offset;
}

Graph GraphBuilder::build() const {
    Graph g(order());
    g.adj_ = adj_;
    return g;
}

VertexSet high_degree_vertices(const Graph& g, int d) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= d) out.insert(v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return g.reachable(0, g.vertices()).size() == g.order();
}

bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

bool is_forest(const Graph& g) {
    return g.edge_count() == g.order() - static_cast<int>(connected_components(g).size());
}

bool is_essentially_two_connected(const Graph& g) {
    if (!is_connected(g)) throw NotApplicable("essential 2-connectivity: graph is disconnected");
    if (is_forest(g)) throw NotApplicable("essential 2-connectivity: graph is a forest");
    VertexSet keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1) keep.insert(v);
    return is_two_connected(g.induced(keep));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet c = g.reachable(left.first(), left);
        out.push_back(c);
        left -= c;
    }
    return out;
}

std::vector<int> cut_vertices(const Graph& g) {
    LowpointSearch s(g);
    s.run();
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (s.is_cut[v]) out.push_back(v);
    return out;
}

std::vector<VertexSet> blocks(const Graph& g) {
    LowpointSearch s(g);
    s.run();
    return s.found_blocks;
}

bool is_valid_path(const Graph& g, const PathWitness& p) {
    if (p.vertices.empty()) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    }
    return true;
}

bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
    if (c.vertices.size() < 3) return false;
    if (!is_valid_path(g, PathWitness{c.vertices})) return false;
    return g.adjacent(c.vertices.front(), c.vertices.back());
}

Bipartition::Bipartition(Graph g, VertexSet x) : graph_(std::move(g)), x_(x) {
    if (!x_.is_subset_of(graph_.vertices()))
        throw DomainError("X contains a vertex outside the graph");
    y_ = graph_.vertices() - x_;
    for (int v : x_)
        if (graph_.neighbors(v).intersects(x_))
            throw DomainError("X is not independent: vertex " + std::to_string(v) +
                              " has a neighbour in X");
    for (int v : y_)
        if (graph_.neighbors(v).intersects(y_))
            throw DomainError("Y is not independent: vertex " + std::to_string(v) +
                              " has a neighbour in Y");
}

int Bipartition::min_x_degree() const {
    if (x_.empty()) return 0;
    int m = kMaxVertices;
    for (int v : x_) m = std::min(m, graph_.degree(v));
    return m;
}

}  // namespace hdpath
