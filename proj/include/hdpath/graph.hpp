#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdpath/vertex_set.hpp"

namespace hdpath {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 0..n-1 stored as adjacency-row bitsets.
// Immutable once built; use GraphBuilder to assemble one.
class Graph {
public:
    Graph() = default;
    // Edgeless graph I_n.
    explicit Graph(int n);

    // Throws DomainError on an out-of-range endpoint, a loop, or n > kMaxVertices.
    // Repeated edges are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    VertexSet vertices() const { return VertexSet::range(0, n_); }
    int edge_count() const;
    std::vector<Edge> edges() const;  // (u,v) with u < v, lexicographic
    std::vector<int> degrees() const;

    // Subgraph induced by `keep`, relabelled in ascending vertex order.
    // `old_index` (optional) receives new -> old mapping.
    Graph induced(const VertexSet& keep, std::vector<int>* old_index = nullptr) const;

    // Vertices reachable from `start` using only vertices of `allowed`.
    VertexSet reachable(int start, const VertexSet& allowed) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Mutable assembly area for graphs. Disjoint unions append vertex ranges
// in call order, which is the labelling convention every construction uses.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    // Adds `count` isolated vertices, returns the index of the first one.
    int add_vertices(int count);
    void add_edge(int u, int v);
    // Appends a disjoint copy of g, returns the offset of its vertex 0.
    int append(const Graph& g);
    int degree(int v) const { return adj_[v].size(); }

    Graph build() const;

private:
    std::vector<VertexSet> adj_;
};

// Vertices of degree at least d.
VertexSet high_degree_vertices(const Graph& g, int d);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
// G - V1 is 2-connected, V1 the degree-one vertices. Throws NotApplicable
// when g is disconnected or a forest.
bool is_essentially_two_connected(const Graph& g);
bool is_forest(const Graph& g);

// Connected components as vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);
// Biconnected components (bridges give 2-vertex blocks, isolated vertices
// give no block), ordered by discovery from vertex 0 upward.
std::vector<VertexSet> blocks(const Graph& g);

// Ordered vertex sequence certifying a path. Consecutive vertices adjacent,
// all distinct.
struct PathWitness {
    std::vector<int> vertices;
    int size() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

// Cyclically ordered vertex sequence of length >= 3.
struct CycleWitness {
    std::vector<int> vertices;
    int size() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

bool is_valid_path(const Graph& g, const PathWitness& p);
bool is_valid_cycle(const Graph& g, const CycleWitness& c);

// A graph with a fixed 2-colouring: X and its complement Y, both independent.
class Bipartition {
public:
    // Throws DomainError if X is not a subset of V(g) or an edge lies inside
    // X or inside Y = V(g) \ X.
    Bipartition(Graph g, VertexSet x);

    const Graph& graph() const { return graph_; }
    const VertexSet& x() const { return x_; }
    const VertexSet& y() const { return y_; }
    // Minimum degree over X (0 when X is empty).
    int min_x_degree() const;

private:
    Graph graph_;
    VertexSet x_;
    VertexSet y_;
};

}  // namespace hdpath
