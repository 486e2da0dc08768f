#pragma once

#include <vector>

#include "hdpath/graph.hpp"

namespace hdpath {

inline constexpr int kMaxEnumerationOrder = 9;

// One representative (canonically labelled) of every isomorphism class of
// simple graphs on n vertices, 1 <= n <= 9. Orderly generation by vertex
// addition: a child is kept only when its new vertex lies in the
// automorphism orbit of the child's canonical deletion vertex, and
// isomorphic siblings from the same parent are merged. Parents are split
// across `jobs` threads; output order does not depend on `jobs`.
std::vector<Graph> enumerate_graphs(int n, int jobs = 1);

// Reference enumeration: all 2^(n choose 2) labelled graphs, deduplicated by
// naive_canonical_code. n <= 6.
std::vector<Graph> enumerate_graphs_naive(int n);

}  // namespace hdpath
