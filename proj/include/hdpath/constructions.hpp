#pragma once

#include <string>
#include <vector>

#include "hdpath/graph.hpp"

namespace hdpath {

// Extremal and counterexample graphs. Labelling conventions:
//  * H_{d,k}: clique vertices 0..s-1 (s = floor((k-1)/2)), then the
//    independent part s..d.
//  * H*_{d,k}: the H_{d,k} block first, then the appended independent set,
//    all joined to vertex s (the lowest non-clique vertex).
//  * Disjoint unions concatenate component ranges in definition order.

// K_s joined to I_{d+1-s}, s = floor((k-1)/2). Requires k >= 1 and d > s, so
// that exactly the clique vertices reach degree d.
Graph build_H(int d, int k);

// H_{d,k} plus I_{d+1-k/2} attached to vertex k/2-1. Requires even k >= 4, d >= k.
Graph build_H_star(int d, int k);

// The P_{k+1}-free graph on n vertices with phi(n,d,k)-1 vertices of degree
// >= d. Requires n > d >= k >= 1.
Graph build_G(int n, int d, int k);

// Chain H_0, H_1, ..., H_beta of H_{d,k+1} blocks; H_i (i >= 1) is alpha
// copies glued at one low vertex u_i, and u_i is identified with a low vertex
// v_{i-1} of H_{i-1}. Vertex 0..d is H_0. Parameter domain as in
// theta_count_prop51.
Graph build_theta_chain(int d, int k, int alpha, int beta);

// Star K_{1,beta} (centre 0) whose i-th leaf is the glue vertex of alpha
// copies of H_{d, ceil(k/2)-1}. Parameter domain as in psi_count_prop52.
Graph build_psi_tree(int d, int k, int alpha, int beta);

// K_{d,d-1} with X = 0..d-1 and Y_1 = d..2d-2, plus pendants[i] >= 1 new
// degree-one neighbours of x_i appended afterwards. Requires d >= 3 and
// pendants.size() == d. Essentially 2-connected with no cycle through X.
Bipartition build_essential_counterexample(int d, const std::vector<int>& pendants);

// Dispatch by name: "H", "H-star", "G", "theta-chain", "psi-tree",
// "essential". `params` holds the integers each kind takes, in the order
// of the builder's arguments (for "essential": d, then optional pendants).
struct Construction {
    Graph graph;
    int threshold;  // the d whose high-degree vertices are of interest
};
Construction build_named(const std::string& kind, const std::vector<int>& params);

}  // namespace hdpath
