#pragma once

#include <cstdint>
#include <vector>

#include "hdpath/graph.hpp"

namespace hdpath {

// Canonical labelling by equitable-partition refinement and
// individualisation, keeping the lexicographically largest adjacency
// certificate over all leaves. Subtrees equivalent under automorphisms
// already discovered are skipped.
struct CanonicalLabelling {
    std::vector<int> order;                // order[pos] = vertex placed at pos
    std::vector<std::uint64_t> certificate;  // equal iff (coloured) graphs isomorphic
};

// `colors` (optional, one entry per vertex) restricts the labelling to
// colour-preserving isomorphisms.
CanonicalLabelling canonical_labelling(const Graph& g, const std::vector<int>& colors = {});

// Vertex order[i] of g becomes vertex i of the result.
Graph relabel(const Graph& g, const std::vector<int>& order);

bool isomorphic(const Graph& a, const Graph& b);

// Reference canonical form: minimum upper-triangle bit string over all n!
// permutations. n <= 10; meant as an oracle for tiny graphs.
std::uint64_t naive_canonical_code(const Graph& g);

}  // namespace hdpath
