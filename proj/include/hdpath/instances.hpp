#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hdpath/bipartite.hpp"
#include "hdpath/graph.hpp"

namespace hdpath {

// Hypothesis sets for random bipartite instances. Every X vertex has degree
// >= d in all of them.
enum class Profile {
    jackson,         // 2 <= |X| <= d,   |Y| <= 2d-2
    klz,             // 2 <= |X| <= d,   |Y| <= 3d-5, 2-connected
    essential,       // 2 <= |X| <= d-1, |Y| <= 3d-5, essentially 2-connected
    lemma35,         // |X| <= d+t,      |Y| <= 3d+2t-3
    path_jackson,    // 1 <= |X| <= d+1, |Y| <= 2d-1
    path_connected,  // 1 <= |X| <= d,   |Y| <= 3d-3, connected
};

std::string_view to_string(Profile p);
Profile profile_from_string(std::string_view name);  // throws DomainError

// Does b satisfy the profile's hypotheses for this d (and t)?
bool satisfies_hypotheses(const Bipartition& b, Profile profile, int d, int t = 1);

// Samples part sizes within the profile's bounds (|Y| >= d so degrees are
// reachable), draws X-Y edges with probability 1/2, adds edges from
// deficient X vertices to uniformly random Y vertices until every X vertex
// has degree >= d, then rejection-tests the connectivity class. For the
// 2-connected and connected profiles, Y vertices of degree below 2 (resp.
// 0) are also topped up before the test. X = 0..|X|-1, Y follows.
// Throws DomainError after 10000 rejected attempts.
Bipartition random_bipartite_instance(std::uint64_t seed, int d, Profile profile, int t = 1);

struct MergeInstance {
    Graph graph;
    int d;
    PathCover family;
};

// Connected graph on d+1..2d+1 vertices with at least one vertex of degree
// >= d, and a family of 1..3 disjoint paths, each starting and ending at
// such a vertex.
MergeInstance random_merge_instance(std::uint64_t seed, int d);

// splitmix64 step; used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace hdpath
