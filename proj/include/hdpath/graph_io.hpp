#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hdpath/graph.hpp"

namespace hdpath {

// Standard graph6. Orders up to 62 use the one-byte header, larger orders
// the four-byte form (byte 126 followed by 18 bits).
std::string encode_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
// Throws FormatError on bad characters, wrong length or nonzero padding.
Graph decode_graph6(std::string_view text);

// Undirected DOT. Highlighted vertices are drawn filled.
std::string export_dot(const Graph& g, const VertexSet& highlight);

// {"n": int, "edges": [[u,v],...], "high_degree": [v,...]}
nlohmann::json graph_to_json(const Graph& g, const VertexSet& high_degree);

// {"kind":"path"|"cycle","vertices":[...]}
nlohmann::json witness_to_json(const PathWitness& p);
nlohmann::json witness_to_json(const CycleWitness& c);

}  // namespace hdpath
