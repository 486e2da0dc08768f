#include "hdpath/graph_io.hpp"

#include <sstream>

#include "hdpath/errors.hpp"

namespace hdpath {

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw FormatError("graph6: empty input");

    auto sextet = [&](std::size_t pos) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw FormatError("graph6: invalid character at offset " + std::to_string(pos));
        return static_cast<int>(c) - 63;
    };

    std::size_t pos = 0;
    int n = 0;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126)
            throw FormatError("graph6: orders above 258047 are not supported");
        if (text.size() < 4) throw FormatError("graph6: truncated order header");
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw FormatError("graph6: order " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(kMaxVertices));

    const long bits = static_cast<long>(n) * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw FormatError("graph6: expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(text.size()));

    GraphBuilder b(n);
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = sextet(text.size() - 1);
        int pad = 6 - static_cast<int>(bits % 6);
        if (last & ((1 << pad) - 1)) throw FormatError("graph6: nonzero padding bits");
    }
    return b.build();
}

std::string export_dot(const Graph& g, const VertexSet& highlight) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (highlight.contains(v)) os << " [style=filled, fillcolor=\"#e45756\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json graph_to_json(const Graph& g, const VertexSet& high_degree) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}, {"high_degree", high_degree.to_vector()}};
}

nlohmann::json witness_to_json(const PathWitness& p) {
    return {{"kind", "path"}, {"vertices", p.vertices}};
}

nlohmann::json witness_to_json(const CycleWitness& c) {
    return {{"kind", "cycle"}, {"vertices", c.vertices}};
}

}  // namespace hdpath
