#include "doctest.h"

#include <random>

#include "hdpath/constructions.hpp"
#include "hdpath/errors.hpp"
#include "hdpath/graph.hpp"
#include "hdpath/graph_io.hpp"

using namespace hdpath;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

// Reference graph6 writer: straight from the format description, one bit at
// a time.
std::string reference_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v << 1 | bits[i + b];
        out += static_cast<char>(63 + v);
    }
    return out;
}

}  // namespace

TEST_CASE("building small graphs") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.degrees() == std::vector<int>{1, 2, 1});
    CHECK(p3.edge_count() == 2);

    const Graph single = Graph::from_edges(1, {});
    CHECK(single.order() == 1);
    CHECK(single.degree(0) == 0);

    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.degree(0) == 3);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), DomainError);
}

TEST_CASE("high-degree vertices") {
    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(high_degree_vertices(star, 3) == VertexSet{0});

    CHECK(high_degree_vertices(build_H(5, 5), 5) == VertexSet{0, 1});

    const Graph ds = build_H_star(4, 4);
    const VertexSet centres = high_degree_vertices(ds, 4);
    REQUIRE(centres.size() == 2);
    const auto c = centres.to_vector();
    CHECK(ds.adjacent(c[0], c[1]));
    CHECK(ds.degree(c[0]) == 4);
    CHECK(ds.degree(c[1]) == 4);
}

TEST_CASE("connectivity predicates") {
    const Graph c4 = cycle(4);
    CHECK(is_connected(c4));
    CHECK(is_two_connected(c4));

    GraphBuilder b(5);
    for (int i = 0; i < 4; ++i) b.add_edge(i, (i + 1) % 4);
    b.add_edge(0, 4);
    const Graph pendant = b.build();
    CHECK_FALSE(is_two_connected(pendant));
    CHECK(is_essentially_two_connected(pendant));

    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_forest(p4));
    CHECK_THROWS_AS(is_essentially_two_connected(p4), NotApplicable);
    CHECK_THROWS_AS(is_essentially_two_connected(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}})),
                    NotApplicable);

    CHECK_FALSE(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_two_connected(Graph::from_edges(2, {{0, 1}})));
}

TEST_CASE("cut vertices and blocks") {
    // Two triangles sharing vertex 2, plus a pendant on 4.
    const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}});
    CHECK(cut_vertices(g) == std::vector<int>{2, 4});
    const auto bs = blocks(g);
    REQUIRE(bs.size() == 3);
    int triangles = 0, bridges = 0;
    for (const auto& blk : bs) {
        triangles += blk.size() == 3;
        bridges += blk.size() == 2;
    }
    CHECK(triangles == 2);
    CHECK(bridges == 1);
    CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("witness validation") {
    const Graph c5 = cycle(5);
    CHECK(is_valid_path(c5, {{0, 1, 2, 3, 4}}));
    CHECK_FALSE(is_valid_path(c5, {{0, 2}}));
    CHECK_FALSE(is_valid_path(c5, {{0, 1, 0}}));
    CHECK(is_valid_cycle(c5, {{0, 1, 2, 3, 4}}));
    CHECK_FALSE(is_valid_cycle(c5, {{0, 1, 2}}));
}

TEST_CASE("bipartition checks its parts") {
    const Graph k22 = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const Bipartition b(k22, {0, 1});
    CHECK(b.y() == VertexSet{2, 3});
    CHECK(b.min_x_degree() == 2);
    CHECK_THROWS_AS(Bipartition(k22, {0, 2}), DomainError);
    CHECK_THROWS_AS(Bipartition(Graph(3), {5}), DomainError);
}

TEST_CASE("graph6 encoding") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");

    const Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    const std::string s = encode_graph6(k3);
    CHECK(s.size() == 2);
    CHECK(s == reference_graph6(k3));
    const Graph back = decode_graph6(s);
    CHECK(back.order() == 3);
    CHECK(back.edge_count() == 3);

    const Graph g = build_G(13, 4, 4);
    CHECK(decode_graph6(encode_graph6(g)) == g);

    CHECK(decode_graph6(">>graph6<<Bw\n") == k3);
    CHECK_THROWS_AS(decode_graph6("B"), FormatError);
    CHECK_THROWS_AS(decode_graph6("B\x7f"), FormatError);
    CHECK_THROWS_AS(decode_graph6("Bx"), FormatError);  // nonzero padding
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> order(0, 40);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const Graph g = random_graph(rng, order(rng), density(rng));
        const std::string s = encode_graph6(g);
        REQUIRE(s == reference_graph6(g));
        REQUIRE(decode_graph6(s) == g);
    }
}

TEST_CASE("graph6 long header") {
    std::mt19937_64 rng(7);
    for (int n : {63, 100, 128}) {
        const Graph g = random_graph(rng, n, 0.1);
        const std::string s = encode_graph6(g);
        CHECK(s[0] == '~');
        CHECK(s == reference_graph6(g));
        CHECK(decode_graph6(s) == g);
    }
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Graph g = random_graph(rng, static_cast<int>(rng() % 60), 0.3);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) {
            sum += g.degree(v);
            REQUIRE_FALSE(g.adjacent(v, v));
            for (int u : g.neighbors(v)) REQUIRE(g.adjacent(u, v));
        }
        REQUIRE(sum == 2 * g.edge_count());
    }
}

TEST_CASE("DOT export") {
    auto count = [](const std::string& text, const std::string& needle) {
        int c = 0;
        for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
        return c;
    };
    const std::string one = export_dot(Graph(1), {});
    CHECK(one.rfind("graph G {", 0) == 0);
    CHECK(count(one, "\n  0") == 1);

    const std::string k2 = export_dot(Graph::from_edges(2, {{0, 1}}), {0});
    CHECK(count(k2, " -- ") == 1);
    CHECK(count(k2, "filled") == 1);

    const Graph h = build_H(5, 5);
    const std::string dot = export_dot(h, high_degree_vertices(h, 5));
    CHECK(count(dot, " -- ") == 9);
    CHECK(count(dot, "filled") == 2);
    CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("JSON export") {
    const Graph h = build_H(5, 5);
    const auto j = graph_to_json(h, high_degree_vertices(h, 5));
    CHECK(j["n"] == 6);
    CHECK(j["edges"].size() == 9);
    CHECK(j["high_degree"] == nlohmann::json::array({0, 1}));
    CHECK(witness_to_json(PathWitness{{2, 0, 3}})["kind"] == "path");
    CHECK(witness_to_json(CycleWitness{{2, 0, 3, 1}})["vertices"].size() == 4);
}
