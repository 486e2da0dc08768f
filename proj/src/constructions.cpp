#include "hdpath/constructions.hpp"

#include <cassert>

#include "hdpath/errors.hpp"
#include "hdpath/formulas.hpp"

namespace hdpath {

namespace {

// Adds K_clique joined to I_{total-clique}. Position `glue_pos` (if >= 0) is
// mapped to the existing vertex `glue` instead of a new one. Returns the
// vertex index of every block position.
std::vector<int> add_join_block(GraphBuilder& b, int clique, int total, int glue_pos = -1,
                                int glue = -1) {
    std::vector<int> at(total);
    for (int p = 0; p < total; ++p) at[p] = p == glue_pos ? glue : b.add_vertices(1);
    for (int i = 0; i < clique; ++i)
        for (int p = i + 1; p < total; ++p) b.add_edge(at[i], at[p]);
    return at;
}

Graph join_block(int clique, int total) {
    GraphBuilder b;
    add_join_block(b, clique, total);
    return b.build();
}

void add_isolated(GraphBuilder& b, int count) {
    if (count > 0) b.add_vertices(count);
}

void append_copies(GraphBuilder& b, const Graph& g, std::int64_t copies) {
    for (std::int64_t i = 0; i < copies; ++i) b.append(g);
}

}  // namespace

Graph build_H(int d, int k) {
    if (k < 1 || d <= (k - 1) / 2)
        throw DomainError("H_{d,k} needs k >= 1 and d > floor((k-1)/2) (d=" + std::to_string(d) +
                          ", k=" + std::to_string(k) + ")");
    return join_block((k - 1) / 2, d + 1);
}

Graph build_H_star(int d, int k) {
    if (k < 4 || k % 2 != 0 || d < k)
        throw DomainError("H*_{d,k} needs even k >= 4 and d >= k (d=" + std::to_string(d) +
                          ", k=" + std::to_string(k) + ")");
    const int s = k / 2 - 1;
    GraphBuilder b;
    b.append(build_H(d, k));
    const int first = b.add_vertices(d + 1 - k / 2);
    for (int v = first; v < b.order(); ++v) b.add_edge(s, v);
    assert(b.order() == 2 * d + 2 - k / 2);
    return b.build();
}

Graph build_G(int n, int d, int k) {
    static_cast<void>(PhiParams(n, d, k));
    GraphBuilder b;
    if (k <= 2) {
        add_isolated(b, n);
    } else if (k == 4) {
        auto [q, r] = euclid(n, 2 * static_cast<std::int64_t>(d));
        append_copies(b, build_H_star(d, 4), q);
        if (r <= d) {
            add_isolated(b, static_cast<int>(r));
        } else {
            b.append(join_block(1, d + 1));  // K_{1,d}
            add_isolated(b, static_cast<int>(r - d - 1));
        }
    } else if (k % 2 == 1) {
        auto [q, r] = euclid(n, d + 1);
        append_copies(b, build_H(d, k), q);
        add_isolated(b, static_cast<int>(r));
    } else {
        auto [q, r] = euclid(n, d + 1);
        if (r <= d - k / 2) {
            append_copies(b, build_H(d, k), q);
            add_isolated(b, static_cast<int>(r));
        } else {
            append_copies(b, build_H(d, k), q - 1);
            b.append(build_H_star(d, k));
            add_isolated(b, static_cast<int>(r - d + k / 2 - 1));
        }
    }
    assert(b.order() == n);
    return b.build();
}

Graph build_theta_chain(int d, int k, int alpha, int beta) {
    const auto count = theta_count_prop51(d, k, alpha, beta);
    const int s = k / 2;  // clique size of H_{d,k+1}
    GraphBuilder b;
    auto h0 = add_join_block(b, s, d + 1);
    int v_prev = h0[s];
    for (int i = 1; i <= beta; ++i) {
        const int u = v_prev;
        for (int c = 0; c < alpha; ++c) {
            auto copy = add_join_block(b, s, d + 1, s, u);
            if (c == 0) v_prev = copy[s + 1];
        }
    }
    assert(b.order() == count.n);
    return b.build();
}

Graph build_psi_tree(int d, int k, int alpha, int beta) {
    const auto count = psi_count_prop52(d, k, alpha, beta);
    const int block_k = (k + 1) / 2 - 1;
    const int s = (block_k - 1) / 2;
    assert(s == (k - 3) / 4);
    GraphBuilder b(1);
    for (int i = 1; i <= beta; ++i) {
        const int u = b.add_vertices(1);
        b.add_edge(0, u);
        for (int c = 0; c < alpha; ++c) add_join_block(b, s, d + 1, s, u);
    }
    assert(b.order() == count.n);
    return b.build();
}

Bipartition build_essential_counterexample(int d, const std::vector<int>& pendants) {
    if (d < 3) throw DomainError("essential counterexample needs d >= 3");
    if (static_cast<int>(pendants.size()) != d)
        throw DomainError("essential counterexample needs one pendant count per X vertex (" +
                          std::to_string(d) + ")");
    for (int c : pendants)
        if (c < 1) throw DomainError("every pendant count must be >= 1");
    GraphBuilder b(2 * d - 1);
    for (int x = 0; x < d; ++x)
        for (int y = d; y < 2 * d - 1; ++y) b.add_edge(x, y);
    for (int x = 0; x < d; ++x)
        for (int c = 0; c < pendants[x]; ++c) b.add_edge(x, b.add_vertices(1));
    return Bipartition(b.build(), VertexSet::range(0, d));
}

Construction build_named(const std::string& kind, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw DomainError("construction '" + kind + "' takes " + std::to_string(count) +
                              " integer parameters, got " + std::to_string(params.size()));
    };
    if (kind == "H") {
        need(2);
        return {build_H(params[0], params[1]), params[0]};
    }
    if (kind == "H-star") {
        need(2);
        return {build_H_star(params[0], params[1]), params[0]};
    }
    if (kind == "G") {
        need(3);
        return {build_G(params[0], params[1], params[2]), params[1]};
    }
    if (kind == "theta-chain") {
        need(4);
        return {build_theta_chain(params[0], params[1], params[2], params[3]), params[0]};
    }
    if (kind == "psi-tree") {
        need(4);
        return {build_psi_tree(params[0], params[1], params[2], params[3]), params[0]};
    }
    if (kind == "essential") {
        if (params.empty()) throw DomainError("construction 'essential' takes d [pendants...]");
        const int d = params[0];
        std::vector<int> pendants(params.begin() + 1, params.end());
        if (pendants.empty() && d > 0) pendants.assign(d, 1);
        return {build_essential_counterexample(d, pendants).graph(), d};
    }
    throw DomainError("unknown construction kind '" + kind +
                      "' (expected H, H-star, G, theta-chain, psi-tree, essential)");
}

}  // namespace hdpath
