#include "hdpath/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "hdpath/errors.hpp"

namespace hdpath {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonicaliser {
public:
    Canonicaliser(const Graph& g, const std::vector<int>& colors) : g_(g), colors_(colors) {}

    CanonicalLabelling run() {
        Cells cells;
        if (colors_.empty()) {
            cells.push_back(g_.vertices().to_vector());
        } else {
            std::vector<int> vs(g_.order());
            std::iota(vs.begin(), vs.end(), 0);
            std::stable_sort(vs.begin(), vs.end(),
                             [&](int a, int b) { return colors_[a] < colors_[b]; });
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i == 0 || colors_[vs[i]] != colors_[vs[i - 1]]) cells.emplace_back();
                cells.back().push_back(vs[i]);
            }
        }
        if (g_.order() == 0) return {{}, {0}};
        std::vector<int> prefix;
        search(std::move(cells), prefix);
        return {best_order_, best_cert_};
    }

private:
    // Splits cells by neighbour counts into other cells until equitable.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
                const VertexSet splitter = VertexSet::of(cells[w]);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    auto& cell = cells[c];
                    if (cell.size() == 1) continue;
                    auto count = [&](int v) { return (g_.neighbors(v) & splitter).size(); };
                    const int first = count(cell[0]);
                    bool uniform = std::all_of(cell.begin() + 1, cell.end(),
                                               [&](int v) { return count(v) == first; });
                    if (uniform) continue;
                    std::vector<std::pair<int, int>> keyed;
                    for (int v : cell) keyed.emplace_back(count(v), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](auto& a, auto& b) { return a.first < b.first; });
                    Cells parts;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
                        parts.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<long>(c));
                    cells.insert(cells.begin() + static_cast<long>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::uint64_t> certificate(const std::vector<int>& order) const {
        const int n = g_.order();
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::vector<std::uint64_t> cert;
        cert.reserve(1 + n + static_cast<std::size_t>(n) * kWords);
        cert.push_back(static_cast<std::uint64_t>(n));
        if (!colors_.empty())
            for (int i = 0; i < n; ++i) cert.push_back(static_cast<std::uint64_t>(colors_[order[i]]));
        for (int i = 0; i < n; ++i) {
            VertexSet row;
            for (int u : g_.neighbors(order[i])) row.insert(pos[u]);
            for (auto w : row.words()) cert.push_back(w);
        }
        return cert;
    }

    // Orbits of the target cell under stored automorphisms fixing `prefix`.
    std::vector<int> orbit_roots(const std::vector<int>& prefix) const {
        std::vector<int> parent(g_.order());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < g_.order(); ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < g_.order(); ++v) parent[v] = find(v);
        return parent;
    }

    void search(Cells cells, std::vector<int>& prefix) {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(),
                                   [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<int> order;
            for (const auto& c : cells) order.push_back(c[0]);
            auto cert = certificate(order);
            if (best_cert_.empty() || cert > best_cert_) {
                best_cert_ = std::move(cert);
                best_order_ = std::move(order);
            } else if (cert == best_cert_) {
                std::vector<int> gamma(g_.order());
                for (int i = 0; i < g_.order(); ++i) gamma[order[i]] = best_order_[i];
                automorphisms_.push_back(std::move(gamma));
            }
            return;
        }
        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        const std::vector<int> candidates = cells[t];
        std::vector<int> explored;
        for (int v : candidates) {
            if (!explored.empty()) {
                auto roots = orbit_roots(prefix);
                bool equivalent = std::any_of(explored.begin(), explored.end(),
                                              [&](int w) { return roots[w] == roots[v]; });
                if (equivalent) continue;
            }
            Cells child = cells;
            std::vector<int> rest;
            for (int u : candidates)
                if (u != v) rest.push_back(u);
            child[t] = {v};
            child.insert(child.begin() + static_cast<long>(t) + 1, rest);
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    const Graph& g_;
    const std::vector<int>& colors_;
    std::vector<std::uint64_t> best_cert_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g, const std::vector<int>& colors) {
    if (!colors.empty() && static_cast<int>(colors.size()) != g.order())
        throw DomainError("canonical_labelling: one colour per vertex required");
    return Canonicaliser(g, colors).run();
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(pos[u], pos[v]);
    return b.build();
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_labelling(a).certificate == canonical_labelling(b).certificate;
}

std::uint64_t naive_canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw DomainError("naive_canonical_code is limited to 10 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace hdpath
