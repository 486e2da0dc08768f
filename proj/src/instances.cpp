#include "hdpath/instances.hpp"

#include <algorithm>
#include <random>

#include "hdpath/errors.hpp"

namespace hdpath {

namespace {

constexpr int kMaxAttempts = 10000;

// Portable draws: the standard distributions are not specified bit-exactly
// across library implementations, and reports must reproduce from the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    int uniform(int lo, int hi) {  // inclusive
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }
    bool coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
    }

private:
    std::mt19937_64 engine_;
};

struct Bounds {
    int x_lo, x_hi, y_lo, y_hi;
};

Bounds bounds(Profile p, int d, int t) {
    switch (p) {
        case Profile::jackson: return {2, d, d, 2 * d - 2};
        case Profile::klz: return {2, d, d, 3 * d - 5};
        case Profile::essential: return {2, d - 1, d, 3 * d - 5};
        case Profile::lemma35: return {1, d + t, d, 3 * d + 2 * t - 3};
        case Profile::path_jackson: return {1, d + 1, d, 2 * d - 1};
        case Profile::path_connected: return {1, d, d, 3 * d - 3};
    }
    return {};
}

bool connectivity_holds(const Graph& g, Profile p) {
    switch (p) {
        case Profile::klz: return is_two_connected(g);
        case Profile::essential:
            if (!is_connected(g) || is_forest(g)) return false;
            return is_essentially_two_connected(g);
        case Profile::path_connected: return is_connected(g);
        default: return true;
    }
}

}  // namespace

std::string_view to_string(Profile p) {
    switch (p) {
        case Profile::jackson: return "jackson";
        case Profile::klz: return "klz";
        case Profile::essential: return "essential";
        case Profile::lemma35: return "lemma35";
        case Profile::path_jackson: return "path-jackson";
        case Profile::path_connected: return "path-connected";
    }
    return "?";
}

Profile profile_from_string(std::string_view name) {
    for (auto p : {Profile::jackson, Profile::klz, Profile::essential, Profile::lemma35,
                   Profile::path_jackson, Profile::path_connected})
        if (to_string(p) == name) return p;
    throw DomainError("unknown profile '" + std::string(name) + "'");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool satisfies_hypotheses(const Bipartition& b, Profile profile, int d, int t) {
    const Bounds bd = bounds(profile, d, t);
    const int nx = b.x().size(), ny = b.y().size();
    if (nx < bd.x_lo || nx > bd.x_hi || ny > bd.y_hi) return false;
    if (nx > 0 && b.min_x_degree() < d) return false;
    return connectivity_holds(b.graph(), profile);
}

Bipartition random_bipartite_instance(std::uint64_t seed, int d, Profile profile, int t) {
    const Bounds bd = bounds(profile, d, t);
    if (d < 2 || bd.x_lo > bd.x_hi || bd.y_lo > bd.y_hi)
        throw DomainError("profile " + std::string(to_string(profile)) +
                          " has no instances for d=" + std::to_string(d));
    if (profile == Profile::lemma35 && t < 1) throw DomainError("lemma35 profile needs t >= 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const int nx = rng.uniform(bd.x_lo, bd.x_hi);
        const int ny = rng.uniform(bd.y_lo, bd.y_hi);
        GraphBuilder gb(nx + ny);
        for (int x = 0; x < nx; ++x)
            for (int y = nx; y < nx + ny; ++y)
                if (rng.coin(0.5)) gb.add_edge(x, y);
        for (int x = 0; x < nx; ++x) {
            while (gb.degree(x) < d) gb.add_edge(x, nx + rng.uniform(0, ny - 1));
        }
        const int y_min = profile == Profile::klz ? 2
                          : (profile == Profile::essential || profile == Profile::path_connected)
                              ? 1
                              : 0;
        for (int y = nx; y < nx + ny; ++y)
            while (gb.degree(y) < std::min(y_min, nx)) gb.add_edge(y, rng.uniform(0, nx - 1));

        Bipartition b(gb.build(), VertexSet::range(0, nx));
        if (satisfies_hypotheses(b, profile, d, t)) return b;
    }
    throw DomainError("random_bipartite_instance: rejection sampling failed for seed " +
                      std::to_string(seed) + "; re-seed");
}

MergeInstance random_merge_instance(std::uint64_t seed, int d) {
    if (d < 1) throw DomainError("merge instance needs d >= 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const int n = rng.uniform(d + 1, 2 * d + 1);
        const double p = 0.4 + 0.5 * rng.uniform(0, 1000) / 1000.0;
        GraphBuilder gb(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng.coin(p)) gb.add_edge(u, v);
        Graph g = gb.build();
        const VertexSet high = high_degree_vertices(g, d);
        if (!is_connected(g) || high.empty()) continue;

        std::vector<int> starts = high.to_vector();
        rng.shuffle(starts);
        const int wanted = rng.uniform(1, 3);
        VertexSet used;
        PathCover family;
        for (int h : starts) {
            if (static_cast<int>(family.paths.size()) == wanted) break;
            if (used.contains(h)) continue;
            std::vector<int> walk{h};
            VertexSet on_walk{h};
            const int steps = rng.uniform(0, n - 1);
            for (int s = 0; s < steps; ++s) {
                const auto next = (g.neighbors(walk.back()) - used - on_walk).to_vector();
                if (next.empty()) break;
                const int u = rng.pick(next);
                walk.push_back(u);
                on_walk.insert(u);
            }
            while (!high.contains(walk.back())) walk.pop_back();
            used |= VertexSet::of(walk);
            family.paths.push_back(PathWitness{walk});
        }
        return {std::move(g), d, std::move(family)};
    }
    throw DomainError("random_merge_instance: rejection sampling failed; re-seed");
}

}  // namespace hdpath
