// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hdpath/bipartite.hpp"
#include "hdpath/canonical.hpp"
#include "hdpath/constructions.hpp"
#include "hdpath/enumerate.hpp"
#include "hdpath/formulas.hpp"
#include "hdpath/oracle.hpp"
#include "hdpath/parallel.hpp"
#include "hdpath/paths.hpp"
#include "hdpath/suites.hpp"

using namespace hdpath;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Verdict()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = check();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%d] %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += !v.pass;
}

// Runs a suite and totals its trial counts.
Verdict suite_verdict(const char* id, SuiteOptions opt, int per_group) {
    opt.seed = kSeed;
    opt.jobs = default_jobs();
    opt.trials = per_group;
    const auto reports = run_suite(id, opt);
    long pass = 0, total = 0;
    std::string bad;
    for (const auto& r : reports) {
        if (r.counts.contains("trials")) {
            total += r.counts["trials"].get<long>();
            pass += r.counts["pass"].get<long>();
        }
        if (r.outcome != ReportOutcome::pass && bad.empty()) bad = " first failure: " + to_text(r);
    }
    return {all_pass(reports) && total > 0,
            std::to_string(pass) + "/" + std::to_string(total) + " instances succeed across " +
                std::to_string(reports.size()) + " groups" + bad};
}

}  // namespace

int main() {
    const int jobs = default_jobs();

    criterion(1, "phi formula equals brute force for k <= d < n <= 8", [&] {
        int triples = 0, mismatches = 0;
        std::string first;
        for (int n = 2; n <= 8; ++n) {
            const PhiOracle oracle(n, jobs);
            for (int d = 1; d < n; ++d)
                for (int k = 1; k <= d; ++k) {
                    ++triples;
                    const auto brute = oracle.phi(d, k);
                    const auto formula = phi(PhiParams(n, d, k));
                    if (brute != formula && mismatches++ == 0)
                        first = " first at (" + std::to_string(n) + "," + std::to_string(d) + "," +
                                std::to_string(k) + ")";
                }
        }
        return Verdict{mismatches == 0, std::to_string(triples) + " triples, " +
                                            std::to_string(mismatches) + " mismatches" + first};
    });

    criterion(2, "G(n,d,k) exact for k <= 8, k <= d <= 10, d < n <= 60", [&] {
        struct T {
            int n, d, k;
        };
        std::vector<T> all;
        for (int k = 1; k <= 8; ++k)
            for (int d = k; d <= 10; ++d)
                for (int n = d + 1; n <= 60; ++n) all.push_back({n, d, k});
        std::vector<char> ok(all.size(), 0);
        parallel_for(all.size(), jobs, [&](std::size_t i) {
            const auto [n, d, k] = all[i];
            const Graph g = build_G(n, d, k);
            ok[i] = g.order() == n &&
                    high_degree_vertices(g, d).size() == phi(PhiParams(n, d, k)) - 1 &&
                    contains_path(g, k + 1).outcome == Outcome::none;
        });
        int bad = 0;
        for (char c : ok) bad += !c;
        return Verdict{bad == 0, std::to_string(all.size()) + " triples, " + std::to_string(bad) +
                                     " violations"};
    });

    criterion(3, "k = 4 refutes the conjectured bound at (40,4,4)", [] {
        const PhiParams p(40, 4, 4);
        const Graph g = build_G(40, 4, 4);
        const auto comps = connected_components(g);
        const Graph ds = build_H_star(4, 4);
        int double_stars = 0;
        for (const auto& c : comps) double_stars += isomorphic(g.induced(c), ds);
        const auto high = high_degree_vertices(g, 4).size();
        const auto path = contains_path(g, 5).outcome;
        const bool ok = phi(p) == 11 && phi_conjecture_bound(p) == 10 && high == 10 &&
                        path == Outcome::none && double_stars == 5 && comps.size() == 5;
        return Verdict{ok, "phi=" + std::to_string(phi(p)) +
                               " bound=" + std::to_string(phi_conjecture_bound(p)) +
                               ", G has " + std::to_string(high) + " high-degree vertices, " +
                               std::to_string(double_stars) + " double-star components, P5 " +
                               std::string(to_string(path))};
    });

    criterion(4, "cycle through X under 2 <= |X| <= d, |Y| <= 2d-2",
              [] { return suite_verdict("jackson", {}, 1000); });

    criterion(5, "cycle through X, 2-connected and essentially 2-connected sets", [] {
        const auto a = suite_verdict("klz", {}, 1000);
        const auto b = suite_verdict("essential", {}, 1000);
        return Verdict{a.pass && b.pass, "2-connected: " + a.detail + "; essential: " + b.detail};
    });

    criterion(6, "essential counterexample has no cycle through X, d in {3,4}", [] {
        bool ok = true;
        std::string detail;
        for (int d = 3; d <= 4; ++d) {
            const Bipartition b = build_essential_counterexample(d, std::vector<int>(d, 1));
            const auto r = find_cycle_through_X(b);
            ok = ok && r.outcome == Outcome::none && is_essentially_two_connected(b.graph()) &&
                 b.x().size() == d && b.min_x_degree() >= d;
            detail += "d=" + std::to_string(d) + ": " + std::string(to_string(r.outcome)) + " (" +
                      std::to_string(r.nodes) + " nodes) ";
        }
        return Verdict{ok, detail};
    });

    criterion(7, "at most t+1 paths cover X for (d,t) in {3,4}x{1,2}", [] {
        // Only the path-cover groups count here; the suite also carries the
        // single-path checks.
        SuiteOptions opt;
        opt.seed = kSeed;
        opt.jobs = default_jobs();
        opt.trials = 500;
        opt.ds = {3, 4};
        long pass = 0, total = 0;
        bool ok = true;
        int groups = 0;
        for (const auto& r : run_suite("lemma35", opt)) {
            if (r.claim != "path-cover-of-X") continue;
            ++groups;
            total += r.counts["trials"].get<long>();
            pass += r.counts["pass"].get<long>();
            ok = ok && r.outcome == ReportOutcome::pass;
        }
        return Verdict{ok && groups == 4 && total == 2000,
                       std::to_string(pass) + "/" + std::to_string(total) + " covers found"};
    });

    criterion(8, "high-end path merging with n <= 2d+1, d in {3,4,5}",
              [] { return suite_verdict("merge", {}, 500); });

    criterion(9, "theta chains and the psi tree", [] {
        bool ok = true;
        std::string detail;
        for (auto [d, k, a, b] : {std::tuple{4, 4, 1, 1}, std::tuple{6, 4, 2, 2}, std::tuple{4, 5, 2, 1}}) {
            const Graph g = build_theta_chain(d, k, a, b);
            const auto circ = longest_cycle(g);
            const int high = high_degree_vertices(g, d).size();
            const int want = (1 + a * b) * (k / 2) + b;
            ok = ok && circ.optimal && circ.length <= k && high == want;
            detail += "theta(" + std::to_string(d) + "," + std::to_string(k) + "," +
                      std::to_string(a) + "," + std::to_string(b) + "): c=" +
                      std::to_string(circ.length) + " high=" + std::to_string(high) + "; ";
        }
        const Graph psi = build_psi_tree(3, 7, 2, 3);
        const int high = high_degree_vertices(psi, 3).size();
        const auto p8 = contains_path(psi, 8).outcome;
        const auto efss = psi_lower_efss(22, 3, 7) - 1;
        ok = ok && is_connected(psi) && p8 == Outcome::none && high == 10 && efss == 8 &&
             high > efss;
        detail += "psi(3,7,2,3): high=" + std::to_string(high) + " vs EFSS " +
                  std::to_string(efss) + ", P8 " + std::string(to_string(p8));
        return Verdict{ok, detail};
    });

    criterion(10, "longest-path engines agree; enumeration counts for n <= 8", [&] {
        std::mt19937_64 rng(kSeed);
        std::uniform_int_distribution<int> order(1, 14);
        std::uniform_real_distribution<double> density(0.05, 0.7);
        int disagreements = 0;
        for (int i = 0; i < 1000; ++i) {
            const int n = order(rng);
            const double p = density(rng);
            std::bernoulli_distribution coin(p);
            GraphBuilder b(n);
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if (coin(rng)) b.add_edge(u, v);
            const Graph g = b.build();
            const auto dp = longest_path(g, SearchBudget::unlimited(), Engine::subset_dp);
            const auto bb = longest_path(g, SearchBudget::unlimited(), Engine::branch_and_bound);
            disagreements += !bb.optimal || dp.length != bb.length;
        }
        const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
        std::string counts;
        bool counts_ok = true;
        for (int n = 1; n <= 8; ++n) {
            const auto c = enumerate_graphs(n, jobs).size();
            counts += (n > 1 ? "," : "") + std::to_string(c);
            counts_ok = counts_ok && c == expected[n - 1];
        }
        return Verdict{disagreements == 0 && counts_ok,
                       std::to_string(disagreements) + "/1000 engine disagreements; counts " +
                           counts};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
