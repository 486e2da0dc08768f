#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hdpath/canonical.hpp"
#include "hdpath/constructions.hpp"
#include "hdpath/enumerate.hpp"
#include "hdpath/errors.hpp"
#include "hdpath/formulas.hpp"
#include "hdpath/graph_io.hpp"
#include "hdpath/instances.hpp"
#include "hdpath/oracle.hpp"
#include "hdpath/suites.hpp"

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

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return relabel(g, order);
}

}  // namespace

TEST_CASE("enumeration counts") {
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_graphs(n, 2).size() == expected[n - 1]);
    CHECK_THROWS_AS(enumerate_graphs(10), DomainError);
    CHECK_THROWS_AS(enumerate_graphs(0), DomainError);
}

TEST_CASE("enumeration count at n = 9" * doctest::timeout(120)) {
    CHECK(enumerate_graphs(9, 4).size() == 274668);
}

TEST_CASE("enumeration is deterministic across worker counts") {
    const auto a = enumerate_graphs(7, 1);
    const auto b = enumerate_graphs(7, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
}

TEST_CASE("orderly generation matches naive canonicalisation") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> fast, slow;
        for (const auto& g : enumerate_graphs(n)) fast.insert(naive_canonical_code(g));
        for (const auto& g : enumerate_graphs_naive(n)) slow.insert(naive_canonical_code(g));
        CHECK(fast == slow);
        CHECK(fast.size() == enumerate_graphs(n).size());
    }
    CHECK_THROWS_AS(enumerate_graphs_naive(7), DomainError);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic, n = 7") {
    std::set<std::uint64_t> codes;
    for (const auto& g : enumerate_graphs(7)) codes.insert(naive_canonical_code(g));
    CHECK(codes.size() == 1044);
}

TEST_CASE("canonical labelling agrees with the naive canonical form") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph a = random_graph(rng, n, 0.5);
        const Graph b = (i % 2) ? shuffled(a, rng) : random_graph(rng, n, 0.5);
        const bool naive = naive_canonical_code(a) == naive_canonical_code(b);
        REQUIRE(isomorphic(a, b) == naive);
        REQUIRE((canonical_labelling(a).certificate == canonical_labelling(b).certificate) == naive);
    }
}

TEST_CASE("canonical labelling on larger symmetric graphs") {
    std::mt19937_64 rng(11);
    for (const Graph& g : {build_G(40, 4, 4), build_theta_chain(6, 4, 2, 2), build_psi_tree(3, 7, 2, 3),
                           Graph(30), build_H(20, 9)}) {
        const Graph h = shuffled(g, rng);
        CHECK(isomorphic(g, h));
        CHECK(relabel(g, canonical_labelling(g).order) == relabel(h, canonical_labelling(h).order));
    }
    CHECK_FALSE(isomorphic(build_G(40, 4, 4), build_G(40, 4, 3)));
}

TEST_CASE("brute-force phi on worked cases") {
    CHECK(phi_bruteforce(4, 3, 3) == 2);
    CHECK(phi_bruteforce(6, 5, 5) == 3);
    CHECK(phi_bruteforce(8, 4, 4) == 3);
    CHECK_THROWS_AS(phi_bruteforce(12, 5, 5), DomainError);
    CHECK_THROWS_AS(phi_bruteforce(6, 3, 4), DomainError);

    const PhiOracle four(4);
    const Graph k13 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(isomorphic(four.extremal(3, 3), k13));
    CHECK(four.is_extremal(k13, 3, 3));

    const PhiOracle eight(8);
    CHECK(eight.is_extremal(build_H_star(4, 4), 4, 4));
    CHECK_FALSE(eight.is_extremal(Graph(8), 4, 4));
}

TEST_CASE("brute force agrees with the formula and G(n,d,k) is extremal, n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        const PhiOracle oracle(n, 2);
        for (int d = 1; d < n; ++d)
            for (int k = 1; k <= d; ++k) {
                REQUIRE(oracle.phi(d, k) == phi(PhiParams(n, d, k)));
                REQUIRE(oracle.is_extremal(build_G(n, d, k), d, k));
            }
    }
}

TEST_CASE("random instances on the worked seeds") {
    const auto j = random_bipartite_instance(1, 3, Profile::jackson);
    CHECK(j.x().size() <= 3);
    CHECK(j.y().size() <= 4);
    CHECK(j.min_x_degree() >= 3);
    CHECK(satisfies_hypotheses(j, Profile::jackson, 3));

    const auto k = random_bipartite_instance(2, 4, Profile::klz);
    CHECK(is_two_connected(k.graph()));
    CHECK(k.y().size() <= 7);

    const auto e = random_bipartite_instance(3, 4, Profile::essential);
    CHECK(is_essentially_two_connected(e.graph()));
    CHECK(e.x().size() <= 3);
    CHECK(e.y().size() <= 7);

    CHECK_THROWS_AS(random_bipartite_instance(1, 1, Profile::jackson), DomainError);
    CHECK_THROWS_AS(random_bipartite_instance(1, 2, Profile::klz), DomainError);
    CHECK_THROWS_AS(profile_from_string("dirac"), DomainError);
}

TEST_CASE("random instances satisfy their own hypotheses") {
    for (auto p : {Profile::jackson, Profile::klz, Profile::essential, Profile::lemma35,
                   Profile::path_jackson, Profile::path_connected}) {
        CHECK(profile_from_string(to_string(p)) == p);
        for (int d = 3; d <= 6; ++d)
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const auto b = random_bipartite_instance(seed, d, p, 2);
                REQUIRE(satisfies_hypotheses(b, p, d, 2));
                REQUIRE(b.x() == VertexSet::range(0, b.x().size()));
            }
    }
}

TEST_CASE("random instances are reproducible and varied") {
    const auto a = random_bipartite_instance(42, 5, Profile::klz);
    const auto b = random_bipartite_instance(42, 5, Profile::klz);
    CHECK(a.graph() == b.graph());
    std::set<std::string> distinct;
    std::set<int> x_sizes;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = random_bipartite_instance(seed, 5, Profile::klz);
        distinct.insert(encode_graph6(g.graph()));
        x_sizes.insert(g.x().size());
    }
    CHECK(distinct.size() > 100);  // |X| = 2 forces K_{2,|Y|}
    CHECK(x_sizes.size() == 4);  // |X| in 2..5
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}

TEST_CASE("suite ids and errors") {
    CHECK(suite_ids().size() == 8);
    CHECK_THROWS_AS(run_suite("nope", {}), DomainError);
    SuiteOptions big;
    big.max_n = 12;
    CHECK_THROWS_AS(run_suite("formula-vs-oracle", big), DomainError);
}

TEST_CASE("formula-vs-oracle suite, n <= 7") {
    SuiteOptions opt;
    opt.max_n = 7;
    opt.jobs = 2;
    const auto reports = run_suite("formula-vs-oracle", opt);
    CHECK(reports.size() == 6);
    CHECK(all_pass(reports));
    for (const auto& r : reports) CHECK(r.counts["mismatches"] == 0);
}

TEST_CASE("jackson suite with d = 3 is deterministic") {
    SuiteOptions opt;
    opt.seed = 7;
    opt.ds = {3};
    opt.jobs = 3;
    const auto a = run_suite("jackson", opt);
    opt.jobs = 1;
    const auto b = run_suite("jackson", opt);
    REQUIRE(a.size() == 1);
    CHECK(a[0].outcome == ReportOutcome::pass);
    CHECK(a[0].counts["pass"] == 1000);
    CHECK(a[0].to_json().dump() == b[0].to_json().dump());
    CHECK_FALSE(a[0].to_json().contains("runtime_ms"));
    CHECK(a[0].to_json(true).contains("runtime_ms"));
    CHECK(a[0].to_json()["seed"] == 7);
}

TEST_CASE("remaining suites pass at reduced scale") {
    SuiteOptions opt;
    opt.trials = 100;
    opt.jobs = 2;
    for (const char* id : {"klz", "essential", "lemma35", "merge"}) {
        const auto reports = run_suite(id, opt);
        CHECK(!reports.empty());
        for (const auto& r : reports) CHECK_MESSAGE(r.outcome == ReportOutcome::pass, to_text(r));
    }
}

TEST_CASE("failing reports carry a witness") {
    VerificationReport r;
    r.claim = "demo";
    r.outcome = ReportOutcome::fail;
    r.witness = ReportWitness{"Bw", {0}, 9};
    const auto j = r.to_json();
    CHECK(j["outcome"] == "fail");
    CHECK(j["witness"]["graph6"] == "Bw");
    CHECK(j["witness"]["instance_seed"] == 9);
    CHECK(to_text(r).rfind("FAIL demo", 0) == 0);
}

TEST_CASE("construction verification") {
    const auto star = verify_construction("H-star", {4, 4});
    CHECK(star.outcome == ReportOutcome::pass);
    CHECK(star.counts["high_degree"] == 2);
    CHECK(star.counts["contains_forbidden_path"] == "none");

    const auto chain = verify_construction("theta-chain", {6, 4, 2, 2});
    CHECK(chain.outcome == ReportOutcome::pass);
    CHECK(chain.counts["high_degree"] == 12);
    CHECK(chain.counts["circumference"] <= 4);

    for (auto [kind, params] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"H", {5, 5}}, {"G", {40, 4, 4}}, {"psi-tree", {3, 7, 2, 3}}, {"essential", {4}}})
        CHECK_MESSAGE(verify_construction(kind, params).outcome == ReportOutcome::pass, kind);
}
