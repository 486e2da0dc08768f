#include "hdpath/suites.hpp"

#include <chrono>
#include <functional>

#include "hdpath/bipartite.hpp"
#include "hdpath/canonical.hpp"
#include "hdpath/constructions.hpp"
#include "hdpath/enumerate.hpp"
#include "hdpath/errors.hpp"
#include "hdpath/formulas.hpp"
#include "hdpath/graph_io.hpp"
#include "hdpath/instances.hpp"
#include "hdpath/oracle.hpp"
#include "hdpath/parallel.hpp"
#include "hdpath/paths.hpp"

namespace hdpath {

using ojson = nlohmann::ordered_json;

std::string_view to_string(ReportOutcome o) {
    switch (o) {
        case ReportOutcome::pass: return "pass";
        case ReportOutcome::fail: return "fail";
        case ReportOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

ojson VerificationReport::to_json(bool with_runtime) const {
    ojson j;
    j["claim"] = claim;
    j["params"] = params;
    j["outcome"] = std::string(hdpath::to_string(outcome));
    j["counts"] = counts;
    j["seed"] = seed;
    if (witness) {
        ojson w;
        w["graph6"] = witness->graph6;
        if (!witness->x.empty()) w["x"] = witness->x;
        if (witness->instance_seed) w["instance_seed"] = *witness->instance_seed;
        j["witness"] = std::move(w);
    }
    if (with_runtime) j["runtime_ms"] = runtime_ms;
    return j;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.outcome != ReportOutcome::pass) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Trial {
    ReportOutcome outcome = ReportOutcome::pass;
    std::optional<ReportWitness> witness;
};

ReportWitness witness_of(const Graph& g, std::optional<std::uint64_t> seed = {}) {
    return {encode_graph6(g), {}, seed};
}

ReportWitness witness_of(const Bipartition& b, std::optional<std::uint64_t> seed = {}) {
    return {encode_graph6(b.graph()), b.x().to_vector(), seed};
}

Trial from_search(Outcome o, bool valid, ReportWitness w) {
    if (o == Outcome::found && valid) return {};
    return {o == Outcome::inconclusive ? ReportOutcome::inconclusive : ReportOutcome::fail,
            std::move(w)};
}

// Runs `trials` independent checks in parallel. Instance i uses seed
// mix_seed(group_seed, i). The report keeps the witness of the lowest
// failing index (or, absent failures, the lowest inconclusive one).
VerificationReport run_trials(std::string claim, ojson params, const SuiteOptions& opt,
                              std::uint64_t salt, int trials,
                              const std::function<Trial(std::uint64_t)>& check) {
    const auto start = Clock::now();
    const std::uint64_t group_seed = mix_seed(opt.seed, salt);
    std::vector<Trial> results(static_cast<std::size_t>(trials));
    parallel_for(results.size(), opt.jobs, [&](std::size_t i) {
        const std::uint64_t s = mix_seed(group_seed, i);
        try {
            results[i] = check(s);
        } catch (const LemmaViolation& e) {
            results[i] = {ReportOutcome::fail, ReportWitness{e.graph6(), {}, s}};
        } catch (const DomainError&) {
            results[i] = {ReportOutcome::inconclusive, std::nullopt};
        }
    });

    VerificationReport rep;
    rep.claim = std::move(claim);
    rep.params = std::move(params);
    rep.seed = opt.seed;
    int pass = 0, fail = 0, inconclusive = 0;
    for (const auto& t : results) {
        if (t.outcome == ReportOutcome::pass) {
            ++pass;
        } else if (t.outcome == ReportOutcome::fail) {
            if (fail++ == 0) rep.witness = t.witness;
        } else {
            if (inconclusive++ == 0 && fail == 0) rep.witness = t.witness;
        }
    }
    rep.outcome = fail ? ReportOutcome::fail
                  : inconclusive ? ReportOutcome::inconclusive
                                 : ReportOutcome::pass;
    rep.counts = {{"trials", trials}, {"pass", pass}, {"fail", fail},
                  {"inconclusive", inconclusive}};
    rep.runtime_ms = ms_since(start);
    return rep;
}

bool cycle_covers(const Bipartition& b, const CycleWitness& c) {
    return is_valid_cycle(b.graph(), c) && b.x().is_subset_of(VertexSet::of(c.vertices));
}

bool path_covers(const Graph& g, const VertexSet& x, const PathWitness& p) {
    return is_valid_path(g, p) && x.is_subset_of(VertexSet::of(p.vertices));
}

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

std::vector<int> ds_or(const SuiteOptions& opt, std::vector<int> fallback) {
    return opt.ds.empty() ? fallback : opt.ds;
}

// ---- formula-vs-oracle ----------------------------------------------------

std::vector<VerificationReport> formula_vs_oracle(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 8);
    if (max_n < 2 || max_n > kMaxEnumerationOrder)
        throw DomainError("formula-vs-oracle: --max-n " + std::to_string(max_n) +
                          " out of range [2, " + std::to_string(kMaxEnumerationOrder) + "]");
    std::vector<VerificationReport> out;
    for (int n = 2; n <= max_n; ++n) {
        const auto start = Clock::now();
        const PhiOracle oracle(n, opt.jobs);
        VerificationReport rep;
        rep.claim = "phi-formula-matches-bruteforce";
        rep.params = {{"n", n}};
        rep.seed = opt.seed;
        int triples = 0, mismatches = 0, construction_misses = 0;
        for (int d = 1; d < n; ++d) {
            for (int k = 1; k <= d; ++k) {
                ++triples;
                const std::int64_t formula = phi(PhiParams(n, d, k));
                const std::int64_t brute = oracle.phi(d, k);
                const Graph g = build_G(n, d, k);
                const bool extremal = oracle.is_extremal(g, d, k);
                if (formula != brute && mismatches++ == 0 && !rep.witness) {
                    rep.witness = witness_of(oracle.extremal(d, k));
                    rep.params["first_mismatch"] = {{"d", d}, {"k", k}, {"formula", formula},
                                                    {"bruteforce", brute}};
                }
                if (!extremal && construction_misses++ == 0 && !rep.witness)
                    rep.witness = witness_of(g);
            }
        }
        rep.outcome = mismatches + construction_misses ? ReportOutcome::fail : ReportOutcome::pass;
        rep.counts = {{"graphs", oracle.graphs().size()},
                      {"triples", triples},
                      {"mismatches", mismatches},
                      {"construction_not_extremal", construction_misses}};
        rep.runtime_ms = ms_since(start);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- construction-invariants ----------------------------------------------

std::vector<VerificationReport> construction_invariants(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 60);
    if (max_n < 2 || max_n > kMaxVertices)
        throw DomainError("construction-invariants: --max-n out of range [2, " +
                          std::to_string(kMaxVertices) + "]");
    std::vector<VerificationReport> out;
    for (int k = 1; k <= 8; ++k) {
        const auto start = Clock::now();
        struct Triple {
            int n, d;
        };
        std::vector<Triple> triples;
        for (int d = k; d <= 10; ++d)
            for (int n = d + 1; n <= max_n; ++n) triples.push_back({n, d});
        std::vector<Trial> results(triples.size());
        parallel_for(triples.size(), opt.jobs, [&](std::size_t i) {
            const auto [n, d] = triples[i];
            const Graph g = build_G(n, d, k);
            const auto high = high_degree_vertices(g, d).size();
            const auto path = contains_path(g, k + 1, opt.budget);
            const bool ok = g.order() == n && high == phi(PhiParams(n, d, k)) - 1;
            if (!ok || path.outcome == Outcome::found)
                results[i] = {ReportOutcome::fail, witness_of(g)};
            else if (path.outcome == Outcome::inconclusive)
                results[i] = {ReportOutcome::inconclusive, witness_of(g)};
        });
        VerificationReport rep;
        rep.claim = "construction-G-extremal-and-path-free";
        rep.params = {{"k", k}, {"d_max", 10}, {"n_max", max_n}};
        rep.seed = opt.seed;
        int fail = 0, inconclusive = 0;
        for (const auto& t : results) {
            if (t.outcome == ReportOutcome::fail && fail++ == 0) rep.witness = t.witness;
            if (t.outcome == ReportOutcome::inconclusive && inconclusive++ == 0 && !fail)
                rep.witness = t.witness;
        }
        rep.outcome = fail ? ReportOutcome::fail
                      : inconclusive ? ReportOutcome::inconclusive
                                     : ReportOutcome::pass;
        rep.counts = {{"triples", triples.size()}, {"fail", fail}, {"inconclusive", inconclusive}};
        rep.runtime_ms = ms_since(start);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- cycle-through-X suites -------------------------------------------------

std::vector<VerificationReport> cycle_suite(Profile profile, const std::string& claim,
                                            const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    const int trials = or_default(opt.trials, 1000);
    for (int d : ds_or(opt, {3, 4, 5, 6})) {
        out.push_back(run_trials(
            claim, {{"d", d}, {"profile", to_string(profile)}}, opt,
            static_cast<std::uint64_t>(profile) * 1000 + d, trials, [&](std::uint64_t s) {
                const Bipartition b = random_bipartite_instance(s, d, profile);
                if (!satisfies_hypotheses(b, profile, d)) return Trial{ReportOutcome::fail, witness_of(b, s)};
                const auto r = find_cycle_through_X(b, opt.budget);
                return from_search(r.outcome, r.witness && cycle_covers(b, *r.witness),
                                   witness_of(b, s));
            }));
    }
    return out;
}

// The K_{d,d-1}-plus-pendants family: no cycle through all of X, but one
// through every (d-1)-subset of X.
VerificationReport essential_sharpness(int d, const SuiteOptions& opt) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.claim = "essential-counterexample-sharp";
    rep.params = {{"d", d}};
    rep.seed = opt.seed;
    int checks = 0, fail = 0, inconclusive = 0;
    for (int extra = 1; extra <= 2; ++extra) {
        const Bipartition b = build_essential_counterexample(d, std::vector<int>(d, extra));
        const Graph& g = b.graph();
        auto note = [&](ReportOutcome o) {
            ++checks;
            if (o == ReportOutcome::fail && fail++ == 0) rep.witness = witness_of(b);
            if (o == ReportOutcome::inconclusive && inconclusive++ == 0 && !fail)
                rep.witness = witness_of(b);
        };
        note(is_essentially_two_connected(g) && b.min_x_degree() >= d ? ReportOutcome::pass
                                                                       : ReportOutcome::fail);
        const auto all = find_cycle_through_X(b, opt.budget);
        note(all.outcome == Outcome::none          ? ReportOutcome::pass
             : all.outcome == Outcome::inconclusive ? ReportOutcome::inconclusive
                                                    : ReportOutcome::fail);
        const auto cross = find_cycle_containing(g, b.x(), opt.budget);
        note(cross.outcome == Outcome::none          ? ReportOutcome::pass
             : cross.outcome == Outcome::inconclusive ? ReportOutcome::inconclusive
                                                      : ReportOutcome::fail);
        for (int skip : b.x()) {
            VertexSet required = b.x();
            required.erase(skip);
            const auto r = find_cycle_containing(g, required, opt.budget);
            note(r.outcome == Outcome::found ? ReportOutcome::pass
                 : r.outcome == Outcome::inconclusive ? ReportOutcome::inconclusive
                                                      : ReportOutcome::fail);
        }
    }
    rep.outcome = fail ? ReportOutcome::fail
                  : inconclusive ? ReportOutcome::inconclusive
                                 : ReportOutcome::pass;
    rep.counts = {{"checks", checks}, {"fail", fail}, {"inconclusive", inconclusive}};
    rep.runtime_ms = ms_since(start);
    return rep;
}

// ---- lemma35 --------------------------------------------------------------

std::vector<VerificationReport> lemma35(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    const int cover_trials = or_default(opt.trials, 500);
    for (int d : ds_or(opt, {3, 4})) {
        for (int t = 1; t <= 2; ++t) {
            out.push_back(run_trials(
                "path-cover-of-X", {{"d", d}, {"t", t}}, opt, 10000 + 10 * d + t, cover_trials,
                [&](std::uint64_t s) {
                    const Bipartition b = random_bipartite_instance(s, d, Profile::lemma35, t);
                    const auto r = path_cover_of_X(b, t, opt.budget);
                    bool ok = false;
                    if (r.witness) {
                        ok = static_cast<int>(r.witness->paths.size()) <= t + 1 &&
                             b.x().is_subset_of(r.witness->vertices());
                        int total = 0;
                        for (const auto& p : r.witness->paths) {
                            ok = ok && is_valid_path(b.graph(), p);
                            total += p.size();
                        }
                        ok = ok && total == r.witness->vertices().size();
                    }
                    return from_search(r.outcome, ok, witness_of(b, s));
                }));
        }
    }
    const int path_trials = or_default(opt.trials, 1000);
    for (auto [profile, mode, claim] :
         {std::tuple{Profile::path_jackson, PathHypotheses::jackson, "path-through-X-jackson"},
          std::tuple{Profile::path_connected, PathHypotheses::essential,
                     "path-through-X-connected"}}) {
        for (int d : ds_or(opt, {3, 4, 5})) {
            out.push_back(run_trials(
                claim, {{"d", d}}, opt, 20000 + static_cast<std::uint64_t>(mode) * 100 + d,
                path_trials, [&](std::uint64_t s) {
                    const Bipartition b = random_bipartite_instance(s, d, profile);
                    const auto r = find_path_through_X(b, mode, opt.budget);
                    return from_search(r.outcome,
                                       r.witness && path_covers(b.graph(), b.x(), *r.witness),
                                       witness_of(b, s));
                }));
        }
    }
    return out;
}

// ---- merge ----------------------------------------------------------------

std::vector<VerificationReport> merge(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    const int trials = or_default(opt.trials, 500);
    for (int d : ds_or(opt, {3, 4, 5})) {
        out.push_back(run_trials(
            "merge-high-end-paths", {{"d", d}}, opt, 30000 + d, trials, [&](std::uint64_t s) {
                const MergeInstance inst = random_merge_instance(s, d);
                const auto r = merge_high_end_paths(inst.graph, d, inst.family, opt.budget);
                bool ok = false;
                if (r.witness) {
                    const auto& v = r.witness->vertices;
                    ok = is_valid_path(inst.graph, *r.witness) &&
                         inst.graph.degree(v.front()) >= d && inst.graph.degree(v.back()) >= d &&
                         inst.family.vertices().is_subset_of(VertexSet::of(v));
                }
                return from_search(r.outcome, ok, witness_of(inst.graph, s));
            }));
    }
    return out;
}

// ---- theta-psi ------------------------------------------------------------

// What each biconnected component of a theta chain must look like. For k < 4
// the H_{d,k+1} pieces are stars, the chain is a tree and its biconnected
// components are single edges.
Graph theta_block(int d, int k) {
    return k / 2 >= 2 ? build_H(d, k + 1) : Graph::from_edges(2, {{0, 1}});
}

Trial theta_check(int d, int k, int alpha, int beta, const SearchBudget& budget) {
    const Graph g = build_theta_chain(d, k, alpha, beta);
    const auto count = theta_count_prop51(d, k, alpha, beta);
    bool ok = g.order() == count.n && is_connected(g) &&
              high_degree_vertices(g, d).size() == count.high_count;
    const Graph h = theta_block(d, k);
    for (const auto& blk : blocks(g)) ok = ok && isomorphic(g.induced(blk), h);
    const auto c = longest_cycle(g, budget);
    if (!c.optimal) return {ReportOutcome::inconclusive, witness_of(g)};
    ok = ok && c.length <= k;
    return ok ? Trial{} : Trial{ReportOutcome::fail, witness_of(g)};
}

Trial psi_check(int d, int k, int alpha, int beta, const SearchBudget& budget) {
    const Graph g = build_psi_tree(d, k, alpha, beta);
    const auto count = psi_count_prop52(d, k, alpha, beta);
    const auto high = high_degree_vertices(g, d).size();
    bool ok = g.order() == count.n && is_connected(g) && high == count.high_count &&
              high > psi_lower_efss(count.n, d, k) - 1;
    const auto p = contains_path(g, k + 1, budget);
    if (p.outcome == Outcome::inconclusive) return {ReportOutcome::inconclusive, witness_of(g)};
    ok = ok && p.outcome == Outcome::none;
    return ok ? Trial{} : Trial{ReportOutcome::fail, witness_of(g)};
}

VerificationReport summarize(std::string claim, ojson params, const std::vector<Trial>& results,
                             const SuiteOptions& opt, Clock::time_point start) {
    VerificationReport rep;
    rep.claim = std::move(claim);
    rep.params = std::move(params);
    rep.seed = opt.seed;
    int fail = 0, inconclusive = 0;
    for (const auto& t : results) {
        if (t.outcome == ReportOutcome::fail && fail++ == 0) rep.witness = t.witness;
        if (t.outcome == ReportOutcome::inconclusive && inconclusive++ == 0 && !fail)
            rep.witness = t.witness;
    }
    rep.outcome = fail ? ReportOutcome::fail
                  : inconclusive ? ReportOutcome::inconclusive
                                 : ReportOutcome::pass;
    rep.counts = {{"cases", results.size()}, {"fail", fail}, {"inconclusive", inconclusive}};
    rep.runtime_ms = ms_since(start);
    return rep;
}

std::vector<VerificationReport> theta_psi(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 40);
    std::vector<VerificationReport> out;
    struct Case {
        int d, k, alpha, beta;
    };
    auto run = [&](std::string claim, ojson params, const std::vector<Case>& cases, bool theta) {
        const auto start = Clock::now();
        std::vector<Trial> results(cases.size());
        parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
            const auto& c = cases[i];
            results[i] = theta ? theta_check(c.d, c.k, c.alpha, c.beta, opt.budget)
                               : psi_check(c.d, c.k, c.alpha, c.beta, opt.budget);
        });
        out.push_back(summarize(std::move(claim), std::move(params), results, opt, start));
    };

    for (Case c : {Case{4, 4, 1, 1}, Case{6, 4, 2, 2}, Case{4, 5, 2, 1}})
        run("theta-chain", {{"d", c.d}, {"k", c.k}, {"alpha", c.alpha}, {"beta", c.beta}}, {c},
            true);
    run("psi-tree", {{"d", 3}, {"k", 7}, {"alpha", 2}, {"beta", 3}}, {{3, 7, 2, 3}}, false);

    std::vector<Case> theta_scan, psi_scan;
    for (int k = 2; k <= max_n; ++k)
        for (int alpha = 1; 1 + (k / 2 + 1) * (1 + alpha) <= max_n; ++alpha)
            for (int d = k / 2 + 1; d <= (1 + alpha) * (k / 2); ++d)
                for (int beta = 1; 1 + d + alpha * beta * d <= max_n; ++beta)
                    theta_scan.push_back({d, k, alpha, beta});
    for (int k = 7; k <= max_n; ++k)
        for (int alpha = 2;; ++alpha) {
            const int d = 1 + alpha * ((k - 3) / 4);
            if (1 + d * (1 + alpha * d) > max_n) break;
            for (int beta = d; 1 + beta * (1 + alpha * d) <= max_n; ++beta)
                psi_scan.push_back({d, k, alpha, beta});
        }
    run("theta-chain-scan", {{"n_max", max_n}}, theta_scan, true);
    run("psi-tree-scan", {{"n_max", max_n}}, psi_scan, false);
    return out;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{"formula-vs-oracle", "construction-invariants",
                                              "jackson",           "klz",
                                              "essential",         "lemma35",
                                              "merge",             "theta-psi"};
    return ids;
}

std::vector<VerificationReport> run_suite(std::string_view id, const SuiteOptions& options) {
    if (id == "formula-vs-oracle") return formula_vs_oracle(options);
    if (id == "construction-invariants") return construction_invariants(options);
    if (id == "jackson") return cycle_suite(Profile::jackson, "cycle-through-X-jackson", options);
    if (id == "klz") return cycle_suite(Profile::klz, "cycle-through-X-2-connected", options);
    if (id == "essential") {
        auto out = cycle_suite(Profile::essential, "cycle-through-X-essential", options);
        for (int d : {3, 4}) out.push_back(essential_sharpness(d, options));
        return out;
    }
    if (id == "lemma35") return lemma35(options);
    if (id == "merge") return merge(options);
    if (id == "theta-psi") return theta_psi(options);
    throw DomainError("unknown suite '" + std::string(id) + "'");
}

VerificationReport verify_construction(const std::string& kind, const std::vector<int>& params,
                                       const SearchBudget& budget) {
    const auto start = Clock::now();
    const Construction c = build_named(kind, params);
    const Graph& g = c.graph;
    const int d = c.threshold;

    VerificationReport rep;
    rep.claim = "construction-" + kind;
    rep.params = {{"kind", kind}, {"params", params}};
    const auto high = high_degree_vertices(g, d).size();
    rep.counts = {{"vertices", g.order()}, {"high_degree", high}};
    bool ok = true;
    bool inconclusive = false;

    auto expect = [&](const char* key, std::int64_t actual, std::int64_t wanted) {
        rep.counts[std::string("expected_") + key] = wanted;
        ok = ok && actual == wanted;
    };
    auto path_free = [&](int k) {
        const auto r = contains_path(g, k + 1, budget);
        rep.counts["forbidden_path_vertices"] = k + 1;
        rep.counts["contains_forbidden_path"] = std::string(to_string(r.outcome));
        inconclusive = inconclusive || r.outcome == Outcome::inconclusive;
        ok = ok && r.outcome != Outcome::found;
    };

    if (kind == "H") {
        const int k = params[1];
        expect("vertices", g.order(), d + 1);
        expect("high_degree", high, (k - 1) / 2);
        path_free(k);
    } else if (kind == "H-star") {
        const int k = params[1];
        expect("vertices", g.order(), 2 * d + 2 - k / 2);
        expect("high_degree", high, k / 2);
        path_free(k);
    } else if (kind == "G") {
        const int n = params[0], k = params[2];
        expect("vertices", g.order(), n);
        expect("high_degree", high, phi(PhiParams(n, d, k)) - 1);
        path_free(k);
    } else if (kind == "theta-chain") {
        const int k = params[1];
        const auto count = theta_count_prop51(d, k, params[2], params[3]);
        expect("vertices", g.order(), count.n);
        expect("high_degree", high, count.high_count);
        const Graph h = theta_block(d, k);
        int matching = 0;
        const auto bs = blocks(g);
        for (const auto& blk : bs) matching += isomorphic(g.induced(blk), h);
        rep.counts["blocks"] = bs.size();
        rep.counts["blocks_isomorphic_to_H"] = matching;
        ok = ok && matching == static_cast<int>(bs.size());
        const auto cyc = longest_cycle(g, budget);
        rep.counts["circumference"] = cyc.length;
        rep.counts["max_circumference"] = k;
        inconclusive = inconclusive || !cyc.optimal;
        ok = ok && cyc.length <= k;
    } else if (kind == "psi-tree") {
        const int k = params[1];
        const auto count = psi_count_prop52(d, k, params[2], params[3]);
        expect("vertices", g.order(), count.n);
        expect("high_degree", high, count.high_count);
        const auto efss = psi_lower_efss(count.n, d, k) - 1;
        rep.counts["efss_high_degree"] = efss;
        rep.counts["connected"] = is_connected(g);
        ok = ok && is_connected(g) && static_cast<std::int64_t>(high) > efss;
        path_free(k);
    } else if (kind == "essential") {
        std::vector<int> pendants(params.begin() + 1, params.end());
        if (pendants.empty()) pendants.assign(d, 1);
        const Bipartition b = build_essential_counterexample(d, pendants);
        rep.counts["x"] = b.x().size();
        rep.counts["y"] = b.y().size();
        const bool e2c = is_essentially_two_connected(g);
        rep.counts["essentially_two_connected"] = e2c;
        const auto r = find_cycle_through_X(b, budget);
        rep.counts["cycle_through_X"] = std::string(to_string(r.outcome));
        inconclusive = inconclusive || r.outcome == Outcome::inconclusive;
        ok = ok && e2c && b.min_x_degree() >= d && r.outcome != Outcome::found;
    }

    rep.outcome = !ok ? ReportOutcome::fail
                  : inconclusive ? ReportOutcome::inconclusive
                                 : ReportOutcome::pass;
    if (rep.outcome != ReportOutcome::pass) rep.witness = witness_of(g);
    rep.runtime_ms = ms_since(start);
    return rep;
}

std::string to_text(const VerificationReport& r) {
    std::string out = r.outcome == ReportOutcome::pass   ? "PASS"
                      : r.outcome == ReportOutcome::fail ? "FAIL"
                                                         : "INCONCLUSIVE";
    out += " " + r.claim;
    for (const auto& [key, value] : r.params.items()) out += " " + key + "=" + value.dump();
    out += " |";
    for (const auto& [key, value] : r.counts.items()) out += " " + key + "=" + value.dump();
    if (r.witness) out += " | witness=" + r.witness->graph6;
    return out;
}

}  // namespace hdpath
