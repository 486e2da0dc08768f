// hdpath: thresholds, constructions, exact solvers and verification suites
// for high-degree vertices and long paths.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hdpath/bipartite.hpp"
#include "hdpath/constructions.hpp"
#include "hdpath/enumerate.hpp"
#include "hdpath/errors.hpp"
#include "hdpath/formulas.hpp"
#include "hdpath/graph_io.hpp"
#include "hdpath/parallel.hpp"
#include "hdpath/paths.hpp"
#include "hdpath/suites.hpp"

using namespace hdpath;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failed = 1, inconclusive = 3 };

std::string join(const std::vector<int>& vs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
    return out;
}

Graph read_graph(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::getline(std::cin, text);
    } else {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open " + path);
        std::getline(in, text);
    }
    return decode_graph6(text);
}

// "0-1-2;3-4" -> two paths.
PathCover parse_family(const std::string& text) {
    PathCover family;
    std::stringstream paths(text);
    for (std::string part; std::getline(paths, part, ';');) {
        PathWitness p;
        std::stringstream vs(part);
        for (std::string v; std::getline(vs, v, '-');) {
            try {
                p.vertices.push_back(std::stoi(v));
            } catch (const std::exception&) {
                throw FormatError("bad --family entry '" + part + "'");
            }
        }
        if (!p.vertices.empty()) family.paths.push_back(std::move(p));
    }
    return family;
}

struct SolveArgs {
    std::string task;
    std::string input;
    int target = 0;
    std::vector<int> x;
    int t = 1;
    int d = 0;
    std::string family;
    std::string mode = "jackson";
    std::string engine = "auto";
    bool force = false;
    bool json = false;
};

struct BudgetArgs {
    std::uint64_t node_limit = 0;
    double time_limit = 0;

    SearchBudget budget() const {
        SearchBudget b = SearchBudget::from_environment();
        if (node_limit > 0) b.node_limit = node_limit;
        if (time_limit > 0) b.time_limit = time_limit;
        return b;
    }
};

int emit_search(const SolveArgs& a, Outcome outcome, std::uint64_t nodes, const json& witness,
                const std::string& text_witness) {
    if (a.json) {
        json j{{"task", a.task}, {"outcome", std::string(to_string(outcome))}, {"nodes", nodes}};
        if (outcome == Outcome::found) j["witness"] = witness;
        std::cout << j.dump() << '\n';
    } else if (outcome == Outcome::found) {
        std::cout << text_witness << '\n';
    } else if (outcome == Outcome::none) {
        std::cout << "NONE\n";
    } else {
        std::cout << "INCONCLUSIVE (budget exhausted after " << nodes << " nodes)\n";
    }
    return outcome == Outcome::inconclusive ? inconclusive : ok;
}

template <class W>
json witness_json(const std::optional<W>& w) {
    return w ? json(witness_to_json(*w)) : json();
}

Engine parse_engine(const std::string& name) {
    if (name == "auto") return Engine::automatic;
    if (name == "dp") return Engine::subset_dp;
    if (name == "bnb") return Engine::branch_and_bound;
    throw DomainError("unknown engine '" + name + "' (auto, dp, bnb)");
}

template <class W>
int emit_longest(const SolveArgs& a, const Longest<W>& r) {
    const std::vector<int> vs = r.witness ? r.witness->vertices : std::vector<int>{};
    if (a.json) {
        json j{{"task", a.task},
               {"outcome", r.optimal ? "found" : "inconclusive"},
               {"length", r.length},
               {"optimal", r.optimal},
               {"nodes", r.nodes}};
        if (r.witness) j["witness"] = witness_to_json(*r.witness);
        std::cout << j.dump() << '\n';
    } else {
        if (!r.optimal) std::cout << "INCONCLUSIVE (budget exhausted; best so far)\n";
        std::cout << r.length << '\n';
        if (!vs.empty()) std::cout << join(vs) << '\n';
    }
    return r.optimal ? ok : inconclusive;
}

Bipartition bipartition_from(const Graph& g, const std::vector<int>& xs) {
    if (xs.empty()) throw DomainError("this task needs --x");
    for (int v : xs)
        if (v < 0 || v >= g.order()) throw DomainError("--x vertex " + std::to_string(v) + " out of range");
    return Bipartition(g, VertexSet::of(xs));
}

int run_solve(const SolveArgs& a, const SearchBudget& budget) {
    const Graph g = read_graph(a.input);
    if (a.task == "longest-path") return emit_longest(a, longest_path(g, budget, parse_engine(a.engine)));
    if (a.task == "longest-cycle")
        return emit_longest(a, longest_cycle(g, budget, parse_engine(a.engine)));
    if (a.task == "contains-path") {
        if (a.target < 1) throw DomainError("contains-path needs --target >= 1");
        const auto r = contains_path(g, a.target, budget);
        return emit_search(a, r.outcome, r.nodes, witness_json(r.witness),
                           r.witness ? join(r.witness->vertices) : "");
    }
    if (a.task == "cycle-through-x") {
        const auto r = find_cycle_through_X(bipartition_from(g, a.x), budget);
        return emit_search(a, r.outcome, r.nodes, witness_json(r.witness),
                           r.witness ? join(r.witness->vertices) : "");
    }
    if (a.task == "path-through-x") {
        PathHypotheses mode;
        if (a.mode == "jackson") mode = PathHypotheses::jackson;
        else if (a.mode == "essential") mode = PathHypotheses::essential;
        else throw DomainError("unknown --mode '" + a.mode + "' (jackson, essential)");
        const auto r = find_path_through_X(bipartition_from(g, a.x), mode, budget, a.force);
        return emit_search(a, r.outcome, r.nodes, witness_json(r.witness),
                           r.witness ? join(r.witness->vertices) : "");
    }
    if (a.task == "path-cover") {
        const auto r = path_cover_of_X(bipartition_from(g, a.x), a.t, budget, a.force);
        json paths = json::array();
        std::string text;
        if (r.witness) {
            for (const auto& p : r.witness->paths) {
                paths.push_back(p.vertices);
                text += (text.empty() ? "" : "\n") + join(p.vertices);
            }
        }
        return emit_search(a, r.outcome, r.nodes, json{{"kind", "paths"}, {"paths", paths}}, text);
    }
    if (a.task == "merge") {
        if (a.d < 1) throw DomainError("merge needs --d >= 1");
        const auto r = merge_high_end_paths(g, a.d, parse_family(a.family), budget);
        return emit_search(a, r.outcome, r.nodes, witness_json(r.witness),
                           r.witness ? join(r.witness->vertices) : "");
    }
    throw DomainError("unknown task '" + a.task + "'");
}

void emit_graph(const Construction& c, const std::string& format) {
    const VertexSet high = high_degree_vertices(c.graph, c.threshold);
    if (format == "graph6") {
        std::cout << encode_graph6(c.graph) << '\n';
    } else if (format == "dot") {
        std::cout << export_dot(c.graph, high);
    } else if (format == "json") {
        std::cout << graph_to_json(c.graph, high).dump() << '\n';
    } else {
        std::cout << "vertices " << c.graph.order() << ", edges " << c.graph.edge_count()
                  << ", degree >= " << c.threshold << ": " << high.size() << " ["
                  << join(high.to_vector(), ",") << "]\n";
        for (auto [u, v] : c.graph.edges()) std::cout << u << '-' << v << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thresholds, extremal constructions and exact path/cycle solvers"};
    app.require_subcommand(1);
    BudgetArgs budget_args;

    // phi
    std::int64_t n = 0, d = 0, k = 0;
    bool conjecture = false, phi_json = false;
    auto* phi_cmd = app.add_subcommand("phi", "Print phi(n, d, k)");
    phi_cmd->add_option("n", n)->required();
    phi_cmd->add_option("d", d)->required();
    phi_cmd->add_option("k", k)->required();
    phi_cmd->add_flag("--conjecture", conjecture, "Also print the conjectured bound");
    phi_cmd->add_flag("--json", phi_json);

    // construct
    std::string kind, format = "text";
    std::vector<int> params;
    bool verify = false, construct_json = false;
    auto* construct_cmd = app.add_subcommand("construct", "Build a named construction");
    construct_cmd->add_option("kind", kind, "H, H-star, G, theta-chain, psi-tree, essential")
        ->required();
    construct_cmd->add_option("params", params)->required();
    construct_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"graph6", "dot", "json", "text"}));
    construct_cmd->add_flag("--verify", verify, "Check the construction's properties");
    construct_cmd->add_flag("--json", construct_json, "Verification report as JSON");

    // solve
    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run an exact solver on a graph6 input");
    solve_cmd
        ->add_option("task", solve.task)
        ->required()
        ->check(CLI::IsMember({"longest-path", "longest-cycle", "contains-path", "cycle-through-x",
                               "path-through-x", "path-cover", "merge"}));
    solve_cmd->add_option("--input", solve.input, "graph6 file (default: standard input)");
    solve_cmd->add_option("--target", solve.target, "Path order for contains-path");
    solve_cmd->add_option("--x", solve.x, "Comma-separated X vertices")->delimiter(',');
    solve_cmd->add_option("--t", solve.t, "Number of apexes for path-cover");
    solve_cmd->add_option("--d", solve.d, "Degree threshold for merge");
    solve_cmd->add_option("--family", solve.family, "Paths for merge, e.g. 0-1-2;4-5");
    solve_cmd->add_option("--mode", solve.mode, "jackson or essential (path-through-x)");
    solve_cmd->add_option("--engine", solve.engine, "auto, dp or bnb (longest-*)");
    solve_cmd->add_flag("--force", solve.force, "Search even when hypotheses fail");
    solve_cmd->add_flag("--json", solve.json);

    // oracle
    std::string suite;
    SuiteOptions suite_opt;
    suite_opt.jobs = default_jobs();
    bool timing = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run a verification suite (JSON lines)");
    oracle_cmd->add_option("suite", suite)->required();
    oracle_cmd->add_option("--seed", suite_opt.seed);
    oracle_cmd->add_option("--max-n", suite_opt.max_n);
    oracle_cmd->add_option("--trials", suite_opt.trials);
    oracle_cmd->add_option("--jobs", suite_opt.jobs)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--d", suite_opt.ds, "Degree thresholds, comma-separated")
        ->delimiter(',');
    oracle_cmd->add_flag("--timing", timing, "Include runtime_ms in reports");

    // enumerate
    int enum_n = 0, enum_jobs = default_jobs();
    bool count_only = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "All graphs on n vertices up to isomorphism");
    enum_cmd->add_option("n", enum_n)->required();
    enum_cmd->add_option("--jobs", enum_jobs)->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--count", count_only, "Print only the number of graphs");

    for (auto* cmd : {construct_cmd, solve_cmd, oracle_cmd}) {
        cmd->add_option("--node-limit", budget_args.node_limit, "Search node budget");
        cmd->add_option("--time-limit", budget_args.time_limit, "Search time budget (seconds)");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*phi_cmd) {
            const PhiParams p(n, d, k);
            const auto value = phi(p);
            const auto bound = phi_conjecture_bound(p);
            if (phi_json) {
                json j{{"n", n}, {"d", d}, {"k", k}, {"phi", value}};
                if (conjecture) {
                    j["conjecture_bound"] = bound;
                    j["refutes"] = value > bound;
                }
                std::cout << j.dump() << '\n';
            } else if (conjecture) {
                std::cout << "phi=" << value << " bound=" << bound
                          << (value > bound ? " REFUTES" : "") << '\n';
            } else {
                std::cout << value << '\n';
            }
            return ok;
        }
        if (*construct_cmd) {
            const Construction c = build_named(kind, params);
            if (!verify) {
                emit_graph(c, format);
                return ok;
            }
            if (format != "text") emit_graph(c, format);
            const auto rep = verify_construction(kind, params, budget_args.budget());
            std::cout << (construct_json ? rep.to_json().dump() : to_text(rep)) << '\n';
            return rep.outcome == ReportOutcome::pass        ? ok
                   : rep.outcome == ReportOutcome::fail ? failed
                                                        : inconclusive;
        }
        if (*solve_cmd) return run_solve(solve, budget_args.budget());
        if (*oracle_cmd) {
            suite_opt.budget = budget_args.budget();
            const auto reports = run_suite(suite, suite_opt);
            for (const auto& r : reports) std::cout << r.to_json(timing).dump() << '\n';
            return all_pass(reports) ? ok : failed;
        }
        if (*enum_cmd) {
            const auto graphs = enumerate_graphs(enum_n, enum_jobs);
            if (count_only) {
                std::cout << graphs.size() << '\n';
            } else {
                for (const auto& g : graphs) std::cout << encode_graph6(g) << '\n';
            }
            return ok;
        }
    } catch (const LemmaViolation& e) {
        std::cerr << "lemma violation: " << e.what() << "\nwitness: " << e.graph6() << '\n';
        return failed;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << " (use --force to search anyway)\n";
        return failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failed;
    }
    return ok;
}
