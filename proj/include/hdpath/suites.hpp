#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hdpath/search_budget.hpp"

namespace hdpath {

enum class ReportOutcome { pass, fail, inconclusive };
std::string_view to_string(ReportOutcome o);

// Graph reproducing a failure (or an inconclusive search).
struct ReportWitness {
    std::string graph6;
    std::vector<int> x;               // bipartite side, when relevant
    std::optional<std::uint64_t> instance_seed;
};

// One checked claim over one parameter group.
struct VerificationReport {
    std::string claim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    ReportOutcome outcome = ReportOutcome::pass;
    std::optional<ReportWitness> witness;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;
    double runtime_ms = 0;

    // Keys in fixed order. runtime_ms only when requested, so that reruns
    // with the same seed are byte-identical by default.
    nlohmann::ordered_json to_json(bool with_runtime = false) const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int max_n = 0;   // 0: suite default
    int trials = 0;  // 0: suite default
    int jobs = 1;
    std::vector<int> ds;  // empty: suite default
    SearchBudget budget = SearchBudget::unlimited();
};

// formula-vs-oracle, construction-invariants, jackson, klz, essential,
// lemma35, merge, theta-psi.
const std::vector<std::string>& suite_ids();

// Runs one suite and returns its reports in a fixed order. Throws
// DomainError for an unknown id or out-of-range options; check failures are
// report outcomes, never exceptions.
std::vector<VerificationReport> run_suite(std::string_view id, const SuiteOptions& options);

bool all_pass(const std::vector<VerificationReport>& reports);

// Checks the defining properties of a named construction (kinds and
// parameters as in build_named): order, high-degree count, and path- or
// cycle-freeness, or for "essential" the absence of a cycle through X.
VerificationReport verify_construction(const std::string& kind, const std::vector<int>& params,
                                       const SearchBudget& budget = SearchBudget::unlimited());

// One-line human-readable rendering.
std::string to_text(const VerificationReport& r);

}  // namespace hdpath
