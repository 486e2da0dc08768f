#include "hdpath/search_budget.hpp"

#include <cstdlib>
#include <string>

namespace hdpath {

SearchBudget SearchBudget::from_environment() {
    SearchBudget b;
    if (const char* env = std::getenv("HDPATH_NODE_LIMIT"); env && *env) {
        auto limit = std::stoull(env);
        if (limit > 0) b.node_limit = limit;
    }
    return b;
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::found: return "found";
        case Outcome::none: return "none";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

BudgetTracker::BudgetTracker(const SearchBudget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {}

bool BudgetTracker::timed_out() const {
    if (budget_.time_limit == std::numeric_limits<double>::infinity()) return false;
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > budget_.time_limit;
}

}  // namespace hdpath
