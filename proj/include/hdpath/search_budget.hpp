#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace hdpath {

// Limits on one exact search. Running out is reported as
// Outcome::inconclusive, never as "no solution".
struct SearchBudget {
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
    double time_limit = std::numeric_limits<double>::infinity();  // seconds

    static SearchBudget unlimited() { return {}; }
    // Node limit taken from HDPATH_NODE_LIMIT when set, unlimited otherwise.
    static SearchBudget from_environment();
};

enum class Outcome { found, none, inconclusive };
std::string_view to_string(Outcome o);

template <class Witness>
struct SearchResult {
    Outcome outcome = Outcome::none;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;

    bool found() const { return outcome == Outcome::found; }
};

// Counts search nodes against a SearchBudget. The clock is read every 4096
// nodes.
class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& budget);

    // Records one node; false once the budget is exhausted.
    bool step() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > budget_.node_limit) return !(exhausted_ = true);
        if ((nodes_ & 4095) == 0 && timed_out()) return !(exhausted_ = true);
        return true;
    }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool timed_out() const;

    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace hdpath
