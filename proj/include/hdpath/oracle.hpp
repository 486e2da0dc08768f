#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hdpath/graph.hpp"

namespace hdpath {

// Ground truth for phi on one vertex count: every isomorphism class on n
// vertices, its longest path, and for each (d, k) with k <= d < n the most
// degree->=d vertices any P_{k+1}-free graph reaches.
class PhiOracle {
public:
    // n in [2, kMaxEnumerationOrder]. Freeness is decided by contains_path
    // with an unlimited budget.
    explicit PhiOracle(int n, int jobs = 1);

    int order() const { return n_; }
    const std::vector<Graph>& graphs() const { return graphs_; }

    // 1 + max over P_{k+1}-free graphs of the number of degree->=d vertices.
    std::int64_t phi(int d, int k) const;
    // First graph in enumeration order attaining the maximum.
    const Graph& extremal(int d, int k) const;
    // g is P_{k+1}-free and has the maximum number of degree->=d vertices,
    // decided on g's enumerated representative (looked up canonically).
    bool is_extremal(const Graph& g, int d, int k) const;

private:
    struct Stats {
        int longest_path = 0;  // vertices
        std::vector<int> degrees;
    };
    int high_count(std::size_t i, int d) const;
    std::size_t cell(int d, int k) const { return static_cast<std::size_t>(d * (n_ + 1) + k); }

    int n_;
    std::vector<Graph> graphs_;
    std::vector<Stats> stats_;
    std::vector<int> best_;             // indexed by cell(d,k)
    std::vector<std::size_t> witness_;  // indexed by cell(d,k)
    std::map<std::vector<std::uint64_t>, std::size_t> index_;
};

// Validates n > d >= k >= 1 and n <= kMaxEnumerationOrder.
std::int64_t phi_bruteforce(int n, int d, int k, int jobs = 1);

}  // namespace hdpath
