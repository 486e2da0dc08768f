#include "hdpath/oracle.hpp"

#include "hdpath/canonical.hpp"
#include "hdpath/enumerate.hpp"
#include "hdpath/errors.hpp"
#include "hdpath/formulas.hpp"
#include "hdpath/parallel.hpp"
#include "hdpath/paths.hpp"

namespace hdpath {

PhiOracle::PhiOracle(int n, int jobs) : n_(n) {
    if (n < 2 || n > kMaxEnumerationOrder)
        throw DomainError("phi oracle: n=" + std::to_string(n) + " outside [2, " +
                          std::to_string(kMaxEnumerationOrder) + "]");
    graphs_ = enumerate_graphs(n, jobs);
    stats_.resize(graphs_.size());
    std::vector<std::vector<std::uint64_t>> certs(graphs_.size());
    parallel_for(graphs_.size(), jobs, [&](std::size_t i) {
        const Graph& g = graphs_[i];
        int longest = 1;
        while (longest < n_ && contains_path(g, longest + 1).found()) ++longest;
        stats_[i] = {longest, g.degrees()};
        certs[i] = canonical_labelling(g).certificate;
    });
    for (std::size_t i = 0; i < graphs_.size(); ++i) index_.emplace(std::move(certs[i]), i);

    best_.assign(cell(n_, 0), -1);
    witness_.assign(cell(n_, 0), 0);
    for (int d = 1; d < n_; ++d) {
        for (int k = 1; k <= d; ++k) {
            for (std::size_t i = 0; i < graphs_.size(); ++i) {
                if (stats_[i].longest_path > k) continue;  // contains P_{k+1}
                const int h = high_count(i, d);
                if (h > best_[cell(d, k)]) {
                    best_[cell(d, k)] = h;
                    witness_[cell(d, k)] = i;
                }
            }
        }
    }
}

int PhiOracle::high_count(std::size_t i, int d) const {
    int h = 0;
    for (int deg : stats_[i].degrees) h += deg >= d;
    return h;
}

std::int64_t PhiOracle::phi(int d, int k) const {
    static_cast<void>(PhiParams(n_, d, k));
    return best_[cell(d, k)] + 1;
}

const Graph& PhiOracle::extremal(int d, int k) const {
    static_cast<void>(PhiParams(n_, d, k));
    return graphs_[witness_[cell(d, k)]];
}

bool PhiOracle::is_extremal(const Graph& g, int d, int k) const {
    static_cast<void>(PhiParams(n_, d, k));
    if (g.order() != n_) return false;
    auto it = index_.find(canonical_labelling(g).certificate);
    if (it == index_.end()) return false;
    const std::size_t i = it->second;
    return stats_[i].longest_path <= k && high_count(i, d) == best_[cell(d, k)];
}

std::int64_t phi_bruteforce(int n, int d, int k, int jobs) {
    static_cast<void>(PhiParams(n, d, k));
    if (n > kMaxEnumerationOrder)
        throw DomainError("phi_bruteforce: n=" + std::to_string(n) +
                          " is out of the enumeration range (max " +
                          std::to_string(kMaxEnumerationOrder) + ")");
    return PhiOracle(n, jobs).phi(d, k);
}

}  // namespace hdpath
