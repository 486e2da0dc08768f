#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hdpath {

// Validated (n, d, k) with n > d >= k >= 1. P_{k+1} is the target path and
// d the degree threshold.
class PhiParams {
public:
    // Throws DomainError ("phi undefined" when d < k).
    PhiParams(std::int64_t n, std::int64_t d, std::int64_t k);

    std::int64_t n() const { return n_; }
    std::int64_t d() const { return d_; }
    std::int64_t k() const { return k_; }

private:
    std::int64_t n_, d_, k_;
};

// n = q * divisor + r with 0 <= r < divisor.
struct Decomposition {
    std::int64_t q;
    std::int64_t r;
};
Decomposition euclid(std::int64_t n, std::int64_t divisor);

// Least number of degree->=d vertices forcing a P_{k+1} in every n-vertex graph.
//   k odd:   ((k-1)/2) q + 1,                  n = q(d+1) + r
//   k = 2:   1
//   k = 4:   2q + 1 if r <= d else 2q + 2,      n = 2qd + r, 0 <= r < 2d
//   k >= 6:  ((k-2)/2) q + 1 if r <= d - k/2 else ((k-2)/2) q + 2
// k = 1 falls under the odd case and evaluates to 1.
std::int64_t phi(const PhiParams& p);

// floor((k-1)/2) floor(n/(d+1)) + eps, eps = 1 for odd k and 2 for even k.
std::int64_t phi_conjecture_bound(const PhiParams& p);

struct ConstructionCount {
    std::int64_t n;
    std::int64_t high_count;
    friend bool operator==(const ConstructionCount&, const ConstructionCount&) = default;
};

// Block chain of H_{d,k+1} copies avoiding long cycles:
// n = 1 + d + αβd, high_count = (1 + αβ) floor(k/2) + β.
// Requires k >= 2, α, β >= 1 and floor(k/2) < d <= (1+α) floor(k/2): the
// lower bound keeps the independent part of each block below degree d, the
// upper one keeps every junction vertex at degree >= d.
ConstructionCount theta_count_prop51(std::int64_t d, std::int64_t k, std::int64_t alpha,
                                     std::int64_t beta);

// Connected P_{k+1}-free tree of blocks:
// n = 1 + β(1 + αd), high_count = αβ floor((k-3)/4) + β + 1.
// Requires k >= 7, α >= 2, β >= d and d = 1 + α floor((k-3)/4).
ConstructionCount psi_count_prop52(std::int64_t d, std::int64_t k, std::int64_t alpha,
                                   std::int64_t beta);

// Exact nonnegative rational in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);
    friend bool operator==(const Rational&, const Rational&) = default;
    std::string str() const;
};
std::ostream& operator<<(std::ostream& os, const Rational& r);

// floor((k-3)/4) floor((n-1)/d) + 2. Requires n > d >= 1 and k >= 3.
std::int64_t psi_lower_efss(std::int64_t n, std::int64_t d, std::int64_t k);

// (k+3)(n-1) / (2d). Requires n > d >= k >= 1.
Rational theta_upper_woodall(std::int64_t n, std::int64_t d, std::int64_t k);

}  // namespace hdpath
