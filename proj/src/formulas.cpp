#include "hdpath/formulas.hpp"

#include <cassert>
#include <numeric>
#include <ostream>

#include "hdpath/errors.hpp"

namespace hdpath {

namespace {

std::string triple(std::int64_t n, std::int64_t d, std::int64_t k) {
    return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", k=" + std::to_string(k) +
           ")";
}

}  // namespace

PhiParams::PhiParams(std::int64_t n, std::int64_t d, std::int64_t k) : n_(n), d_(d), k_(k) {
    if (k < 1) throw DomainError("parameter domain violated: k must be >= 1 " + triple(n, d, k));
    if (d < k) throw DomainError("phi undefined: d < k " + triple(n, d, k));
    if (n <= d) throw DomainError("parameter domain violated: n <= d " + triple(n, d, k));
}

Decomposition euclid(std::int64_t n, std::int64_t divisor) {
    assert(divisor > 0 && n >= 0);
    Decomposition out{n / divisor, n % divisor};
    assert(0 <= out.r && out.r < divisor);
    return out;
}

std::int64_t phi(const PhiParams& p) {
    const auto n = p.n(), d = p.d(), k = p.k();
    if (k % 2 == 1) {
        auto [q, r] = euclid(n, d + 1);
        assert(r <= d);
        return (k - 1) / 2 * q + 1;
    }
    if (k == 2) return 1;
    if (k == 4) {
        auto [q, r] = euclid(n, 2 * d);
        assert(r < 2 * d);
        return r <= d ? 2 * q + 1 : 2 * q + 2;
    }
    auto [q, r] = euclid(n, d + 1);
    assert(r <= d);
    return r <= d - k / 2 ? (k - 2) / 2 * q + 1 : (k - 2) / 2 * q + 2;
}

std::int64_t phi_conjecture_bound(const PhiParams& p) {
    const std::int64_t eps = p.k() % 2 == 1 ? 1 : 2;
    return (p.k() - 1) / 2 * (p.n() / (p.d() + 1)) + eps;
}

ConstructionCount theta_count_prop51(std::int64_t d, std::int64_t k, std::int64_t alpha,
                                     std::int64_t beta) {
    const auto half = k / 2;
    const std::string args = "(d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                             ", alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                             ")";
    if (k < 2) throw DomainError("theta chain needs k >= 2 " + args);
    if (alpha < 1 || beta < 1) throw DomainError("theta chain needs alpha, beta >= 1 " + args);
    if (d <= half) throw DomainError("theta chain needs d > floor(k/2) " + args);
    if (d > (1 + alpha) * half)
        throw DomainError("theta chain needs d <= (1+alpha)*floor(k/2) = " +
                          std::to_string((1 + alpha) * half) + " " + args);
    return {1 + d + alpha * beta * d, (1 + alpha * beta) * half + beta};
}

ConstructionCount psi_count_prop52(std::int64_t d, std::int64_t k, std::int64_t alpha,
                                   std::int64_t beta) {
    const std::string args = "(d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                             ", alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                             ")";
    if (k < 7) throw DomainError("psi tree needs k >= 7 " + args);
    if (alpha < 2) throw DomainError("psi tree needs alpha >= 2 " + args);
    const auto s = (k - 3) / 4;
    if (d != 1 + alpha * s)
        throw DomainError("psi tree needs d = 1 + alpha*floor((k-3)/4) = " +
                          std::to_string(1 + alpha * s) + " " + args);
    if (beta < d) throw DomainError("psi tree needs beta >= d " + args);
    return {1 + beta * (1 + alpha * d), alpha * beta * s + beta + 1};
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    assert(d != 0);
    if (d < 0) n = -n, d = -d;
    auto g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t psi_lower_efss(std::int64_t n, std::int64_t d, std::int64_t k) {
    if (d < 1 || n <= d || k < 3)
        throw DomainError("psi bound needs n > d >= 1 and k >= 3 " + triple(n, d, k));
    return (k - 3) / 4 * ((n - 1) / d) + 2;
}

Rational theta_upper_woodall(std::int64_t n, std::int64_t d, std::int64_t k) {
    static_cast<void>(PhiParams(n, d, k));
    return Rational((k + 3) * (n - 1), 2 * d);
}

}  // namespace hdpath
