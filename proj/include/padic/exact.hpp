#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

// All counts and intermediate powers are exact; nothing in this library ever
// touches floating point.
using Int = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms with positive denominator by the
// backend. Used for prefactors like 1/(fe) and phi(c)/tau(c); every final
// result is converted back to Int with an integrality check.
using Ratio = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// n/d when d | n, error otherwise.
inline Int exact_div(const Int& n, const Int& d) {
    if (d == 0) throw ExactDivisionError(n.str(), d.str());
    Int q, r;
    boost::multiprecision::divide_qr(n, d, q, r);
    if (r != 0) throw ExactDivisionError(n.str(), d.str());
    return q;
}

// Residue of a in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow_int(const Int& base, std::int64_t exp) {
    if (exp < 0) throw InvalidArgumentError("pow_int: negative exponent " + std::to_string(exp));
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline Int mod_pow(Int base, Int exp, const Int& m) {
    if (m <= 0) throw InvalidArgumentError("mod_pow: modulus must be positive");
    base = mod_floor(base, m);
    Int result = 1 % m;
    while (exp > 0) {
        if ((exp & 1) != 0) result = mod_floor(result * base, m);
        base = mod_floor(base * base, m);
        exp >>= 1;
    }
    return result;
}

// 1 + q + ... + q^(terms-1). The closed forms use ratios like
// (q^(ab)-1)/(q^a-1); evaluating them as geometric sums avoids division
// entirely, including the empty-sum (0 terms) and q = 1 edge cases.
inline Int geometric_sum(const Int& q, std::int64_t terms) {
    if (terms < 0) throw InvalidArgumentError("geometric_sum: negative term count");
    Int acc = 0;
    Int power = 1;
    for (std::int64_t k = 0; k < terms; ++k) {
        acc += power;
        power *= q;
    }
    return acc;
}

// Ratio -> Int, asserting integrality.
inline Int ratio_to_int(const Ratio& r) {
    return exact_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Euler's totient, by trial-division factorization.
inline Int euler_phi(Int n) {
    if (n < 1) throw InvalidArgumentError("euler_phi: n must be >= 1");
    Int result = 1;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        Int factor = d - 1;
        while (n % d == 0) {
            n /= d;
            factor *= d;
        }
        result *= factor;
    }
    if (n > 1) result *= n - 1;
    return result;
}

// Smallest k >= 1 with a^k = 1 (mod m); requires gcd(a, m) = 1. Returns 1
// for m = 1. Naive iteration; every modulus in this library is small.
inline Int mult_order(const Int& a, const Int& m) {
    if (m < 1) throw InvalidArgumentError("mult_order: modulus must be >= 1");
    if (m == 1) return 1;
    Int a0 = mod_floor(a, m);
    if (gcd(a0, m) != 1)
        throw InvalidArgumentError("mult_order: gcd(" + a.str() + ", " + m.str() + ") != 1");
    Int acc = a0;
    Int k = 1;
    while (acc != 1) {
        acc = mod_floor(acc * a0, m);
        ++k;
    }
    return k;
}

struct PadicValuation {
    std::int64_t m;  // exponent of p in n
    Int n0;          // prime-to-p part, n = p^m * n0
};

inline PadicValuation padic_valuation(const Int& p, Int n) {
    if (!is_prime(p)) throw InvalidArgumentError("padic_valuation: p = " + p.str() + " is not prime");
    if (n < 1) throw InvalidArgumentError("padic_valuation: n must be >= 1");
    std::int64_t m = 0;
    while (n % p == 0) {
        n /= p;
        ++m;
    }
    return {m, n};
}

// Canonical solution of a*x = b (mod m): x0 is the smallest non-negative
// solution, and the full solution set is { x0 + k*stride : k in Z }.
struct CongruenceSolution {
    Int x0;
    Int stride;
};

inline CongruenceSolution solve_linear_congruence(const Int& a, const Int& b, const Int& m) {
    if (m < 1) throw InvalidArgumentError("solve_linear_congruence: modulus must be >= 1");
    const Int a0 = mod_floor(a, m);
    const Int b0 = mod_floor(b, m);
    const Int g = gcd(a0 == 0 ? m : a0, m);
    if (b0 % g != 0)
        throw NoSolutionError("no solution: " + a.str() + "*x = " + b.str() + " (mod " + m.str() +
                              "), gcd " + g.str() + " does not divide rhs");
    const Int m1 = m / g;
    if (m1 == 1) return {Int(0), Int(1)};
    const Int a1 = mod_floor(a0 / g, m1);
    const Int b1 = mod_floor(b0 / g, m1);
    // a1 is invertible mod m1; its inverse is a1^(phi(m1)-1).
    const Int inv = mod_pow(a1, euler_phi(m1) - 1, m1);
    return {mod_floor(b1 * inv, m1), m1};
}

// Divisors of n in increasing order.
inline std::vector<Int> divisors(const Int& n) {
    if (n < 1) throw InvalidArgumentError("divisors: n must be >= 1");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::int64_t to_int64(const Int& n) { return n.convert_to<std::int64_t>(); }

}  // namespace padic
