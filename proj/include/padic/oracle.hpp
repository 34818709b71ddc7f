#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "padic/exact.hpp"
#include "padic/wildp2.hpp"

namespace padic {

// Dense square matrix over Z/p^k, row-major. Small by construction: the
// enumeration guards keep the dimension in single digits.
struct ResidueMatrix {
    Int modulus;
    std::int64_t dim = 0;
    std::vector<std::int64_t> entries;

    std::int64_t at(std::int64_t r, std::int64_t c) const { return entries[r * dim + c]; }
    std::int64_t& at(std::int64_t r, std::int64_t c) { return entries[r * dim + c]; }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
        const std::int64_t mod = to_int64(modulus);
        std::vector<std::int64_t> out(dim, 0);
        for (std::int64_t r = 0; r < dim; ++r) {
            std::int64_t acc = 0;
            for (std::int64_t c = 0; c < dim; ++c) acc += at(r, c) * v[c];
            out[r] = acc % mod;
        }
        return out;
    }

    ResidueMatrix transpose() const {
        ResidueMatrix t{modulus, dim, std::vector<std::int64_t>(dim * dim, 0)};
        for (std::int64_t r = 0; r < dim; ++r)
            for (std::int64_t c = 0; c < dim; ++c) t.at(c, r) = at(r, c);
        return t;
    }
};

// E(m,n) over Z/p^k: a leading 1 followed by n copies of the m-by-m cyclic
// shift block, so E(m,n)^m is the identity.
inline ResidueMatrix build_E(std::int64_t m, std::int64_t n, const Int& p, std::int64_t k) {
    if (m < 1 || n < 1) throw InvalidArgumentError("build_E: m and n must be >= 1");
    if (k < 1 || k > 2) throw InvalidArgumentError("build_E: k must be 1 or 2");
    const std::int64_t dim = 1 + m * n;
    ResidueMatrix E{pow_int(p, k), dim, std::vector<std::int64_t>(dim * dim, 0)};
    E.at(0, 0) = 1;
    for (std::int64_t block = 0; block < n; ++block) {
        const std::int64_t base = 1 + block * m;
        for (std::int64_t r = 0; r < m; ++r) E.at(base + r, base + (r + 1) % m) = 1;
    }
    return E;
}

// Brute-force vs closed-form counts of E(m,n)-invariant subgroups of index
// p or p^2.
struct SubgroupCountReport {
    Int p;
    std::int64_t m = 1;
    std::int64_t n = 1;
    enum class Index { P, PSquared } index = Index::P;
    Int brute_count;
    Int closed_count;
    Int cyclic_quotient_count;      // index p^2 only: quotient Z/p^2
    Int elementary_quotient_count;  // index p^2 only: quotient (Z/p)^2
    bool match = false;
};

namespace oracle_detail {

inline std::int64_t mod_i(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// dim of ker(M - lambda I) over F_p, by Gaussian elimination.
inline std::int64_t eigenspace_dim(const ResidueMatrix& M, std::int64_t lambda, std::int64_t p) {
    const std::int64_t D = M.dim;
    std::vector<std::vector<std::int64_t>> a(D, std::vector<std::int64_t>(D));
    for (std::int64_t r = 0; r < D; ++r)
        for (std::int64_t c = 0; c < D; ++c)
            a[r][c] = mod_i(M.at(r, c) - (r == c ? lambda : 0), p);
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < D && rank < D; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < D; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const std::int64_t inv = to_int64(mod_pow(Int(a[rank][col]), Int(p - 2), Int(p)));
        for (std::int64_t c = 0; c < D; ++c) a[rank][c] = mod_i(a[rank][c] * inv, p);
        for (std::int64_t r = 0; r < D; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const std::int64_t factor = a[r][col];
            for (std::int64_t c = 0; c < D; ++c) a[r][c] = mod_i(a[r][c] - factor * a[rank][c], p);
        }
        ++rank;
    }
    return D - rank;
}

// Enumerate vectors in (Z/mod)^D as mixed-radix counters.
inline bool next_vector(std::vector<std::int64_t>& v, std::int64_t mod) {
    for (auto& x : v) {
        if (++x < mod) return true;
        x = 0;
    }
    return false;
}

}  // namespace oracle_detail

// Index-p invariant subgroups: hyperplanes a^perp with E^t a proportional
// to a. The brute path never imposes the eigenvalue condition lambda^m = 1;
// it holds automatically because E^m = I, which keeps the enumeration
// independent of the characterization it is checking.
inline SubgroupCountReport count_invariant_index_p(const Int& p, std::int64_t m, std::int64_t n) {
    const std::int64_t D = 1 + m * n;
    if (pow_int(p, D) > (Int(1) << 22))
        throw TooLargeError("index-p oracle: p^(1+mn) exceeds the enumeration guard");
    const std::int64_t pi = to_int64(p);
    const ResidueMatrix Et = build_E(m, n, p, 1).transpose();

    Int brute = 0;
    std::vector<std::int64_t> a(D, 0);
    do {
        std::int64_t pivot = -1;
        for (std::int64_t i = 0; i < D; ++i)
            if (a[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0 || a[pivot] != 1) continue;  // projective representative
        const auto w = Et.apply(a);
        const std::int64_t lambda = w[pivot];
        bool proportional = true;
        for (std::int64_t i = 0; i < D && proportional; ++i)
            proportional = w[i] == oracle_detail::mod_i(lambda * a[i], pi);
        if (proportional) ++brute;
    } while (oracle_detail::next_vector(a, pi));

    Int closed = 0;
    for (std::int64_t lambda = 1; lambda < pi; ++lambda) {
        if (to_int64(mod_pow(Int(lambda), Int(m), p)) != 1 % pi) continue;
        const std::int64_t dim = oracle_detail::eigenspace_dim(Et, lambda, pi);
        closed += geometric_sum(p, dim);
    }

    SubgroupCountReport r;
    r.p = p;
    r.m = m;
    r.n = n;
    r.index = SubgroupCountReport::Index::P;
    r.brute_count = brute;
    r.closed_count = closed;
    r.match = brute == closed;
    return r;
}

// Index-p^2 invariant subgroups, enumerated through the dual group: index
// p^2 subgroups of (Z/p^2)^D correspond to order-p^2 subgroups of the dual
// with E acting by transpose. Cyclic duals are generated by a vector with a
// unit coordinate; elementary duals are 2-dimensional subspaces of the
// p-torsion.
inline SubgroupCountReport count_invariant_index_p2(const Int& p, std::int64_t m, std::int64_t n) {
    const std::int64_t D = 1 + m * n;
    const std::int64_t pi = to_int64(p);
    if (!((pi == 2 && D <= 5) || (pi == 3 && D <= 4)))
        throw TooLargeError("index-p^2 oracle: feasible only for p=2, 1+mn <= 5 or p=3, 1+mn <= 4");

    const std::int64_t M = pi * pi;
    const ResidueMatrix Et = build_E(m, n, p, 2).transpose();

    // Cyclic-quotient count: normalized generators (first unit coordinate
    // equal to 1) with E^t a a scalar multiple of a.
    Int cyclic = 0;
    std::vector<std::int64_t> a(D, 0);
    do {
        std::int64_t unit = -1;
        for (std::int64_t i = 0; i < D; ++i)
            if (a[i] % pi != 0) {
                unit = i;
                break;
            }
        if (unit < 0 || a[unit] != 1) continue;
        const auto w = Et.apply(a);
        const std::int64_t c = w[unit];
        bool multiple = true;
        for (std::int64_t i = 0; i < D && multiple; ++i)
            multiple = w[i] == oracle_detail::mod_i(c * a[i], M);
        if (multiple) ++cyclic;
    } while (oracle_detail::next_vector(a, M));

    // Elementary-quotient count: E^t-invariant 2-dimensional subspaces of
    // the p-torsion, enumerated once each via reduced-echelon bases.
    const ResidueMatrix Et1 = build_E(m, n, p, 1).transpose();
    Int elementary = 0;
    for (std::int64_t i = 0; i < D; ++i) {
        for (std::int64_t j = i + 1; j < D; ++j) {
            std::vector<std::int64_t> free_slots;  // (row 0) slots k > i, k != j
            for (std::int64_t k = i + 1; k < D; ++k)
                if (k != j) free_slots.push_back(k);
            const std::int64_t u_free = static_cast<std::int64_t>(free_slots.size());
            std::vector<std::int64_t> fill(u_free + (D - j - 1), 0);
            do {
                std::vector<std::int64_t> u(D, 0), v(D, 0);
                u[i] = 1;
                v[j] = 1;
                for (std::int64_t s = 0; s < u_free; ++s) u[free_slots[s]] = fill[s];
                for (std::int64_t k = j + 1; k < D; ++k) v[k] = fill[u_free + (k - j - 1)];
                auto in_span = [&](std::vector<std::int64_t> w) {
                    const std::int64_t c1 = w[i];
                    for (std::int64_t k = 0; k < D; ++k)
                        w[k] = oracle_detail::mod_i(w[k] - c1 * u[k], pi);
                    const std::int64_t c2 = w[j];
                    for (std::int64_t k = 0; k < D; ++k)
                        w[k] = oracle_detail::mod_i(w[k] - c2 * v[k], pi);
                    return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
                };
                if (in_span(Et1.apply(u)) && in_span(Et1.apply(v))) ++elementary;
            } while (!fill.empty() && oracle_detail::next_vector(fill, pi));
        }
    }

    SubgroupCountReport r;
    r.p = p;
    r.m = m;
    r.n = n;
    r.index = SubgroupCountReport::Index::PSquared;
    r.brute_count = cyclic + elementary;
    r.cyclic_quotient_count = cyclic;
    r.elementary_quotient_count = elementary;
    r.closed_count = H1_closed(p, p * p * Int(m), n) + H2_closed(p, p * p * Int(m), n);
    r.match = r.brute_count == r.closed_count;
    return r;
}

// Direct (non-dual) enumerations for small dimensions; used to validate the
// dual route.
inline Int count_invariant_index_p_direct(const Int& p, std::int64_t m, std::int64_t n) {
    const std::int64_t D = 1 + m * n;
    const std::int64_t pi = to_int64(p);
    if (pow_int(p, D) > 4096) throw TooLargeError("direct index-p enumeration guard");
    const ResidueMatrix E = build_E(m, n, p, 1);

    // Hyperplanes as kernels of reduced-echelon (D-1)-row bases, i.e. all
    // codimension-1 subspaces; invariance of span(basis) under E.
    Int count = 0;
    // A hyperplane is determined by its one non-pivot column c and the
    // column of values above it.
    for (std::int64_t nonpivot = 0; nonpivot < D; ++nonpivot) {
        std::vector<std::int64_t> fill(nonpivot, 0);
        do {
            // Basis rows: for each pivot column k != nonpivot, the vector
            // e_k + (k < nonpivot ? fill[k] : 0) * e_nonpivot.
            std::vector<std::vector<std::int64_t>> basis;
            for (std::int64_t k = 0; k < D; ++k) {
                if (k == nonpivot) continue;
                std::vector<std::int64_t> row(D, 0);
                row[k] = 1;
                if (k < nonpivot) row[nonpivot] = fill[k];
                basis.push_back(row);
            }
            auto reduce = [&](std::vector<std::int64_t> w) {
                for (const auto& row : basis) {
                    std::int64_t pivot_col = 0;
                    while (row[pivot_col] == 0) ++pivot_col;
                    const std::int64_t c = w[pivot_col];
                    for (std::int64_t k = 0; k < D; ++k)
                        w[k] = oracle_detail::mod_i(w[k] - c * row[k], pi);
                }
                return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
            };
            bool invariant = true;
            for (const auto& row : basis)
                if (!reduce(E.apply(row))) {
                    invariant = false;
                    break;
                }
            if (invariant) ++count;
        } while (!fill.empty() && oracle_detail::next_vector(fill, pi));
    }
    return count;
}

inline Int count_invariant_index_p2_direct(const Int& p, std::int64_t m, std::int64_t n) {
    const std::int64_t D = 1 + m * n;
    const std::int64_t pi = to_int64(p);
    if (D > 3 || pi > 3 || (pi == 3 && D > 2))
        throw TooLargeError("direct index-p^2 enumeration guard");
    const std::int64_t M = pi * pi;
    const ResidueMatrix E = build_E(m, n, p, 2);

    std::int64_t size = 1;
    for (std::int64_t i = 0; i < D; ++i) size *= M;
    const std::int64_t target = size / (pi * pi);

    auto decode = [&](std::int64_t code) {
        std::vector<std::int64_t> v(D);
        for (std::int64_t i = 0; i < D; ++i) {
            v[i] = code % M;
            code /= M;
        }
        return v;
    };
    auto encode = [&](const std::vector<std::int64_t>& v) {
        std::int64_t code = 0;
        for (std::int64_t i = D - 1; i >= 0; --i) code = code * M + v[i];
        return code;
    };

    // Closure of up to three generators; subgroups collected as canonical
    // sorted element lists.
    std::set<std::vector<std::int64_t>> subgroups;
    auto close = [&](std::vector<std::int64_t> gens) {
        std::set<std::int64_t> elems{0};
        std::vector<std::int64_t> frontier{0};
        while (!frontier.empty()) {
            const std::int64_t x = frontier.back();
            frontier.pop_back();
            const auto xv = decode(x);
            for (const std::int64_t g : gens) {
                const auto gv = decode(g);
                std::vector<std::int64_t> s(D);
                for (std::int64_t i = 0; i < D; ++i) s[i] = (xv[i] + gv[i]) % M;
                const std::int64_t sc = encode(s);
                if (elems.insert(sc).second) frontier.push_back(sc);
            }
        }
        return std::vector<std::int64_t>(elems.begin(), elems.end());
    };
    for (std::int64_t g1 = 0; g1 < size; ++g1)
        for (std::int64_t g2 = g1; g2 < size; ++g2)
            for (std::int64_t g3 = g2; g3 < size; ++g3) {
                auto sub = close({g1, g2, g3});
                if (static_cast<std::int64_t>(sub.size()) == target)
                    subgroups.insert(std::move(sub));
            }

    Int count = 0;
    for (const auto& sub : subgroups) {
        std::set<std::int64_t> members(sub.begin(), sub.end());
        bool invariant = true;
        for (const std::int64_t x : sub)
            if (!members.count(encode(E.apply(decode(x))))) {
                invariant = false;
                break;
            }
        if (invariant) ++count;
    }
    return count;
}

// Run the oracle across a parameter box, skipping infeasible items. Any
// mismatch makes the whole sweep fail.
struct SweepResult {
    std::vector<SubgroupCountReport> reports;
    bool all_match = true;
};

inline SweepResult sweep(const std::vector<Int>& p_list, std::int64_t m_max, std::int64_t n_max) {
    SweepResult result;
    for (const Int& p : p_list)
        for (std::int64_t m = 1; m <= m_max; ++m)
            for (std::int64_t n = 1; n <= n_max; ++n) {
                try {
                    result.reports.push_back(count_invariant_index_p(p, m, n));
                } catch (const TooLargeError&) {
                }
                try {
                    result.reports.push_back(count_invariant_index_p2(p, m, n));
                } catch (const TooLargeError&) {
                }
            }
    for (const auto& r : result.reports) result.all_match = result.all_match && r.match;
    return result;
}

}  // namespace padic
