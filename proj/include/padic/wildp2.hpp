#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/exact.hpp"
#include "padic/fields.hpp"
#include "padic/report.hpp"

namespace padic {

// Applicability of the p^2||e count: (p^(f1 f) - 1, e0) = 1, and zeta_p must
// generate a nontrivial or non-matching extension (f_p does not divide f, or
// e_p > 1), which together force zeta_p out of every K counted.
struct Wp2Assumptions {
    bool coprime_ok = false;
    bool cyclo_ok = false;
    std::string details;
    bool ok() const { return coprime_ok && cyclo_ok; }
};

inline Wp2Assumptions check_assumptions(const BaseField& F, std::int64_t f, std::int64_t e) {
    const ExtensionProfile profile = make_profile(F, f, e);
    if (profile.m != 2) throw UnsupportedCase("not p^2||e: nu_p(e) = " + std::to_string(profile.m));
    const CyclotomicData& c = F.cyclo();
    Wp2Assumptions a;
    const Int g = gcd(pow_int(F.p, F.f1 * f) - 1, Int(profile.e0));
    a.coprime_ok = g == 1;
    a.cyclo_ok = (f % c.f_p != 0) || c.e_p > 1;
    if (!a.coprime_ok)
        a.details += "(p^(f1*f)-1, e0) = " + g.str() + " != 1; ";
    if (!a.cyclo_ok)
        a.details += "f_p | f and e_p = 1 (zeta_p would land in the counted fields); ";
    return a;
}

// ---------------------------------------------------------------------------
// Closed forms for invariant-subgroup counts. The shape parameters follow
// the source displays: d carries the block size (d/p or d/p^2 blocks) and A
// is the length of the module, so the group is (Z/p^i)^(1+A') with the
// matrix E(d/p^i, A). Every formula is transcribed term by term and
// accumulated as an exact rational, with integrality asserted at the end.
// ---------------------------------------------------------------------------

// |H(d/p, A; p)|: invariant subgroups of index p.
inline Int kTMp_closed(const Int& p, const Int& d, std::int64_t A) {
    const Int Q = pow_int(p, A);
    return ratio_to_int(Ratio(gcd(p - 1, d)) * Ratio(Q - 1, p - 1) + Q);
}

// Cyclic-quotient part of |H(d/p^2, A; p^2)|.
inline Int H1_closed(const Int& p, const Int& d, std::int64_t A) {
    if (A < 1) throw InvalidArgumentError("H1_closed: A must be >= 1");
    const Int Q = pow_int(p, A);
    const Int Qm1 = pow_int(p, A - 1);  // p^(A-1)
    const Int gp = d % (p * p * p) == 0 ? p : 1;  // (p, d/p^2)
    Ratio acc = Ratio(gcd(p - 1, d) * gp) * Ratio(Qm1 * (Q - 1), p - 1);
    acc += gp * Qm1 * (Q - 1);
    acc += pow_int(p, 2 * A);
    return ratio_to_int(acc);
}

// Elementary-quotient part of |H(d/p^2, A; p^2)|.
inline Int H2_closed(const Int& p, const Int& d, std::int64_t A) {
    if (A < 1) throw InvalidArgumentError("H2_closed: A must be >= 1");
    const Int Q = pow_int(p, A);
    const Int Qm1 = pow_int(p, A - 1);
    const Int g1 = gcd(p - 1, d);
    const Int g2 = gcd(p * p - 1, d);
    Ratio acc = Ratio(g1 * g1, 2) * Ratio((Q - 1) * (Q - 1), (p - 1) * (p - 1));
    acc += Ratio(g2, 2) * Ratio(pow_int(p, 2 * A) - 1, p * p - 1);
    if (d % (p * p * p) != 0) {
        acc += Ratio(g1) * Qm1 * (Q - 1);
        acc -= Ratio(Qm1) * (Q - 1);
    } else {
        acc += Ratio(g1) * Ratio(Q * (Q - 1), p - 1);
    }
    return ratio_to_int(acc);
}

// |H(d/p^2, A; p^2)|: invariant subgroups of index p^2, both quotient types.
inline Int kTLp2_closed(const Int& p, const Int& d, std::int64_t A) {
    const Int Q = pow_int(p, A);
    const Int g1 = gcd(p - 1, d);
    const Int g2 = gcd(p * p - 1, d);
    Ratio acc = Ratio(g1 * g1, 2) * Ratio((Q - 1) * (Q - 1), (p - 1) * (p - 1));
    acc += Ratio(g2, 2) * Ratio(pow_int(p, 2 * A) - 1, p * p - 1);
    if (d % (p * p * p) != 0) {
        acc += Ratio(g1) * Ratio(Q * (Q - 1), p - 1);
        acc += Q * Q;
    } else {
        acc += Ratio(2 * g1) * Ratio(Q * (Q - 1), p - 1);
        acc += Q * (2 * Q - 1);
    }
    return ratio_to_int(acc);
}

namespace detail {

// p^(num/d) with the divisibility of the exponent asserted.
inline Int p_pow_div(const Int& p, const Int& num, const Int& d) {
    return pow_int(p, to_int64(exact_div(num, d)));
}

}  // namespace detail

// --- Components of |C_d^1 \ C_d^2| ------------------------------------------

// |X|: triples (M, E, K) with K/M Galois over the pe0-ramified layer.
inline Int cardX_7(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int R = detail::p_pow_div(p, p * efn, d);
    const Int Q = detail::p_pow_div(p, p * p * efn, d);
    Ratio acc = Ratio(gcd(p - 1, d)) * Ratio(Q - 1, p - 1) + (Q - 1);
    return ratio_to_int(Ratio(p * e0) * (p * R - p + 1) * acc);
}

// |Y|: quintuples with the unramified splitting L of the p-layer.
inline Int cardY_7(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int R = detail::p_pow_div(p, p * efn, d);
    const Int g1 = gcd(p - 1, d);
    Ratio acc = Ratio(g1 * g1) * Ratio(p * (R - 1) * (R - 1), (p - 1) * (p - 1));
    if (d % (p * p) != 0) {
        acc += R;
        acc += Ratio(g1) * Ratio((R - 1) * (p * R + 1), p - 1);
    } else {
        acc += Ratio(2 * g1) * Ratio(p * R * (R - 1), p - 1);
        acc += p * R * (R - 1);
        acc -= Ratio((R - 1) * (R - p), p * p - 1);
    }
    return ratio_to_int(Ratio(e0) * acc);
}

// |Z_1|: the E/L-unramified locus.
inline Int z1cases_7(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    if (d % (p * p) == 0) return 0;
    const Int efn = Int(e0) * f * n;
    const Int R = detail::p_pow_div(p, p * efn, d);
    return ratio_to_int(Ratio(e0) * (Ratio(gcd(p - 1, d)) * Ratio(R - 1, p - 1) + R));
}

// |Z_2|: E/L ramified but K/E unramified.
inline Int sizeZ2_7(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int R = detail::p_pow_div(p, p * efn, d);
    return ratio_to_int(Ratio(e0 * gcd(p - 1, d)) * Ratio(p * (R - 1), p - 1));
}

// --- Components of |C_d^0 \ (C_d^1 u C_d^2)| ---------------------------------

// |X| = |E(F, f/d, p^2 e0)|.
inline Int xef_8(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const std::int64_t x = to_int64(exact_div(efn, d));  // e0 f n / d
    const std::int64_t pi = to_int64(p);
    return Int(e0) * p * p *
           (pow_int(p, 2 + (pi + 1) * x) - pow_int(p, 2 + pi * x) + pow_int(p, 1 + pi * x) - p + 1);
}

inline Int ycases_8(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int S = detail::p_pow_div(p, efn, d);
    const Int g1 = gcd(p - 1, d);
    const Int g2 = gcd(p * p - 1, d);
    Ratio acc = Ratio(g1 * g1, 2) * Ratio(p * p * (S - 1) * (S - 1), (p - 1) * (p - 1));
    acc += Ratio(g2, 2) * Ratio(p * p * (S * S - 1), p * p - 1);
    if (d % p != 0) {
        acc += Ratio(g1) * Ratio(p * (S - 1), p - 1);
        acc += 1;
    } else {
        acc += Ratio(g1) * Ratio(p * p * S * (S - 1), p - 1);
    }
    return ratio_to_int(Ratio(e0) * acc);
}

inline Int y2cases_8(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    if (d % p == 0) return 0;
    const Int efn = Int(e0) * f * n;
    const Int S = detail::p_pow_div(p, efn, d);
    return ratio_to_int(Ratio(e0) * (Ratio(gcd(p - 1, d)) * Ratio(p * (S - 1), p - 1) + 1));
}

inline Int z1formula_8(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int S = detail::p_pow_div(p, efn, d);
    const Int R = detail::p_pow_div(p, p * efn, d);
    return ratio_to_int(Ratio(e0 * gcd(p - 1, d)) *
                        Ratio(p * p * (p * S - p + 1) * (R - 1), p - 1));
}

inline Int zcases_8(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int S = detail::p_pow_div(p, efn, d);
    const Int R = detail::p_pow_div(p, p * efn, d);
    if (d % p != 0) {
        Ratio inner = Ratio(gcd(p - 1, d)) * Ratio(p * (R - 1), p - 1) + 1;
        return ratio_to_int(Ratio(e0) * p * (p * S - p + 1) * inner);
    }
    return ratio_to_int(Ratio(e0 * gcd(p - 1, d)) * Ratio(p * p * (p * S - p + 1) * (R - 1), p - 1));
}

inline Int z2formula_8(const Int& p, const Int& d, std::int64_t e0, std::int64_t f, std::int64_t n) {
    const Int efn = Int(e0) * f * n;
    const Int S = detail::p_pow_div(p, efn, d);
    const Int g1 = gcd(p - 1, d);
    const Int g2 = gcd(p * p - 1, d);
    Ratio acc = Ratio(g1 * g1, 2) * Ratio(p * p * (p + 1) * (S - 1) * (S - 1), (p - 1) * (p - 1));
    const Ratio middle = Ratio(g1) * Ratio(p * p * S * (S - 1), p - 1);
    if (d % p != 0)
        acc -= middle;
    else
        acc += middle;
    acc += Ratio(g2, 2) * Ratio(p * p * (S * S - 1), p - 1);
    return ratio_to_int(Ratio(e0) * acc);
}

// ---------------------------------------------------------------------------
// Component counts n_2, n_1, n_0 per divisor d.
// ---------------------------------------------------------------------------

// |C_d^2|: ramification p^2 over the fixed field of Aut(K/F).
inline Int cd2(const BaseField& F, std::int64_t f, std::int64_t e, const Int& d) {
    const ExtensionProfile pr = make_profile(F, f, e);
    const Int p = F.p;
    if ((Int(p * p) * f) % d != 0) return 0;
    const Int dp = lcm(p * p, d);
    const Int Q = detail::p_pow_div(p, p * p * Int(pr.e0) * f * F.n_base, dp);
    const Int g1 = gcd(p - 1, d);
    const Int g2 = gcd(p * p - 1, d);
    Ratio acc = Ratio(g1 * g1, 2) * Ratio((Q - 1) * (Q - 1), (p - 1) * (p - 1));
    acc += Ratio(g2, 2) * Ratio(Q * Q - 1, p * p - 1);
    if (d % (p * p * p) != 0) {
        acc += Ratio(g1) * Ratio((Q - 1) * (Q - 1), p - 1);
        acc += Q * (Q - 1);
    } else {
        acc += Ratio(g1) * Ratio((Q - 1) * (2 * Q - 1), p - 1);
        acc += 2 * Q * (Q - 1);
    }
    return ratio_to_int(Ratio(pr.e0) * acc);
}

// |C_d^1 \ C_d^2|: ramification exactly p over the fixed field.
inline Int cd1_minus_cd2(const BaseField& F, std::int64_t f, std::int64_t e, const Int& d) {
    const ExtensionProfile pr = make_profile(F, f, e);
    const Int p = F.p;
    if ((p * Int(f)) % d != 0) return 0;
    const Int dp = lcm(p, d);
    const Int efn = Int(pr.e0) * f * F.n_base;
    const Int R = detail::p_pow_div(p, p * efn, dp);
    const Int Q = detail::p_pow_div(p, p * p * efn, dp);
    const Int g1 = gcd(p - 1, d);
    Ratio acc = -Ratio(g1 * g1) * Ratio(p * (R - 1) * (R - 1), (p - 1) * (p - 1));
    if (d % (p * p) != 0) {
        acc += Ratio(g1) * Ratio(p, p - 1) *
               (Q - 1 + (R - 1) * (p * Q - R - p + 1));
    } else {
        acc += Ratio(g1) * Ratio(p, p - 1) *
               (-(R - 1) * (2 * R - 1) + (p * R - p + 1) * (Q - 1));
        acc -= p * R * (R - 1);
        acc += Ratio((R - 1) * (R - p), p * p - 1);
    }
    acc += p * (p * R - p + 1) * (Q - 1);
    return ratio_to_int(Ratio(pr.e0) * acc);
}

// |C_d^0 \ (C_d^1 u C_d^2)|: unramified over the fixed field.
inline Int cd0_minus(const BaseField& F, std::int64_t f, std::int64_t e, const Int& d) {
    const ExtensionProfile pr = make_profile(F, f, e);
    const Int p = F.p;
    if (Int(f) % d != 0) return 0;
    const Int efn = Int(pr.e0) * f * F.n_base;
    const std::int64_t x = to_int64(exact_div(efn, d));
    const std::int64_t pi = to_int64(p);
    const Int S = pow_int(p, x);
    const Int R = pow_int(p, pi * x);
    const Int g1 = gcd(p - 1, d);
    const Int g2 = gcd(p * p - 1, d);
    Ratio acc = Ratio(g1 * g1, 2) * Ratio(p * (S - 1) * (S - 1), (p - 1) * (p - 1));
    acc += Ratio(g2, 2) * Ratio(p * (S * S - 1), p * p - 1);
    if (d % p != 0)
        acc -= Ratio(g1, p - 1) * (S * (S - 1) + (p * S - p + 1) * (R - 1));
    else
        acc -= Ratio(g1) * Ratio((R - 1) * (p * S - p + 1), p - 1);
    acc += pow_int(p, 2 + (pi + 1) * x) - pow_int(p, 2 + pi * x) + pow_int(p, 1 + pi * x) - p + 1;
    return ratio_to_int(Ratio(pr.e0) * p * p * acc);
}

// Per-divisor component counts, as dumped by the CLI.
struct ComponentCounts {
    Int d;
    Int n2;  // |C_d^2|
    Int n1;  // |C_d^1 \ C_d^2|
    Int n0;  // |C_d^0 \ (C_d^1 u C_d^2)|
};

inline std::vector<ComponentCounts> wild2_components(const BaseField& F, std::int64_t f,
                                                     std::int64_t e) {
    check_assumptions(F, f, e);  // validates p^2||e and cyclo availability
    std::vector<ComponentCounts> out;
    for (const Int& d : divisors(F.p * F.p * Int(f)))
        out.push_back({d, cd2(F, f, e, d), cd1_minus_cd2(F, f, e, d), cd0_minus(F, f, e, d)});
    return out;
}

namespace detail {

inline std::string wp2_diagnostics(const BaseField& F, const Wp2Assumptions& a) {
    std::string diag = a.details;
    if (F.p == 2 && F.cyclo().source == CyclotomicData::Source::UserSupplied)
        diag += "untested territory: p = 2 admitted via user-supplied cyclotomic data; ";
    return diag;
}

inline Wp2Assumptions require_assumptions(const BaseField& F, std::int64_t f, std::int64_t e) {
    const Wp2Assumptions a = check_assumptions(F, f, e);
    if (!a.ok()) throw AssumptionsViolated("assumptions violated: " + a.details);
    return a;
}

}  // namespace detail

// The closed-form count for p^2||e, as a single tau-indexed sum over the
// odd part t of f = p^i t.
inline CountReport count_wild_p2(const BaseField& F, std::int64_t f, std::int64_t e) {
    const Wp2Assumptions assume = detail::require_assumptions(F, f, e);
    const ExtensionProfile pr = make_profile(F, f, e);
    const Int p = F.p;
    const std::int64_t pi = to_int64(p);
    const PadicValuation fv = padic_valuation(p, Int(f));
    const std::int64_t i = fv.m;
    const std::int64_t t = to_int64(fv.n0);

    Ratio total;
    for (const Int& tau : divisors(Int(t))) {
        const std::int64_t scale = (t / to_int64(tau)) * pr.e0 * F.n_base;  // (t/tau) e0 n
        const Int g1 = gcd(p - 1, tau);
        const Int g2 = gcd(p * p - 1, tau);
        const std::int64_t xW = scale * to_int64(pow_int(p, i));  // exponent of W
        const Int W = pow_int(p, xW);

        Ratio bracket = Ratio(g1 * g1, 2) * Ratio((W - 1) * (W - 1), p - 1);
        bracket -= Ratio(g1) * Ratio(W * (W - 1), p - 1);
        bracket += Ratio(g2, 2) * Ratio(W * W - 1, p - 1);
        bracket += (p + 1) * (pow_int(p, 1 + (pi + 1) * xW) - W);
        bracket -= (p * p - 1) * pow_int(p, pi * xW);
        bracket += W * W;

        for (std::int64_t j = 1; j <= i; ++j) {
            const std::int64_t xU = scale * to_int64(pow_int(p, i - j));
            const Int U = pow_int(p, xU);
            Ratio inner = Ratio((U - 1) * (pow_int(p, xU - 1) - 1), p + 1);
            inner += (p - 1) * (-pow_int(p, 2 + pi * xU) + pow_int(p, pi * xU) + pow_int(p, 2 * xU));
            inner += (p * p - 1) * (pow_int(p, 1 + (pi + 1) * xU) - U);
            inner += Ratio(g1 * g1, 2) * (U - 1) * (U - 1);
            inner += Ratio(g2, 2) * (U * U - 1);
            bracket += pow_int(p, j - 1) * inner;
        }
        total += Ratio(euler_phi(tau)) * bracket;
    }
    total /= Ratio(pow_int(p, i) * t);
    return {ratio_to_int(total), "wild-p2-closed", detail::wp2_diagnostics(F, assume)};
}

// Second, independent assembly of the same count from per-divisor component
// counts n_0, n_1, n_2 with the Euler-phi weights grouped by the p-part of
// the divisor.
inline CountReport count_wild_p2_via_components(const BaseField& F, std::int64_t f,
                                                std::int64_t e) {
    const Wp2Assumptions assume = detail::require_assumptions(F, f, e);
    const ExtensionProfile pr = make_profile(F, f, e);
    const Int p = F.p;
    const PadicValuation fv = padic_valuation(p, Int(f));
    const std::int64_t i = fv.m;
    const std::int64_t t = to_int64(fv.n0);

    Int total = 0;
    for (const Int& tau : divisors(Int(t))) {
        Int part = cd0_minus(F, f, e, tau);
        part += p * cd1_minus_cd2(F, f, e, p * tau);
        part += p * p * cd2(F, f, e, p * p * tau);
        for (std::int64_t j = 1; j <= i; ++j) {
            Int corr = cd0_minus(F, f, e, pow_int(p, j) * tau);
            corr += p * cd1_minus_cd2(F, f, e, pow_int(p, j + 1) * tau);
            corr += p * p * cd2(F, f, e, pow_int(p, j + 2) * tau);
            part += (p - 1) * pow_int(p, j - 1) * corr;
        }
        total += euler_phi(tau) * part;
    }
    const Int denom = pow_int(p, 2 + i) * t * pr.e0;
    return {ratio_to_int(Ratio(total, denom)), "wild-p2-components",
            detail::wp2_diagnostics(F, assume)};
}

}  // namespace padic
