#pragma once

#include <cstdint>
#include <optional>

#include "padic/exact.hpp"
#include "padic/fields.hpp"
#include "padic/report.hpp"

namespace padic {

// Invariants of the tame field K_h and its automorphism group:
//   b    = (e, q^f - 1), the order of the inertia subgroup
//   c_h  = smallest c >= 1 with b | (q^c - 1) h  (c_h = 1 for h = 0)
//   u    = canonical solution of e*u = b (mod q^f - 1); any solution gives
//          the same counts, so the smallest non-negative one is chosen and
//          the stride is kept for invariance testing
//   m_h  = (q^c_h - 1) h u / b
//   v_h  = (e m_h + h (1 - q^c_h)) / (q^f - 1)
// The automorphism group has order b f / c_h.
struct TameData {
    std::int64_t h = 0;
    std::int64_t f = 1;
    std::int64_t e = 1;
    Int q;
    Int b;
    std::int64_t c_h = 1;
    Int u;
    Int u_stride;
    Int m_h;
    Int v_h;
    Int aut_order;
};

// Smallest c >= 1 with b | (q^c - 1) h; equals the multiplicative order of
// q modulo b/(b,h).
inline std::int64_t compute_c_h(const Int& q, const Int& b, std::int64_t h) {
    const Int reduced = exact_div(b, gcd(b, Int(h)));
    return to_int64(mult_order(q, reduced));
}

inline TameData tame_data(const BaseField& F, std::int64_t f, std::int64_t e_tame, std::int64_t h,
                          std::optional<Int> u_override = std::nullopt) {
    if (f < 1 || e_tame < 1) throw InvalidArgumentError("tame_data: f and e must be >= 1");
    if (e_tame % F.p == 0) throw UnsupportedCase("not tame: p divides e");
    if (h < 0 || h >= e_tame) throw InvalidArgumentError("tame_data: h out of range");

    TameData d;
    d.h = h;
    d.f = f;
    d.e = e_tame;
    d.q = F.q;
    const Int qf1 = pow_int(F.q, f) - 1;
    d.b = gcd(Int(e_tame), qf1);
    d.c_h = compute_c_h(F.q, d.b, h);

    const CongruenceSolution sol = solve_linear_congruence(Int(e_tame), d.b, qf1);
    d.u_stride = sol.stride;
    if (u_override) {
        if (mod_floor(Int(e_tame) * *u_override - d.b, qf1) != 0)
            throw InvalidArgumentError("tame_data: u override does not solve e*u = b (mod q^f-1)");
        d.u = *u_override;
    } else {
        d.u = sol.x0;
    }

    d.m_h = exact_div((pow_int(F.q, d.c_h) - 1) * h * d.u, d.b);
    d.v_h = exact_div(Int(e_tame) * d.m_h + Int(h) * (1 - pow_int(F.q, d.c_h)), qf1);
    d.aut_order = exact_div(d.b * f, Int(d.c_h));
    return d;
}

// t(h,i,j): exponent of the inertia generator reached by the smallest power
// of mu^i nu^j that lands in the inertia subgroup. The leading ratio
// (q^lcm(f, c_h j) - 1)/(q^(c_h j) - 1) is evaluated as a geometric sum with
// f/(f, c_h j) terms, which also settles j = 0: one term, so t = i.
inline Int t_param(const TameData& d, std::int64_t i, std::int64_t j) {
    if (i < 0 || i >= d.b) throw InvalidArgumentError("t_param: i out of range");
    if (j < 0 || j >= d.f / d.c_h) throw InvalidArgumentError("t_param: j out of range");
    const std::int64_t cj = d.c_h * j;
    const std::int64_t f_gcd = to_int64(gcd(Int(d.f), Int(cj)));  // = f for j = 0
    const Int ratio = geometric_sum(pow_int(d.q, cj), d.f / f_gcd);
    return ratio * i + d.u * d.h * (cj / f_gcd);
}

// o(h,i,j) = [K_h : K_h^gamma] for gamma = mu^i nu^j: the product of the
// residue degree f/(f, c_h j) and the ramification index b/(b, t).
inline std::int64_t o_param(const TameData& d, std::int64_t i, std::int64_t j) {
    const std::int64_t cj = d.c_h * j;
    const std::int64_t f_gamma = d.f / to_int64(gcd(Int(d.f), Int(cj)));
    const Int t = t_param(d, i, j);
    const std::int64_t e_gamma = to_int64(exact_div(d.b, gcd(d.b, mod_floor(t, d.b))));
    return f_gamma * e_gamma;
}

// (b/e) * sum_h 1/c_h, accumulated exactly and asserted integral.
inline CountReport count_tame_prop41(const BaseField& F, std::int64_t f, std::int64_t e) {
    if (e % F.p == 0) throw UnsupportedCase("not tame: p divides e");
    const Int qf1 = pow_int(F.q, f) - 1;
    const Int b = gcd(Int(e), qf1);
    Ratio acc;
    for (std::int64_t h = 0; h < e; ++h) acc += Ratio(1, Int(compute_c_h(F.q, b, h)));
    return {ratio_to_int(acc * Ratio(b, Int(e))), "tame-prop41", ""};
}

// (1/f) * sum_{i<f} (q^(i,f) - 1, e), with (0,f) = f.
inline CountReport count_tame_gcdsum(const BaseField& F, std::int64_t f, std::int64_t e) {
    if (e % F.p == 0) throw UnsupportedCase("not tame: p divides e");
    Int acc = 0;
    for (std::int64_t i = 0; i < f; ++i) {
        const std::int64_t g = i == 0 ? f : to_int64(gcd(Int(i), Int(f)));
        acc += gcd(pow_int(F.q, g) - 1, Int(e));
    }
    return {exact_div(acc, Int(f)), "tame-gcdsum", ""};
}

// sum over c | (e, q^f - 1) of phi(c)/tau(c), where tau(c) is the order of
// q mod c (tau(1) = 1). Shared by count_tame_divisor and the chain-ring
// count; the base-size parameter is named q but callers restricted to Q_p
// pass q = p.
inline Int divisor_sum_count(const Int& q, std::int64_t f, std::int64_t e) {
    const Int b = gcd(Int(e), pow_int(q, f) - 1);
    Ratio acc;
    for (const Int& c : divisors(b)) acc += Ratio(euler_phi(c), mult_order(q, c));
    return ratio_to_int(acc);
}

inline CountReport count_tame_divisor(const BaseField& F, std::int64_t f, std::int64_t e) {
    if (e % F.p == 0) throw UnsupportedCase("not tame: p divides e");
    if (!F.is_Qp()) throw UnsupportedCase("formula stated only for Q_p");
    return {divisor_sum_count(F.p, f, e), "tame-divisor", ""};
}

}  // namespace padic
