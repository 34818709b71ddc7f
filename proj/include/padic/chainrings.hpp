#pragma once

#include <cstdint>
#include <string>

#include "padic/exact.hpp"
#include "padic/fields.hpp"
#include "padic/report.hpp"
#include "padic/tame.hpp"
#include "padic/wildp.hpp"
#include "padic/wildp2.hpp"

namespace padic {

// Invariants (p, n, f, e, t) of a finite commutative chain ring: residue
// field F_(p^f), characteristic p^n, ramification index e, top length t.
struct ChainRingInvariants {
    Int p;
    std::int64_t nil_n = 1;
    std::int64_t rank_f = 1;
    std::int64_t ram_e = 1;
    std::int64_t top_len = 1;
};

inline void validate(const ChainRingInvariants& inv) {
    if (!is_prime(inv.p)) throw InvalidArgumentError("chain ring: p is not prime");
    if (inv.nil_n < 1 || inv.rank_f < 1 || inv.ram_e < 1)
        throw InvalidArgumentError("chain ring: n, f, e must be >= 1");
    if (inv.top_len < 1 || inv.top_len > inv.ram_e)
        throw InvalidArgumentError("chain ring: t must satisfy 1 <= t <= e");
    if (inv.nil_n == 1 && inv.top_len != inv.ram_e)
        throw InvalidArgumentError("chain ring: t = e is forced when n = 1");
}

// True when the length s = (n-1)e + t reaches (p/(p-1) + nu_p(e)) e, the
// point from which the ring count equals the field count. Boundary equality
// counts as met. Exact rational comparison.
inline bool threshold_met(const ChainRingInvariants& inv) {
    validate(inv);
    const std::int64_t wild = padic_valuation(inv.p, Int(inv.ram_e)).m;
    const Ratio lhs = Ratio(Int(inv.nil_n - 1) * inv.ram_e + inv.top_len);
    const Ratio rhs = (Ratio(inv.p, inv.p - 1) + wild) * Ratio(inv.ram_e);
    return lhs >= rhs;
}

inline CountReport chain_count(const ChainRingInvariants& inv) {
    validate(inv);
    const Int& p = inv.p;
    const std::int64_t f = inv.rank_f;
    const std::int64_t e = inv.ram_e;
    const std::int64_t wild = padic_valuation(p, Int(e)).m;
    const Ratio n = Ratio(inv.nil_n);
    const Ratio t_over_e = Ratio(inv.top_len, e);

    if (wild == 0) {
        if (inv.nil_n < 2) throw UnsupportedCase("outside the computed range: p does not divide e but n < 2");
        const Int count = divisor_sum_count(p, f, e);
        const BaseField Qp = make_base_field(p, 1, 1);
        if (count != count_tame_gcdsum(Qp, f, e).count)
            throw Error("internal: divisor-sum and gcd-sum forms disagree");
        return {count, "chain-tame-divisor-sum", ""};
    }
    if (wild == 1) {
        if (n < Ratio(3) + Ratio(1, p - 1) - t_over_e)
            throw UnsupportedCase("outside the computed range: p||e requires n >= 3 + 1/(p-1) - t/e");
        CountReport r = count_wild_p(make_base_field(p, 1, 1), f, e);
        r.method = "chain-" + r.method;
        return r;
    }
    if (wild == 2) {
        if (p <= 2) throw UnsupportedCase("outside the computed range: p^2||e requires p > 2");
        if (n < Ratio(4) + Ratio(1, p - 1) - t_over_e)
            throw UnsupportedCase("outside the computed range: p^2||e requires n >= 4 + 1/(p-1) - t/e");
        if (gcd(pow_int(p, f) - 1, Int(e)) != 1)
            throw UnsupportedCase("outside the computed range: p^2||e requires (p^f - 1, e) = 1");
        CountReport r = count_wild_p2(make_base_field(p, 1, 1), f, e);
        r.method = "chain-" + r.method;
        return r;
    }
    throw UnsupportedCase("outside the computed range: p^3 divides e");
}

}  // namespace padic
