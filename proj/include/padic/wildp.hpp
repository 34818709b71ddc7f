#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "padic/exact.hpp"
#include "padic/fields.hpp"
#include "padic/krasner.hpp"
#include "padic/report.hpp"
#include "padic/tame.hpp"

namespace padic {

// Position of zeta_p relative to K and the fixed field K^gamma.
enum class ZetaCase { NotInK, InKNotFixed, InFixedField };

// Per-automorphism data feeding the degree-p subextension counters:
// A = n_F e0 f / o(gamma), d_gamma = (o(gamma), p-1).
struct GammaContext {
    std::int64_t A = 1;
    std::int64_t d_gamma = 1;
    ZetaCase zeta = ZetaCase::NotInK;
};

// Number of L in E(K,1,p) with gamma extendable to L and L/K Galois.
inline Int m1(const Int& p, const GammaContext& ctx) {
    const Int G_A = geometric_sum(p, ctx.A);        // (p^A - 1)/(p - 1)
    const Int G_A1 = geometric_sum(p, ctx.A + 1);
    const Int G_A2 = geometric_sum(p, ctx.A + 2);
    const Int d = ctx.d_gamma;
    switch (ctx.zeta) {
        case ZetaCase::NotInK: return (d - 1) * G_A + G_A1 - 1;
        case ZetaCase::InKNotFixed: return (d - 2) * G_A + 2 * G_A1 - 1;
        case ZetaCase::InFixedField: return (d - 1) * G_A + G_A2 - 1;
    }
    throw InvalidArgumentError("m1: bad zeta case");
}

// Number of L in E(K,1,p) with gamma extendable to L and L/K not Galois.
inline Int m2(const Int& p, const GammaContext& ctx) {
    const Int G_A = geometric_sum(p, ctx.A);
    const Int d = ctx.d_gamma;
    const Int tail = p - p * p - p * d * G_A;
    if (ctx.zeta == ZetaCase::NotInK) return pow_int(p, ctx.A + 2) + tail;
    return (p * p - p) * pow_int(p, ctx.A) + tail;
}

// Number of degree-p cyclic L/K that are Galois and nonabelian over K^gamma.
inline Int w_count(const Int& p, const GammaContext& ctx) {
    const Int G_A = geometric_sum(p, ctx.A);
    const Int d = ctx.d_gamma;
    if (ctx.zeta == ZetaCase::InKNotFixed) return (d - 2) * G_A + geometric_sum(p, ctx.A + 1);
    return (d - 1) * G_A;
}

// p*m1 + m2 collapses to a two-case expression depending only on whether
// zeta_p lies in the fixed field.
inline Int combined(const Int& p, std::int64_t A, bool zeta_in_fixed) {
    if (A < 1) throw InvalidArgumentError("combined: A must be >= 1");
    if (zeta_in_fixed) return 2 * pow_int(p, A + 2) - p * p;
    return (p * p + p) * pow_int(p, A) - p * p;
}

// zeta_p lies in K_h iff f_p | f, e_p | e0, and
// -h = (q^f - 1)/(q^(f_p) - 1)  (mod e_p).
inline bool zeta_in_Kh(const BaseField& F, std::int64_t f, std::int64_t e0, std::int64_t h) {
    const CyclotomicData& c = F.cyclo();
    if (f % c.f_p != 0 || e0 % c.e_p != 0) return false;
    const Int rhs = geometric_sum(pow_int(F.q, c.f_p), f / c.f_p);
    return mod_floor(Int(-h) - rhs, Int(c.e_p)) == 0;
}

// Selector for the inner sum: p^2 exactly when zeta_p lies in the fixed
// field K_h^{ij}, i.e. zeta_p is in K_h at all AND the automorphism
// mu^i nu^j fixes it, the latter being the congruence
//   (e0/b) i + (q^(c_h j)-1)/(q^(c_h)-1) v_h = (q^(c_h j)-1)/(q^(f_p)-1)
//   (mod e_p)
// with f_p | c_h j. Both quotients are evaluated as geometric sums (exact,
// and zero for j = 0).
inline Int omega(const BaseField& F, std::int64_t f, std::int64_t e, const TameData& d,
                 std::int64_t i, std::int64_t j) {
    const CyclotomicData& c = F.cyclo();
    const std::int64_t e0 = d.e;
    const Int p = F.p;
    if (e % c.e_p != 0 || f % c.f_p != 0) return p;
    if (!zeta_in_Kh(F, f, e0, d.h)) return p;
    const std::int64_t cj = d.c_h * j;
    if (cj % c.f_p != 0) return p;
    const Int lhs = exact_div(Int(e0), d.b) * i + geometric_sum(pow_int(F.q, d.c_h), j) * d.v_h;
    const Int rhs = geometric_sum(pow_int(F.q, c.f_p), cj / c.f_p);
    return mod_floor(lhs - rhs, Int(c.e_p)) == 0 ? p * p : p;
}

struct WildPOptions {
    std::optional<Int> u_override;
    // Base coefficient of the (p^2 + omega) inner term; test fixture for
    // fault-injection runs. Leave unset for the real count.
    std::optional<Int> base_coefficient;
};

namespace detail {

// Memoizing evaluator for p^(n_F e0 f / o(h,i,j)).
class PowerCache {
public:
    explicit PowerCache(const Int& p) : p_(p) {}
    const Int& at(std::int64_t exponent) {
        auto it = cache_.find(exponent);
        if (it == cache_.end()) it = cache_.emplace(exponent, pow_int(p_, exponent)).first;
        return it->second;
    }

private:
    Int p_;
    std::map<std::int64_t, Int> cache_;
};

inline std::int64_t gamma_exponent(const BaseField& F, std::int64_t f, std::int64_t e0,
                                   const TameData& d, std::int64_t i, std::int64_t j) {
    const Int degree = Int(F.n_base) * e0 * f;
    return to_int64(exact_div(degree, Int(o_param(d, i, j))));
}

inline void require_wild_p(const BaseField& F, const ExtensionProfile& profile) {
    if (profile.m != 1) throw UnsupportedCase("not p||e: nu_p(e) = " + std::to_string(profile.m));
    F.cyclo();  // cyclotomic data is required unconditionally for p||e
}

}  // namespace detail

// Main count for p||e: (1/fe) sum_h ( -p^2 b f / c_h
//   + sum_{i<b} sum_{j<f/c_h} (p^2 + omega_hij) p^(n_F e0 f / o(h,i,j)) ).
inline CountReport count_wild_p(const BaseField& F, std::int64_t f, std::int64_t e,
                                const WildPOptions& opts = {}) {
    const ExtensionProfile profile = make_profile(F, f, e);
    detail::require_wild_p(F, profile);
    const Int p = F.p;
    const Int base = opts.base_coefficient.value_or(p * p);
    detail::PowerCache powers(p);
    Int total = 0;
    for (std::int64_t h = 0; h < profile.e0; ++h) {
        const TameData d = tame_data(F, f, profile.e0, h, opts.u_override);
        Int inner = -exact_div(p * p * d.b * f, Int(d.c_h));
        for (std::int64_t i = 0; i < d.b; ++i)
            for (std::int64_t j = 0; j < f / d.c_h; ++j) {
                const std::int64_t A = detail::gamma_exponent(F, f, profile.e0, d, i, j);
                inner += (base + omega(F, f, e, d, i, j)) * powers.at(A);
            }
        total += inner;
    }
    return {ratio_to_int(Ratio(total, Int(f) * Int(e))), "wild-p-aut-sum", ""};
}

// Independent assembly of the same count from the per-field splits: the
// zeta-free inner sum -p^2 b f / c_h + (p^2 + p) sum p^A for every h, plus
// the correction (p^2 - p) sum over the congruence-selected (i, j) when
// zeta_p lies in K_h. Kept as a second code path for cross-validation.
inline CountReport count_wild_p_via_props(const BaseField& F, std::int64_t f, std::int64_t e,
                                          const WildPOptions& opts = {}) {
    const ExtensionProfile profile = make_profile(F, f, e);
    detail::require_wild_p(F, profile);
    const Int p = F.p;
    const CyclotomicData& c = F.cyclo();
    detail::PowerCache powers(p);
    Int total = 0;
    for (std::int64_t h = 0; h < profile.e0; ++h) {
        const TameData d = tame_data(F, f, profile.e0, h, opts.u_override);
        Int inner = -exact_div(p * p * d.b * f, Int(d.c_h));
        const bool zeta_here = zeta_in_Kh(F, f, profile.e0, h);
        for (std::int64_t i = 0; i < d.b; ++i)
            for (std::int64_t j = 0; j < f / d.c_h; ++j) {
                const std::int64_t A = detail::gamma_exponent(F, f, profile.e0, d, i, j);
                inner += (p * p + p) * powers.at(A);
                if (!zeta_here) continue;
                const std::int64_t cj = d.c_h * j;
                if (cj % c.f_p != 0) continue;
                const Int lhs =
                    exact_div(Int(profile.e0), d.b) * i + geometric_sum(pow_int(F.q, d.c_h), j) * d.v_h;
                const Int rhs = geometric_sum(pow_int(F.q, c.f_p), cj / c.f_p);
                if (mod_floor(lhs - rhs, Int(c.e_p)) == 0) inner += (p * p - p) * powers.at(A);
            }
        total += inner;
    }
    return {ratio_to_int(Ratio(total, Int(f) * Int(e))), "wild-p-subext-split", ""};
}

// Per-(h,i,j) diagnostics behind the wild-p sum.
struct WildDetailRow {
    std::int64_t h, i, j;
    Int t;
    std::int64_t o;
    Int omega;
    std::int64_t exponent;
};

inline std::vector<WildDetailRow> wild_p_detail(const BaseField& F, std::int64_t f, std::int64_t e,
                                                const WildPOptions& opts = {}) {
    const ExtensionProfile profile = make_profile(F, f, e);
    detail::require_wild_p(F, profile);
    std::vector<WildDetailRow> rows;
    for (std::int64_t h = 0; h < profile.e0; ++h) {
        const TameData d = tame_data(F, f, profile.e0, h, opts.u_override);
        for (std::int64_t i = 0; i < d.b; ++i)
            for (std::int64_t j = 0; j < f / d.c_h; ++j)
                rows.push_back({h, i, j, t_param(d, i, j), o_param(d, i, j), omega(F, f, e, d, i, j),
                                detail::gamma_exponent(F, f, profile.e0, d, i, j)});
    }
    return rows;
}

}  // namespace padic
