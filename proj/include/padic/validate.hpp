#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "padic/chainrings.hpp"
#include "padic/classes.hpp"
#include "padic/exact.hpp"
#include "padic/fields.hpp"
#include "padic/krasner.hpp"
#include "padic/oracle.hpp"
#include "padic/tame.hpp"
#include "padic/wildp.hpp"
#include "padic/wildp2.hpp"

namespace padic {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;

    void fail(const std::string& message) {
        pass = false;
        if (detail.size() < 400) detail += message + "; ";
    }
};

struct ValidateOptions {
    bool tiny_grid = false;
    std::int64_t oracle_m_max = 3;
    std::int64_t oracle_n_max = 2;
    // Test fixture: recompute the wild-p count with one flipped coefficient
    // so the suite must go red.
    bool inject_omega_fault = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

namespace validate_detail {

inline std::string case_tag(const Int& p, std::int64_t f1, std::int64_t f, std::int64_t e) {
    std::ostringstream s;
    s << "p=" << p << " f1=" << f1 << " f=" << f << " e=" << e;
    return s.str();
}

inline CheckResult tame_triple_agreement(const ValidateOptions& o) {
    CheckResult check{"tame-triple-agreement"};
    const std::vector<Int> primes = o.tiny_grid ? std::vector<Int>{2, 3} : std::vector<Int>{2, 3, 5, 7};
    const std::int64_t f_max = o.tiny_grid ? 3 : 6;
    const std::int64_t e_max = o.tiny_grid ? 12 : 60;
    for (const Int& p : primes)
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= f_max; ++f)
                for (std::int64_t e = 1; e <= e_max; ++e) {
                    if (e % p == 0) continue;
                    const Int a = count_tame_prop41(F, f, e).count;
                    const Int b = count_tame_gcdsum(F, f, e).count;
                    if (a != b) check.fail("prop41 != gcdsum at " + case_tag(p, f1, f, e));
                    if (f1 == 1 && a != count_tame_divisor(F, f, e).count)
                        check.fail("prop41 != divisor-sum at " + case_tag(p, f1, f, e));
                }
        }
    return check;
}

inline CheckResult tame_u_invariance(const ValidateOptions& o) {
    CheckResult check{"tame-u-invariance"};
    const std::vector<Int> primes = o.tiny_grid ? std::vector<Int>{2} : std::vector<Int>{2, 3, 5, 7};
    const std::int64_t f_max = o.tiny_grid ? 3 : 6;
    const std::int64_t e_max = o.tiny_grid ? 8 : 60;
    for (const Int& p : primes)
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= f_max; ++f)
                for (std::int64_t e = 1; e <= e_max; ++e) {
                    if (e % p == 0) continue;
                    for (std::int64_t h = 0; h < e; ++h) {
                        const TameData base = tame_data(F, f, e, h);
                        for (std::int64_t k = 1; k <= 3; ++k) {
                            const TameData alt =
                                tame_data(F, f, e, h, base.u + k * base.u_stride);
                            for (std::int64_t i = 0; i < base.b; ++i)
                                for (std::int64_t j = 0; j < f / base.c_h; ++j)
                                    if (o_param(base, i, j) != o_param(alt, i, j)) {
                                        check.fail("o(h,i,j) changed under u shift at " +
                                                   case_tag(p, f1, f, e) + " h=" +
                                                   std::to_string(h));
                                        goto next_case;
                                    }
                        }
                    }
                next_case:;
                }
        }
    return check;
}

inline CheckResult wildp_lemma_identity(const ValidateOptions& o) {
    CheckResult check{"wildp-lemma-identity"};
    const std::vector<Int> primes{2, 3, 5};
    const std::int64_t a_max = o.tiny_grid ? 3 : 6;
    for (const Int& p : primes)
        for (std::int64_t A = 1; A <= a_max; ++A)
            for (const Int& d : divisors(p - 1))
                for (ZetaCase zeta :
                     {ZetaCase::NotInK, ZetaCase::InKNotFixed, ZetaCase::InFixedField}) {
                    if (zeta == ZetaCase::InKNotFixed && d < 2) continue;
                    const GammaContext ctx{A, to_int64(d), zeta};
                    const Int lhs = p * m1(p, ctx) + m2(p, ctx);
                    const Int rhs = combined(p, A, zeta == ZetaCase::InFixedField);
                    if (lhs != rhs)
                        check.fail("p*m1+m2 != combined at p=" + p.str() + " A=" +
                                   std::to_string(A) + " d=" + d.str());
                }
    return check;
}

inline CheckResult wildp_dual_path(const ValidateOptions& o) {
    CheckResult check{"wildp-dual-path"};
    const std::vector<Int> primes = o.tiny_grid ? std::vector<Int>{2, 3} : std::vector<Int>{2, 3, 5};
    const std::int64_t f_max = o.tiny_grid ? 2 : 4;
    const std::int64_t e0_max = o.tiny_grid ? 4 : 10;
    for (const Int& p : primes)
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= f_max; ++f)
                for (std::int64_t e0 = 1; e0 <= e0_max; ++e0) {
                    if (e0 % p == 0) continue;
                    const std::int64_t e = to_int64(p * e0);
                    WildPOptions wopts;
                    if (o.inject_omega_fault) wopts.base_coefficient = p * p - 1;
                    const Int a = count_wild_p(F, f, e, wopts).count;
                    const Int b = count_wild_p_via_props(F, f, e).count;
                    if (a != b) check.fail("aut-sum != subext-split at " + case_tag(p, f1, f, e));
                    const Int mass = mass_count(F, f, e).count;
                    if (b < 1 || b > mass)
                        check.fail("count outside [1, mass] at " + case_tag(p, f1, f, e));
                }
        }
    return check;
}

inline CheckResult wildp_u_invariance(const ValidateOptions& o) {
    CheckResult check{"wildp-u-invariance"};
    const std::vector<Int> primes{2, 3};
    const std::int64_t f_max = o.tiny_grid ? 2 : 4;
    const std::int64_t e0_max = o.tiny_grid ? 4 : 10;
    for (const Int& p : primes)
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= f_max; ++f)
                for (std::int64_t e0 = 1; e0 <= e0_max; ++e0) {
                    if (e0 % p == 0) continue;
                    const std::int64_t e = to_int64(p * e0);
                    const Int base = count_wild_p(F, f, e).count;
                    const TameData d0 = tame_data(F, f, e0, 0);
                    for (std::int64_t k = 1; k <= 3; ++k) {
                        WildPOptions wopts;
                        wopts.u_override = d0.u + k * d0.u_stride;
                        if (count_wild_p(F, f, e, wopts).count != base)
                            check.fail("count changed under u shift at " + case_tag(p, f1, f, e));
                    }
                }
        }
    return check;
}

inline CheckResult wildp2_dual_path(const ValidateOptions& o) {
    CheckResult check{"wildp2-dual-path"};
    const std::vector<Int> primes{3, 5};
    const std::int64_t f_max = o.tiny_grid ? 3 : 6;
    for (const Int& p : primes)
        for (std::int64_t f1 = 1; f1 <= (o.tiny_grid ? 1 : 2); ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= f_max; ++f) {
                std::int64_t taken = 0;
                for (std::int64_t e0 = 1; e0 <= 10 && taken < (o.tiny_grid ? 1 : 3); ++e0) {
                    if (e0 % p == 0) continue;
                    const std::int64_t e = to_int64(p * p * e0);
                    if (!check_assumptions(F, f, e).ok()) continue;
                    ++taken;
                    const Int a = count_wild_p2(F, f, e).count;
                    const Int b = count_wild_p2_via_components(F, f, e).count;
                    if (a != b) check.fail("closed != components at " + case_tag(p, f1, f, e));
                    // Third route: the raw phi-weighted divisor sum.
                    Int direct = 0;
                    for (const auto& comp : wild2_components(F, f, e)) {
                        if (comp.n0 < 0 || comp.n1 < 0 || comp.n2 < 0)
                            check.fail("negative component at " + case_tag(p, f1, f, e) + " d=" +
                                       comp.d.str());
                        direct += euler_phi(comp.d) * (comp.n0 + comp.n1 + comp.n2);
                    }
                    if (ratio_to_int(Ratio(direct, Int(f) * Int(e))) != a)
                        check.fail("phi-weighted divisor sum != closed at " +
                                   case_tag(p, f1, f, e));
                    const Int mass = mass_count(F, f, e).count;
                    if (a < 1 || a > mass)
                        check.fail("count outside [1, mass] at " + case_tag(p, f1, f, e));
                }
            }
        }
    // H1 + H2 must assemble the index-p^2 subgroup count in both branches.
    for (const Int& p : primes)
        for (std::int64_t mm = 1; mm <= 6; ++mm)
            for (std::int64_t A = 1; A <= 6; ++A) {
                const Int d = p * p * mm;
                if (H1_closed(p, d, A) + H2_closed(p, d, A) != kTLp2_closed(p, d, A))
                    check.fail("H1+H2 != kTLp2 at p=" + p.str() + " d=" + d.str() + " A=" +
                               std::to_string(A));
            }
    return check;
}

inline CheckResult chain_dual_form(const ValidateOptions& o) {
    CheckResult check{"chain-dual-form"};
    const std::vector<Int> primes = o.tiny_grid ? std::vector<Int>{2, 3} : std::vector<Int>{2, 3, 5, 7};
    const std::int64_t f_max = o.tiny_grid ? 3 : 6;
    const std::int64_t e_max = o.tiny_grid ? 10 : 50;
    for (const Int& p : primes) {
        const BaseField Qp = make_base_field(p, 1, 1);
        for (std::int64_t f = 1; f <= f_max; ++f)
            for (std::int64_t e = 1; e <= e_max; ++e) {
                if (e % p == 0) continue;
                if (divisor_sum_count(p, f, e) != count_tame_gcdsum(Qp, f, e).count)
                    check.fail("divisor-sum != gcd-sum at " + case_tag(p, 1, f, e));
            }
    }
    // Threshold gates: at and above the boundary the ring count is the
    // field count.
    struct Gate {
        Int p;
        std::int64_t n, f, e, t;
    };
    const std::vector<Gate> gates{
        {2, 2, 2, 3, 1}, {2, 2, 1, 1, 1}, {3, 2, 3, 4, 2}, {2, 3, 1, 2, 2},  {2, 4, 1, 6, 3},
        {3, 3, 2, 3, 3}, {3, 4, 1, 9, 9}, {3, 5, 1, 9, 1}, {5, 4, 2, 25, 25}};
    for (const auto& g : gates) {
        const ChainRingInvariants inv{g.p, g.n, g.f, g.e, g.t};
        const BaseField Qp = make_base_field(g.p, 1, 1);
        try {
            const Int chain = chain_count(inv).count;
            const Int classes = count_classes(Qp, g.f, g.e).count;
            if (chain != classes)
                check.fail("chain count != class count at p=" + g.p.str() + " f=" +
                           std::to_string(g.f) + " e=" + std::to_string(g.e));
        } catch (const Error& err) {
            check.fail(std::string("chain gate unexpectedly failed: ") + err.what());
        }
    }
    return check;
}

inline CheckResult oracle_sweep_check(const ValidateOptions& o) {
    CheckResult check{"oracle-sweep"};
    const SweepResult sweep_result =
        sweep({2, 3}, o.tiny_grid ? 2 : o.oracle_m_max, o.tiny_grid ? 1 : o.oracle_n_max);
    if (sweep_result.reports.empty()) check.fail("sweep produced no reports");
    for (const auto& r : sweep_result.reports) {
        if (!r.match)
            check.fail("oracle mismatch at p=" + r.p.str() + " m=" + std::to_string(r.m) + " n=" +
                       std::to_string(r.n));
        // The index-p closed form must also match the subgroup-count formula.
        if (r.index == SubgroupCountReport::Index::P &&
            r.brute_count != kTMp_closed(r.p, r.p * r.m, r.n))
            check.fail("index-p count != kTMp closed form at p=" + r.p.str() + " m=" +
                       std::to_string(r.m) + " n=" + std::to_string(r.n));
    }
    return check;
}

inline CheckResult mass_identities(const ValidateOptions& o) {
    CheckResult check{"mass-identities"};
    const std::vector<Int> primes = o.tiny_grid ? std::vector<Int>{2, 3} : std::vector<Int>{2, 3, 5, 7};
    const std::int64_t e_max = o.tiny_grid ? 10 : 60;
    for (const Int& p : primes)
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= 3; ++f)
                for (std::int64_t e = 1; e <= e_max; ++e) {
                    const Int mass = mass_count(F, f, e).count;
                    if (e % p != 0 && mass != e)
                        check.fail("mass != e for tame e at " + case_tag(p, f1, f, e));
                    if (mass < e) check.fail("mass < e at " + case_tag(p, f1, f, e));
                }
        }
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);
    if (mass_count(Q2, 1, 2).count != 6) check.fail("mass(Q2,1,2) != 6");
    if (mass_count(Q3, 1, 9).count != 5085) check.fail("mass(Q3,1,9) != 5085");
    return check;
}

inline CheckResult known_counts(const ValidateOptions& o) {
    CheckResult check{"known-small-counts"};
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);
    struct Known {
        const BaseField* F;
        std::int64_t f, e;
        Int expect;
    };
    const std::vector<Known> known{{&Q3, 1, 2, 2}, {&Q2, 1, 3, 1}, {&Q2, 2, 3, 2},
                                   {&Q2, 1, 2, 6}, {&Q3, 1, 3, 9}, {&Q2, 1, 6, 30},
                                   {&Q3, 1, 6, 51}};
    for (const auto& k : known) {
        WildPOptions wopts;
        if (o.inject_omega_fault) wopts.base_coefficient = k.F->p * k.F->p - 1;
        const ExtensionProfile pr = make_profile(*k.F, k.f, k.e);
        const Int got = pr.m == 1 ? count_wild_p(*k.F, k.f, k.e, wopts).count
                                  : count_classes(*k.F, k.f, k.e).count;
        if (got != k.expect)
            check.fail("classes(" + k.F->p.str() + "-adic, f=" + std::to_string(k.f) + ", e=" +
                       std::to_string(k.e) + ") = " + got.str() + ", expected " + k.expect.str());
    }
    if (count_wild_p2(Q3, 1, 9).count != 753) check.fail("classes(Q3,1,9) != 753");
    return check;
}

}  // namespace validate_detail

inline ValidationReport run_validation(const ValidateOptions& opts = {}) {
    ValidationReport report;
    report.checks.push_back(validate_detail::tame_triple_agreement(opts));
    report.checks.push_back(validate_detail::tame_u_invariance(opts));
    report.checks.push_back(validate_detail::wildp_lemma_identity(opts));
    report.checks.push_back(validate_detail::wildp_dual_path(opts));
    report.checks.push_back(validate_detail::wildp_u_invariance(opts));
    report.checks.push_back(validate_detail::wildp2_dual_path(opts));
    report.checks.push_back(validate_detail::chain_dual_form(opts));
    report.checks.push_back(validate_detail::oracle_sweep_check(opts));
    report.checks.push_back(validate_detail::mass_identities(opts));
    report.checks.push_back(validate_detail::known_counts(opts));
    for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace padic
